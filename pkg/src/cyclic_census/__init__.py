"""Classification and census engine for cyclic fields of odd prime degree."""
