from collections import Counter
from itertools import permutations

import pytest

from cyclic_census import census
from cyclic_census.classify import (GRAPHS, CategoryGraph, UnsupportedConductor, classify, decide,
                                    doublet_graph, parse_symbol, rank_distribution, role_assignment,
                                    shape_of)
from cyclic_census.conductor import Conductor, decompose
from cyclic_census.residue_graph import residue_graph


@pytest.mark.parametrize("c,label,symbol", [
    (8541, "III/6", "{9<->73->13}"),
    (4599, "III/7", "{9<->73<-7}"),
    (16471, "III/9", "{13->7<->181->13}"),
    (14049, "III/5", "{7<->223;9}"),
    (20293, "III/8", "{13->7<->223<-13}"),
    (6327, "II/2", "{19->9<-37->19}"),
    (7657, "I/2", "{31<-19->13}"),
    (38311, "IV/3", None),
    (61579, "IV/1", None),
    (49543, "IV/2", None),
    (1953, "III/1", "{7,9,31;delta!=0}"),
    (4977, "I/1", "{7,9,79;delta=0}"),
])
def test_classify_examples(c, label, symbol):
    cg = classify(decompose(3, c))
    assert cg.label == label
    if symbol:
        assert parse_symbol(cg.symbol).shape() == parse_symbol(symbol).shape()
        assert sorted(parse_symbol(cg.symbol).primes) == sorted(parse_symbol(symbol).primes)


@pytest.mark.parametrize("label,ranks", [("Singlet/1", (0,)), ("II/1", (3, 3, 2, 2)),
                                         ("V/1", (4, 4, 4, 4)), ("III/4", (2, 2, 2, 2)),
                                         ("I/2", (3, 2, 2, 2)), ("IV/2", (3, 3, 3, 3)),
                                         ("Doublet/1", (1, 1)), ("Doublet/3", (2, 2))])
def test_rank_distribution(label, ranks):
    cat, g = label.split("/")
    assert rank_distribution(CategoryGraph(cat, int(g))) == ranks


def test_rank_vector_length_is_multiplicity():
    for c in (7, 63, 819):
        cond = decompose(3, c)
        assert len(rank_distribution(classify(cond))) == cond.multiplicity or cond.t == 1


@pytest.mark.parametrize("c,g", [(657, 3), (1267, 3)])
def test_doublet_graph(c, g):
    assert doublet_graph(decompose(3, c)).graph == g


def test_doublet_63_not_mutual():
    assert doublet_graph(decompose(3, 63)).graph in (1, 2)


def test_unsupported():
    with pytest.raises(UnsupportedConductor):
        classify(decompose(3, 15561))
    with pytest.raises(UnsupportedConductor):
        doublet_graph(decompose(3, 819))
    with pytest.raises(ValueError):
        CategoryGraph("III", 10)


def test_decide_covers_all_digraphs():
    # every labeled digraph on three vertices lands on one valid label
    from cyclic_census.residue_graph import graph_counts
    pairs = [(i, j) for i in range(3) for j in range(3) if i != j]
    seen = Counter()
    for mask in range(1 << 6):
        edges = frozenset(p for k, p in enumerate(pairs) if mask >> k & 1)
        bid, knt, att, rep = graph_counts(3, edges)
        for dz in (False, True) if not edges else (False,):
            seen[decide(bid, knt, att, rep, dz)] += 1
    assert len(seen) == 17 == sum(len(GRAPHS[c]) for c in ("I", "II", "III", "IV", "V"))
    assert seen[("V", 1)] == 1


def test_partition_below_1e5():
    conds = census.conductors_with_t(100_000, 3)
    labels = Counter(classify(c).label for c in conds)
    assert sum(labels.values()) == len(conds) == 783
    assert labels["V/1"] == 0


@pytest.mark.parametrize("c", [8541, 4599, 16471, 14049, 20293, 6327, 7657, 38311, 3913, 4977])
def test_permutation_invariance(c):
    cond = decompose(3, c)
    base = classify(cond)
    for perm in permutations(cond.ramified_primes):
        cg = classify(Conductor(3, c, cond.e, perm))
        assert cg.label == base.label
        assert shape_of(residue_graph(Conductor(3, c, cond.e, perm))) == shape_of(residue_graph(cond))


def test_role_assignment_graph6():
    cond = decompose(3, 8541)
    g = residue_graph(cond)
    assert role_assignment("III", 6, g.primes, g.edges) == {"i": 9, "j": 73, "k": 13}
    assert role_assignment("III", 1, g.primes, g.edges) is None


def test_parse_symbol():
    p = parse_symbol("{13->7<->181->13}")
    assert p.primes == (13, 7, 181)
    assert p.edges == {(13, 7), (7, 181), (181, 7), (181, 13)}
    assert parse_symbol("{9,7,31;delta!=0}").delta_zero is False
    with pytest.raises(ValueError):
        parse_symbol("{a->7}")
