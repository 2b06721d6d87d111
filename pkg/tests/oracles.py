"""Independent slow implementations used as ground truth in tests."""


def trial_factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def admissible(ell: int, c: int) -> bool:
    """Digit-by-digit check of every prime power in c."""
    if c < 2:
        return False
    for q, n in trial_factor(c).items():
        if q == ell:
            if n != 2:
                return False
        elif q % ell != 1 or n != 1:
            return False
    return True


def is_prime(n: int) -> bool:
    return n >= 2 and trial_factor(n) == {n: 1}


def primitive_root(m: int) -> int:
    phi = sum(1 for x in range(1, m) if _gcd(x, m) == 1)
    for g in range(2, m):
        if _gcd(g, m) != 1:
            continue
        x, k = g, 1
        while x != 1:
            x = x * g % m
            k += 1
        if k == phi:
            return g
    raise ValueError(m)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def index_table(m: int, g: int | None = None) -> dict[int, int]:
    """Discrete logarithm of every unit by walking the powers of g."""
    g = primitive_root(m) if g is None else g
    out, x, e = {}, 1, 0
    while x not in out:
        out[x] = e
        x = x * g % m
        e += 1
    return out


def is_cube(m: int, r: int) -> bool:
    r %= m
    return any(pow(x, 3, m) == r for x in range(1, m))
