"""Independent reference computations used to freeze and cross-check expected values.

Nothing here imports the algorithms under test; only plain lists of Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import factorial


def long_mul(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n + 1)
    for i in range(min(len(a), n + 1)):
        for j in range(min(len(b), n + 1 - i)):
            out[i + j] += a[i] * b[j]
    return out


def solve_lower_triangular_inverse(a: list[Fraction], n: int) -> list[Fraction]:
    """Inverse series coefficients from the full (n+1)x(n+1) Toeplitz system T x = e_0,
    solved by generic Gaussian elimination."""
    T = [[a[i - j] if 0 <= i - j < len(a) else Fraction(0) for j in range(n + 1)] for i in range(n + 1)]
    rhs = [Fraction(1)] + [Fraction(0)] * n
    M = [row[:] + [r] for row, r in zip(T, rhs)]
    size = n + 1
    for c in range(size):
        p = next(r for r in range(c, size) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        for r in range(size):
            if r != c and M[r][c] != 0:
                f = M[r][c] / M[c][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[i][size] / M[i][i] for i in range(size)]


def sin_half_taylor(n: int) -> list[Fraction]:
    """sin(x)/x at x = t/2 from the plain Taylor series of sin."""
    out = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        # sin x = sum (-1)^j x^{2j+1}/(2j+1)!, divide by x, substitute x = t/2
        if k % 2 == 0:
            j = k // 2
            out[k] = Fraction((-1) ** j, factorial(2 * j + 1)) / Fraction(2) ** (2 * j)
    return out


def log_by_composition(s: list[Fraction], n: int) -> list[Fraction]:
    """log(1 + x) = sum (-1)^{k+1} x^k / k, with x = s - 1 and x(0) = 0."""
    x = [Fraction(0)] + list(s[1 : n + 1])
    out = [Fraction(0)] * (n + 1)
    power = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        power = long_mul(power, x, n)
        for i in range(n + 1):
            out[i] += Fraction((-1) ** (k + 1), k) * power[i]
    return out


def log_sine_bernoulli(k: int, bern) -> Fraction:
    """[x^{2k}] log(sin x / x) = (-1)^k 2^{2k-1} B_{2k} / (k (2k)!); returned at x = t/2."""
    c = Fraction((-1) ** k * 2 ** (2 * k - 1), k * factorial(2 * k)) * bern(2 * k)
    return c / 4**k


def bernoulli_by_sum(n: int) -> Fraction:
    """B_n (B_1 = -1/2 convention) from the explicit double sum
    B_n = sum_{k=0}^n 1/(k+1) sum_{j=0}^k (-1)^j C(k,j) j^n."""
    from math import comb

    total = Fraction(0)
    for k in range(n + 1):
        inner = sum((-1) ** j * comb(k, j) * j**n for j in range(k + 1))
        total += Fraction(inner, k + 1)
    return total


def ghost_types(g: int, h: int) -> list[tuple]:
    types = [("c", a) for a in range(1, g + 1)]
    types += [("o", a, b) for a in range(g + 1) for b in range(1, h + 1) if 2 * a + b - 1 >= 1]
    return types


def bruteforce_partitions(g: int, h: int) -> set[tuple[tuple, tuple]]:
    """(sorted closed, sorted open) pairs by trying every multiset of ghost types."""
    types = ghost_types(g, h)
    out = set()
    for size in range(0, g + h + 1):
        for combo in combinations_with_replacement(types, size):
            gs = sum(t[1] for t in combo)
            hs = 1 + sum(t[2] - 1 for t in combo if t[0] == "o")
            if gs == g and hs == h:
                closed = tuple(sorted(t[1] for t in combo if t[0] == "c"))
                opens = tuple(sorted((t[1], t[2]) for t in combo if t[0] == "o"))
                out.add((closed, opens))
    return out


def stabilizer_order(labels: list) -> int:
    """Permutations of positions fixing the labelled list."""
    n = len(labels)
    return sum(1 for p in permutations(range(n)) if all(labels[p[i]] == labels[i] for i in range(n)))


def distinct_orderings(labels: list) -> int:
    return len(set(permutations(labels)))


def ordered_compositions(g: int) -> list[tuple[int, ...]]:
    """Compositions of g by brute force over binary cut masks."""
    if g == 0:
        return [()]
    out = []
    for mask in range(2 ** (g - 1)):
        parts, cur = [], 1
        for i in range(g - 1):
            if mask >> i & 1:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        parts.append(cur)
        out.append(tuple(parts))
    return out
