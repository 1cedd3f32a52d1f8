"""Independent oracles for the test suite.

Everything here recomputes its answer from first principles (repeated exact
division, extended Euclid, exhaustive search, literal window sums) so the
library's closed forms have something honest to disagree with.  Only the
plain data container is imported from the package; no computation paths.
"""

from __future__ import annotations

import math
from fractions import Fraction

from iwaspectra import FiniteSpectrumData


def int_valuation(p: int, n: int) -> int:
    """nu_p of a nonzero integer by repeated exact division."""
    assert n != 0
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rational_valuation(p: int, x) -> int:
    x = Fraction(x)
    assert x != 0
    return int_valuation(p, x.numerator) - int_valuation(p, x.denominator)


def extended_euclid(a: int, b: int):
    """(g, s, t) with a*s + b*t = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def euclid_inverse(a: int, m: int) -> int:
    g, s, _ = extended_euclid(a % m, m)
    assert g == 1, f"{a} is not invertible mod {m}"
    return s % m


def sphere_exponent_bruteforce(p: int, t: int):
    """Exponent of |pi_t| of the K(1)-local sphere by exhaustive search for a
    representation t = 2(p-1) p^k r - 1 with k >= 0 and r a nonzero integer
    prime to p.  math.inf for the Zp-hat degrees t = -1, 0."""
    if t in (-1, 0):
        return math.inf
    if t % 2 == 0:
        return 0
    target = t + 1  # = 2(p-1) p^k r if a representation exists
    base = 2 * (p - 1)
    k = 0
    while base * p ** k <= abs(target):
        block = base * p ** k
        if target % block == 0 and (target // block) % p != 0:
            return k + 1
        k += 1
    return 0


def horner_eval(coeffs_constant_first, x) -> Fraction:
    """Polynomial evaluation from expanded coefficients; independent of the
    package's factor-wise routes."""
    acc = Fraction(0)
    for c in reversed(coeffs_constant_first):
        acc = acc * Fraction(x) + c
    return acc


def window_average_bruteforce(p: int, betti: dict, skip: int, length: int) -> Fraction:
    """Literal alternating window average, summing the order of each wedge
    summand per degree, with exponents from the brute-force sphere search."""
    total = 0
    for j in range(skip + 1, skip + length + 1):
        term = 0
        for d, r in betti.items():
            e = sphere_exponent_bruteforce(p, j - d)
            assert e != math.inf, f"infinite order at window degree {j}"
            term += r * p ** e
        total += term if j % 2 == 0 else -term
    return Fraction(total, length)


def random_spectrum(rng, p, max_cells: int = 6, degree_bound: int = 10,
                    max_rank: int = 4, torsion_prob: float = 0.4) -> FiniteSpectrumData:
    degrees = rng.sample(range(-degree_bound, degree_bound + 1), rng.randint(0, max_cells))
    betti = {d: rng.randint(1, max_rank) for d in degrees}
    torsion = {}
    if rng.random() < torsion_prob:
        for d in rng.sample(range(-degree_bound, degree_bound + 1), rng.randint(1, 3)):
            torsion[d] = rng.choice(["a", "b", "zpk"])
    return FiniteSpectrumData(p, betti, torsion)
