"""Independent oracles used to cross-check the main implementations.

Everything here is deliberately written against different algorithms than
the package: Hilbert values by counting standard monomials under a Groebner
basis, binary-quadric coprimality by exact root comparison over quadratic
extensions, and decomposition counts by a bitmask partition DP.
"""

from __future__ import annotations

from fractions import Fraction

from toric_deform.groebner import buchberger, monomials_of_degree
from toric_deform.lattice import LatticePolygon, edge_vectors
from toric_deform.polynomials import GREVLEX, Ideal, Polynomial, exponent_divides


def hilbert_by_standard_monomials(ideal: Ideal, d_max: int) -> list[int]:
    """H(d) as the number of degree-d monomials outside the lead ideal."""
    gens = ideal.nonzero_generators()
    n = len(ideal.variables)
    leads = []
    if gens:
        gb = buchberger(Ideal(gens, ideal.variables))
        leads = [g.leading_exponent(GREVLEX) for g in gb.elements]
    out = []
    for d in range(d_max + 1):
        count = sum(1 for mono in monomials_of_degree(n, d)
                    if not any(exponent_divides(l, mono) for l in leads))
        out.append(count)
    return out


def _squarefree_part(n: int) -> int:
    assert n > 0
    result = 1
    d = 2
    while d * d <= n:
        power = 0
        while n % d == 0:
            n //= d
            power += 1
        if power % 2:
            result *= d
        d += 1
    return result * n


def quadric_roots(f: Polynomial) -> frozenset:
    """Roots in the projective line of a nonzero binary quadric, as exact
    hashable tokens (rational, infinite, or conjugate quadratic-surd pairs)."""
    coeff = {2: Fraction(0), 1: Fraction(0), 0: Fraction(0)}
    for (i, j), c in f.terms.items():
        assert i + j == 2
        coeff[i] = c
    a, b, c = coeff[2], coeff[1], coeff[0]
    roots = []
    if a == 0:
        roots.append(("inf",))
        if b == 0:
            roots.append(("inf",))  # double root at infinity
        else:
            roots.append(("rat", -c / b))
        return frozenset(roots)
    disc = b * b - 4 * a * c
    if disc == 0:
        roots.append(("rat", -b / (2 * a)))
    else:
        num = disc.numerator * disc.denominator  # sign preserved, square-free below
        sign = 1 if num > 0 else -1
        square_free = sign * _squarefree_part(abs(num))
        # disc = square_free * s^2 for rational s > 0
        s2 = disc / square_free
        s = _fraction_sqrt(s2)
        if square_free == 1:
            roots.append(("rat", (-b + s) / (2 * a)))
            roots.append(("rat", (-b - s) / (2 * a)))
        else:
            roots.append(("alg", -b / (2 * a), s / (2 * a), square_free))
            roots.append(("alg", -b / (2 * a), -s / (2 * a), square_free))
    return frozenset(roots)


def _fraction_sqrt(q: Fraction) -> Fraction:
    num = _int_sqrt_exact(q.numerator)
    den = _int_sqrt_exact(q.denominator)
    return Fraction(num, den)


def _int_sqrt_exact(n: int) -> int:
    from math import isqrt
    r = isqrt(n)
    assert r * r == n, f"{n} is not a perfect square"
    return r


def quadrics_coprime(f: Polynomial, g: Polynomial) -> bool:
    return not (quadric_roots(f) & quadric_roots(g))


def decomposition_count_bitmask(polygon: LatticePolygon) -> int:
    """Count partitions of the primitive edge copies into minimal zero-sum
    parts by an index-bitmask dynamic program (independent of the multiset
    backtracking used by the package)."""
    ev = edge_vectors(polygon)
    vectors: list[tuple[int, int]] = []
    for prim, length in zip(ev.primitives, ev.lengths):
        vectors.extend([prim] * length)
    n = len(vectors)
    assert n <= 14, "oracle is exponential; keep it small"
    full = (1 << n) - 1
    sums = [(0, 0)] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = sums[mask & (mask - 1)]
        sums[mask] = (rest[0] + vectors[low][0], rest[1] + vectors[low][1])
    zero_masks = [m for m in range(1, full + 1) if sums[m] == (0, 0)]
    zero_set = set(zero_masks)

    def minimal(mask: int) -> bool:
        sub = (mask - 1) & mask
        while sub:
            if sub in zero_set:
                return False
            sub = (sub - 1) & mask
        return True

    parts = [m for m in zero_masks if minimal(m)]
    memo = {0: 1}

    def count(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        low = 1 << ((mask & -mask).bit_length() - 1)
        total = 0
        for part in parts:
            if part & low and part & mask == part:
                total += count(mask & ~part)
        memo[mask] = total
        return total

    return count(full)


def univariate_product(variables: tuple[str, ...], roots: list[int]) -> Polynomial:
    """Monic univariate polynomial with the given integer roots."""
    x = Polynomial.variable(variables, variables[0])
    out = Polynomial.constant(variables, 1)
    for r in roots:
        out = out * (x - r)
    return out
