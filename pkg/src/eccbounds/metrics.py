"""Average eccentricity and the two Zagreb eccentricity indices.

``sigma0`` is the mean eccentricity, ``sigma1`` the sum of squared
eccentricities and ``sigma2`` the sum over edges of the product of endpoint
eccentricities.  Everything here is exact: ``sigma0`` is a Fraction.

The module also provides the contribution of a diametric path to each index
(``path_contribution``) and the maximum of each index over trees with given
order and diameter (``tree_max_bound``).  Both are defined structurally; the
expanded polynomial forms are kept alongside as ``*_closed`` helpers and are
regression-tested against the structural ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .graph import Graph, eccentricities, iter_bits

INDEX_NAMES = ("sigma0", "sigma1", "sigma2")


@dataclass(frozen=True, slots=True)
class IndexReport:
    n: int
    ecc_sum: int
    sigma0: Fraction
    sigma1: int
    sigma2: int

    def value(self, index: int | str) -> Fraction | int:
        return getattr(self, index_name(index))


def index_name(index: int | str) -> str:
    if isinstance(index, str):
        if index not in INDEX_NAMES:
            raise ValueError(f"unknown index {index!r}")
        return index
    if index not in (0, 1, 2):
        raise ValueError(f"index id must be 0, 1 or 2, got {index!r}")
    return INDEX_NAMES[index]


def indices_from_ecc(g: Graph, ecc: Sequence[int]) -> IndexReport:
    total = sum(ecc)
    s1 = sum(e * e for e in ecc)
    s2 = 0
    for u, row in enumerate(g.adj):
        eu = ecc[u]
        for v in iter_bits(row >> (u + 1) << (u + 1)):
            s2 += eu * ecc[v]
    return IndexReport(n=g.n, ecc_sum=total, sigma0=Fraction(total, g.n), sigma1=s1, sigma2=s2)


def indices(g: Graph) -> IndexReport:
    """Exact sigma0, sigma1, sigma2; raises on disconnected input."""
    return indices_from_ecc(g, eccentricities(g))


def path_ecc_sequence(d: int) -> list[int]:
    """Eccentricities along a diametric path of length ``d`` in a tree."""
    if d < 1:
        raise ValueError("diameter must be at least 1")
    return [max(i, d - i) for i in range(d + 1)]


def path_contribution(i: int, d: int) -> int:
    seq = path_ecc_sequence(d)
    if i == 0:
        return sum(seq)
    if i == 1:
        return sum(e * e for e in seq)
    if i == 2:
        return sum(a * b for a, b in zip(seq, seq[1:]))
    raise ValueError(f"index id must be 0, 1 or 2, got {i!r}")


def g0_closed(d: int) -> int:
    return -((-3 * d * d) // 4) + d


def g1_closed(d: int) -> int:
    val = Fraction(d * d + d, 12) * (7 * d + 5)
    if d % 2 == 0:
        val -= Fraction(d, 4)
    assert val.denominator == 1
    return int(val)


def g2_closed(d: int) -> int:
    num = 7 * d**3 - 4 * d if d % 2 == 0 else 7 * d**3 - d + 6
    assert num % 12 == 0
    return num // 12


def _check_tree_range(n: int, d: int) -> None:
    if d == 1 and n == 2:
        return
    if not 2 <= d <= n - 1:
        raise ValueError(f"need 2 <= d <= n-1 (or n=2, d=1), got n={n}, d={d}")


def tree_max_bound(i: int, n: int, d: int) -> Fraction:
    """Largest value of index ``i`` over ``n``-vertex trees of diameter ``d``.

    Attained by the double-brooms: a diametric path plus ``n-d-1`` leaves,
    each with eccentricity ``d`` hanging off a vertex of eccentricity ``d-1``.
    """
    _check_tree_range(n, d)
    extra = n - d - 1
    if i == 0:
        return Fraction(extra * d + path_contribution(0, d), n)
    if i == 1:
        return Fraction(extra * d * d + path_contribution(1, d))
    if i == 2:
        return Fraction(extra * d * (d - 1) + path_contribution(2, d))
    raise ValueError(f"index id must be 0, 1 or 2, got {i!r}")


def tree_max_closed(i: int, n: int, d: int) -> Fraction:
    """Expanded polynomial forms of :func:`tree_max_bound`."""
    _check_tree_range(n, d)
    even = d % 2 == 0
    if i == 0:
        return d - Fraction(d * d // 4, n)
    if i == 1:
        return n * d * d - Fraction(5 * d * (d * d - 1), 12) - (Fraction(d, 4) if even else 0)
    if i == 2:
        corr = 4 * d if even else d - 6
        return n * (d * d - d) - Fraction(5 * d**3, 12) + d - Fraction(corr, 12)
    raise ValueError(f"index id must be 0, 1 or 2, got {i!r}")


def g2_display_literal(d: int) -> Fraction:
    """The g2 expansion read with the case term outside the 1/12 factor.

    Kept only so the regression suite can report where this reading departs
    from the path sum; nothing else uses it.
    """
    corr = 4 * d if d % 2 == 0 else d - 6
    return Fraction(7 * d**3, 12) + Fraction(1, 12) - corr


def binom2(x: int) -> int:
    return comb(x, 2) if x >= 2 else 0
