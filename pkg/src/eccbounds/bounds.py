"""Bound oracles: one pure function per extremal result.

Each oracle returns a :class:`BoundReport`.  Oracles never raise on parameters
outside their domain; they return ``applicable=False`` with a reason and no
value, so enumeration loops can simply skip.  All values are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .constructions import FamilySpec, spec
from .metrics import binom2, g2_closed, path_contribution, tree_max_bound

UPPER = "UPPER"
LOWER = "LOWER"


@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    direction: str
    index: str
    value: Fraction | None
    applicable: bool
    reason: str = ""
    extremal: tuple[FamilySpec, ...] = ()
    exceptional: bool = False
    # sharp: the value is claimed to be attained; strict: the inequality is strict
    sharp: bool = True
    strict: bool = False
    params: tuple[tuple[str, int], ...] = field(default=(), compare=False)

    def holds(self, observed) -> bool:
        """True when ``observed`` satisfies the bound (always True if inapplicable)."""
        if not self.applicable:
            return True
        if self.direction == UPPER:
            return observed < self.value if self.strict else observed <= self.value
        return observed > self.value if self.strict else observed >= self.value

    def attained(self, observed) -> bool:
        return self.applicable and observed == self.value


def _ok(bound_id, direction, index, value, params, **kw) -> BoundReport:
    return BoundReport(bound_id, direction, index, Fraction(value), True, params=tuple(params.items()), **kw)


def _na(bound_id, direction, index, reason, params) -> BoundReport:
    return BoundReport(bound_id, direction, index, None, False, reason=reason, sharp=False, params=tuple(params.items()))


def _index(i: int) -> str:
    return f"sigma{i}"


# -- edge counts ---------------------------------------------------------------


def ore_max_edges(n: int, d: int) -> int:
    """Most edges in an n-vertex graph of diameter d (2 <= d <= n-1)."""
    if not 2 <= d <= n - 1:
        raise ValueError(f"need 2 <= d <= n-1, got n={n}, d={d}")
    num = (n - d - 1) * (n - d + 4)
    value = d + num // 2
    assert num % 2 == 0
    assert value == comb(n - d, 2) + 2 * n - d - 2 == binom2(n - d - 1) + 3 * n - 2 * d - 3
    return value


def min_edges_chi(n: int, k: int) -> int:
    """Fewest edges in a connected n-vertex graph with chromatic (or clique) number k."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return binom2(k) + n - k


def lemma_ore_max_edges(n: int, d: int) -> BoundReport:
    bid, p = "lemma_ore_max_edges", {"n": n, "d": d}
    if not 2 <= d <= n - 1:
        return _na(bid, UPPER, "m", "needs 2 <= d <= n-1", p)
    extra = n - d - 1
    fams = [spec("ore_extremal", n=n, d=d, start=s) for s in range(d - 1)]
    if extra:
        fams += [
            spec("ore_extremal", n=n, d=d, start=s, split=t) for s in range(d - 2) for t in range(1, extra)
        ]
    return _ok(bid, UPPER, "m", ore_max_edges(n, d), p, extremal=tuple(fams))


def lemma_min_edges_chi(n: int, k: int) -> BoundReport:
    bid, p = "lemma_min_edges_chi", {"n": n, "k": k}
    if not 1 <= k <= n:
        return _na(bid, LOWER, "m", "needs 1 <= k <= n", p)
    return _ok(bid, LOWER, "m", min_edges_chi(n, k), p)


# -- diameter and radius ----------------------------------------------------------


def obs_sandwich(i: int, n: int, m: int, r: int, d: int) -> tuple[BoundReport, BoundReport]:
    """(lower, upper) for index ``i`` from radius and diameter alone.

    Both are attained exactly when every vertex has the same eccentricity.
    """
    p = {"i": i, "n": n, "m": m, "r": r, "d": d}
    if i not in (0, 1, 2) or not (0 <= r <= d) or n < 1:
        na = _na("obs_sandwich", LOWER, "sigma0", "needs i in {0,1,2}, n >= 1 and r <= d", p)
        return na, na
    weight = {0: 1, 1: n, 2: m}[i]
    power = 1 if i == 0 else 2
    lo = _ok("obs_sandwich", LOWER, _index(i), weight * r**power, p, sharp=False)
    hi = _ok("obs_sandwich", UPPER, _index(i), weight * d**power, p, sharp=False)
    return lo, hi


def lemma_tree_max(i: int, n: int, d: int) -> BoundReport:
    bid, p = "lemma_tree_max", {"i": i, "n": n, "d": d}
    if i not in (0, 1, 2):
        return _na(bid, UPPER, "sigma0", "index must be 0, 1 or 2", p)
    if not (2 <= d <= n - 1 or (n, d) == (2, 1)):
        return _na(bid, UPPER, _index(i), "needs 2 <= d <= n-1 (or n=2, d=1)", p)
    fams = tuple(spec("double_broom", n=n, d=d, a=a) for a in range(1, n - d + 1)) if d >= 2 else ()
    return _ok(bid, UPPER, _index(i), tree_max_bound(i, n, d), p, extremal=fams)


def lemma_diam_gt_half(i: int, n: int, d: int) -> BoundReport:
    """Strict bounds sigma0 < d and sigma1 < n d^2 once d > n/2."""
    bid, p = "lemma_diam_gt_half", {"i": i, "n": n, "d": d}
    if i not in (0, 1):
        return _na(bid, UPPER, "sigma0", "index must be 0 or 1", p)
    if not (2 * d > n and d <= n - 1):
        return _na(bid, UPPER, _index(i), "needs n/2 < d <= n-1", p)
    value = d if i == 0 else n * d * d
    return _ok(bid, UPPER, _index(i), value, p, sharp=False, strict=True)


def sigma2_diam_upper_coarse(n: int, d: int) -> BoundReport:
    bid, p = "thm_sigma2_diam_upper_coarse", {"n": n, "d": d}
    if not 2 <= d <= n - 1:
        return _na(bid, UPPER, "sigma2", "needs 2 <= d <= n-1", p)
    value = binom2(n - d) * d * d + 2 * (n - d - 1) * d * d + d**3
    assert value == ore_max_edges(n, d) * d * d
    return _ok(bid, UPPER, "sigma2", value, p, sharp=False)


def sigma2_diam_max(n: int, d: int) -> BoundReport:
    """Largest sigma2 at order n and diameter d, from the two kites."""
    from .constructions import kite_prime_sigma2, kite_sigma2

    bid, p = "thm_sigma2_diam_max", {"n": n, "d": d}
    if d == 2 and n >= 3:
        return _na(bid, UPPER, "sigma2", "d=2 is not covered by a formula; use the enumerated value", p)
    if not 3 <= d <= n - 1:
        return _na(bid, UPPER, "sigma2", "needs 3 <= d <= n-1", p)
    a, b = kite_sigma2(n, d), kite_prime_sigma2(n, d)
    winner = "kite" if 2 * d <= n + 2 else "kite_prime"
    return _ok(bid, UPPER, "sigma2", max(a, b), p, extremal=(spec(winner, n=n, d=d),))


def sigma01_diam_lower(i: int, n: int, d: int) -> BoundReport:
    bid, p = "prop_sigma01_diam_lower", {"i": i, "n": n, "d": d}
    if i not in (0, 1):
        return _na(bid, LOWER, "sigma0", "index must be 0 or 1", p)
    if not 1 <= d <= n - 1:
        return _na(bid, LOWER, _index(i), "needs 1 <= d <= n-1", p)
    c = -(-d // 2)
    extra = n - d - 1
    if i == 0:
        value = Fraction(path_contribution(0, d) + extra * c, n)
    else:
        value = Fraction(path_contribution(1, d) + extra * c * c)
    return _ok(bid, LOWER, _index(i), value, p, extremal=(spec("diam_lower", i=1, n=n, d=d),))


def sigma01_diam_lower_closed(i: int, n: int, d: int) -> Fraction:
    """Expanded forms of :func:`sigma01_diam_lower`."""
    c = -(-d // 2)
    if i == 0:
        return c + Fraction((d // 2) * ((d + 2) // 2), n)
    tail = 9 * d * d + 2 * d if d % 2 == 0 else 3 * d * d - 4 * d - 3
    return n * c * c + Fraction(d**3, 3) + Fraction(tail, 12)


def sigma2_nmd_lower(n: int, m: int, d: int) -> BoundReport:
    """Smallest sigma2 over connected graphs with n vertices, m edges, diameter d."""
    bid, p = "thm_sigma2_nmd_lower", {"n": n, "m": m, "d": d}
    if not 1 <= d <= n - 1:
        return _na(bid, LOWER, "sigma2", "needs 1 <= d <= n-1", p)
    if d == 1:
        if m != binom2(n):
            return _na(bid, LOWER, "sigma2", "diameter 1 forces m = C(n,2)", p)
        return _ok(bid, LOWER, "sigma2", m, p, extremal=(spec("complete", n=n),))
    if not n - 1 <= m <= ore_max_edges(n, d):
        return _na(bid, LOWER, "sigma2", "m outside [n-1, C(n-d,2)+2n-d-2]", p)
    fam = (spec("diam_lower", i=2, n=n, d=d, m=m),)
    exceptional = False
    if d == 2:
        k = 1
        while binom2(k + 1) + (k + 1) * (n - k - 1) <= m:
            k += 1
        nu = binom2(k) + k * (n - k)
        value = Fraction(binom2(k) + 2 * k * (n - k) + 4 * (m - nu))
    elif d % 2 == 1:
        lo, hi = 2 * n - 2 - d, binom2(n - d) + n - 1
        value = Fraction(g2_closed(d)) + Fraction((m - d) * (d + 1) ** 2, 4)
        k = lo - m if m < lo else (m - hi if m > hi else 0)
        value += Fraction(k * (d + 1), 2)
    else:
        k = 0
        while m > n - 1 + binom2(k) + 2 * k:
            k += 1
        value = Fraction(g2_closed(d)) + Fraction((m - d) * d * d, 4) + Fraction((n - 1 - d + k) * d, 2)
        if d == 4 and m == n and n >= 7:
            value += 3
            exceptional = True
    return _ok(bid, LOWER, "sigma2", value, p, extremal=fam, exceptional=exceptional)


def sigma2_diam_lower(n: int, d: int) -> BoundReport:
    """Smallest sigma2 at order n and diameter d (all edge counts)."""
    bid, p = "cor_sigma2_diam_lower", {"n": n, "d": d}
    if not 1 <= d <= n - 1:
        return _na(bid, LOWER, "sigma2", "needs 1 <= d <= n-1", p)
    c = -(-d // 2)
    value = path_contribution(2, d) + (n - 1 - d) * c * (c + 1)
    if d == 1:
        # K_n is the only graph; the formula is attained only for n <= 3
        return _ok(bid, LOWER, "sigma2", value, p, extremal=(spec("complete", n=n),), sharp=n <= 3)
    return _ok(bid, LOWER, "sigma2", value, p, extremal=(spec("diam_lower", i=2, n=n, d=d),))


# -- dominating vertices, chromatic and clique numbers ------------------------------


def obs_dominating_lower(i: int, n: int, s: int) -> BoundReport:
    """sigma0 >= 2 - s/n and sigma1 >= 4n - 3s; tight iff diameter <= 2."""
    bid, p = "obs_dominating_lower", {"i": i, "n": n, "s": s}
    if i not in (0, 1):
        return _na(bid, LOWER, "sigma0", "index must be 0 or 1", p)
    if n < 2 or not 0 <= s <= n:
        return _na(bid, LOWER, _index(i), "needs n >= 2 and 0 <= s <= n", p)
    value = 2 - Fraction(s, n) if i == 0 else Fraction(4 * n - 3 * s)
    return _ok(bid, LOWER, _index(i), value, p)


def chromatic_bounds(i: int, n: int, k: int, direction: str, param: str = "chromatic") -> BoundReport:
    """Lower and upper bounds on sigma0 / sigma1 at chromatic or clique number k."""
    kind = "lower" if direction == LOWER else "upper"
    bid = f"thm_{param}_{kind}"
    p = {"i": i, "n": n, "k": k}
    if param not in ("chromatic", "clique") or direction not in (LOWER, UPPER):
        return _na(bid, direction, "sigma0", "bad parameter kind or direction", p)
    if i not in (0, 1):
        return _na(bid, direction, "sigma0", "index must be 0 or 1", p)
    if not 2 <= k <= n - 1:
        return _na(bid, direction, _index(i), "needs 2 <= k <= n-1", p)
    if direction == LOWER:
        value = 2 - Fraction(k - 1, n) if i == 0 else Fraction(4 * n - 3 * k + 3)
        return _ok(bid, LOWER, _index(i), value, p, extremal=(spec("join_family", n=n, k=k, s=k - 1),))
    d = n - k + 1
    return _ok(bid, UPPER, _index(i), tree_max_bound(i, n, d), p, extremal=(spec("kite", n=n, d=d),))


def chromatic_s2_regime(n: int, k: int) -> int:
    if k <= (n + 1) // 2:
        return 1
    if k < -(-(2 * n + 1) // 3):
        return 2
    return 3


def chromatic_h(n: int, k: int, s: int) -> int:
    """sigma2 of K_s joined to K_{k-s} + an independent set, as h(s) + 2k(k-1)."""
    return binom2(s) + 2 * s * (n - 2 * k + 1) + 2 * k * (k - 1)


def sigma2_chromatic_lower(n: int, k: int, param: str = "chromatic") -> BoundReport:
    bid = f"thm_sigma2_{param}_lower"
    p = {"n": n, "k": k}
    if param not in ("chromatic", "clique"):
        return _na(bid, LOWER, "sigma2", "param must be chromatic or clique", p)
    if not 2 <= k <= n - 1:
        return _na(bid, LOWER, "sigma2", "needs 2 <= k <= n-1", p)
    regime = chromatic_s2_regime(n, k)
    if regime == 1:
        value = Fraction(2 * n + 2 * k * k - 6 * k + 2)
        opt = [1]
    elif regime == 2:
        value = Fraction((8 * k - 3) * n - 2 * n * n - 6 * k * k + 4 * k - 1)
        opt = [4 * k - 2 * n - 2, 4 * k - 2 * n - 1]
    else:
        value = 2 * (k - 1) * n - Fraction(3 * k * k, 2) + Fraction(5 * k, 2) - 1
        opt = [k - 1]
    fams = tuple(spec("join_family", n=n, k=k, s=s) for s in opt)
    return _ok(bid, LOWER, "sigma2", value, p, extremal=fams)


# -- matching number ------------------------------------------------------------------


def lemma_dominating_le_matching(n: int, k: int) -> BoundReport:
    bid, p = "lemma_dominating_le_matching", {"n": n, "k": k}
    if not 2 <= k < n // 2:
        return _na(bid, UPPER, "dominating", "needs 2 <= k < floor(n/2)", p)
    return _ok(bid, UPPER, "dominating", k, p, extremal=(spec("join_family", n=n, k=k, s=k),))


def matching_bounds(i: int, n: int, k: int, direction: str) -> BoundReport:
    kind = "lower" if direction == LOWER else "upper"
    bid = "prop_matching_lower" if direction == LOWER else "thm_matching_upper"
    p = {"i": i, "n": n, "k": k}
    if direction not in (LOWER, UPPER):
        return _na(bid, direction, "sigma0", "bad direction", p)
    if i not in (0, 1):
        return _na(bid, direction, "sigma0", "index must be 0 or 1", p)
    half = n // 2
    if direction == LOWER:
        if not 2 <= k < half:
            return _na(bid, LOWER, _index(i), f"{kind} bound needs 2 <= k < floor(n/2)", p)
        value = 2 - Fraction(k, n) if i == 0 else Fraction(4 * n - 3 * k)
        return _ok(bid, LOWER, _index(i), value, p, extremal=(spec("join_family", n=n, k=k, s=k),))
    if not 2 <= k <= half:
        return _na(bid, UPPER, _index(i), f"{kind} bound needs 2 <= k <= floor(n/2)", p)
    if k == half:
        return _ok(bid, UPPER, _index(i), tree_max_bound(i, n, n - 1), p, extremal=(spec("path", n=n),))
    fams = tuple(spec("double_broom", n=n, d=2 * k, a=a) for a in range(1, n - 2 * k + 1))
    return _ok(bid, UPPER, _index(i), tree_max_bound(i, n, 2 * k), p, extremal=fams)


def sigma2_matching_lower(n: int, k: int) -> BoundReport:
    bid, p = "thm_sigma2_matching_lower", {"n": n, "k": k}
    if not 2 <= k <= n // 2:
        return _na(bid, LOWER, "sigma2", "needs 2 <= k <= floor(n/2)", p)
    if 4 <= n <= 6 and k == n // 2:
        return _ok(bid, LOWER, "sigma2", binom2(n), p, extremal=(spec("complete", n=n),), exceptional=True)
    return _ok(bid, LOWER, "sigma2", 2 * n + 4 * k - 6, p, extremal=(spec("join_matching", n=n, k=k),))


# -- registry ---------------------------------------------------------------------------


def _both(fn: Callable[..., BoundReport], direction: str, **fixed) -> Callable[..., BoundReport]:
    def call(**kw) -> BoundReport:
        return fn(direction=direction, **fixed, **kw)

    return call


def _sandwich(direction: str) -> Callable[..., BoundReport]:
    def call(i: int, n: int, m: int, r: int, d: int) -> BoundReport:
        lo, hi = obs_sandwich(i, n, m, r, d)
        return lo if direction == LOWER else hi

    return call


# bound id -> (oracle taking keyword parameters, parameter names)
BOUNDS: dict[str, tuple[Callable[..., BoundReport], tuple[str, ...]]] = {
    "obs_sandwich_lower": (_sandwich(LOWER), ("i", "n", "m", "r", "d")),
    "obs_sandwich_upper": (_sandwich(UPPER), ("i", "n", "m", "r", "d")),
    "lemma_tree_max": (lemma_tree_max, ("i", "n", "d")),
    "lemma_diam_gt_half": (lemma_diam_gt_half, ("i", "n", "d")),
    "lemma_ore_max_edges": (lemma_ore_max_edges, ("n", "d")),
    "thm_sigma2_diam_upper_coarse": (sigma2_diam_upper_coarse, ("n", "d")),
    "thm_sigma2_diam_max": (sigma2_diam_max, ("n", "d")),
    "prop_sigma01_diam_lower": (sigma01_diam_lower, ("i", "n", "d")),
    "thm_sigma2_nmd_lower": (sigma2_nmd_lower, ("n", "m", "d")),
    "cor_sigma2_diam_lower": (sigma2_diam_lower, ("n", "d")),
    "obs_dominating_lower": (obs_dominating_lower, ("i", "n", "s")),
    "thm_chromatic_lower": (_both(chromatic_bounds, LOWER, param="chromatic"), ("i", "n", "k")),
    "thm_chromatic_upper": (_both(chromatic_bounds, UPPER, param="chromatic"), ("i", "n", "k")),
    "thm_clique_lower": (_both(chromatic_bounds, LOWER, param="clique"), ("i", "n", "k")),
    "thm_clique_upper": (_both(chromatic_bounds, UPPER, param="clique"), ("i", "n", "k")),
    "lemma_min_edges_chi": (lemma_min_edges_chi, ("n", "k")),
    "thm_sigma2_chromatic_lower": (sigma2_chromatic_lower, ("n", "k")),
    "thm_sigma2_clique_lower": (lambda n, k: sigma2_chromatic_lower(n, k, "clique"), ("n", "k")),
    "lemma_dominating_le_matching": (lemma_dominating_le_matching, ("n", "k")),
    "prop_matching_lower": (_both(matching_bounds, LOWER), ("i", "n", "k")),
    "thm_matching_upper": (_both(matching_bounds, UPPER), ("i", "n", "k")),
    "thm_sigma2_matching_lower": (sigma2_matching_lower, ("n", "k")),
}


def evaluate(bound_id: str, **params: int) -> BoundReport:
    """Look up ``bound_id`` and evaluate it; unknown ids raise KeyError."""
    if bound_id not in BOUNDS:
        raise KeyError(f"unknown bound id {bound_id!r}")
    fn, names = BOUNDS[bound_id]
    missing = [k for k in names if k not in params]
    extra = [k for k in params if k not in names]
    if missing or extra:
        raise ValueError(f"{bound_id} takes parameters {', '.join(names)}")
    return fn(**params)
