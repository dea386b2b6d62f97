"""Exact algebra of monotone injective partial selfmaps of the positive
integers whose domain and image are both cofinite.

Such a map is pinned down by two finite "gap sets": the positive integers
missing from its domain and the ones missing from its image.  Monotonicity
forces the k-th smallest domain point onto the k-th smallest image point,
so the pair of gap sets is a complete canonical description and everything
here is exact integer arithmetic on short sorted tuples.

Composition is written left to right: ``compose(g, h)`` is ``x -> h(g(x))``
(apply ``g`` first).  The ``*`` operator on :class:`CofMap` follows the
same convention.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from itertools import combinations

GapSet = tuple  # strictly increasing tuple of positive ints


def gapset(entries) -> GapSet:
    """Freeze ``entries`` as a gap set, rejecting malformed input."""
    gaps = tuple(entries)
    last = 0
    for q in gaps:
        if not isinstance(q, int) or q < 1:
            raise ValueError(f"gap entries must be positive integers, got {q!r}")
        if q <= last:
            raise ValueError(f"gap entries must be strictly increasing, got {gaps!r}")
        last = q
    return gaps


@dataclass(frozen=True)
class CofMap:
    """A cofinite monotone partial bijection of {1, 2, 3, ...}.

    ``dom_gaps`` lists the points outside the domain, ``ran_gaps`` the
    points outside the image; both are finite and strictly increasing.
    Every pair of gap sets is valid and names exactly one map (the unique
    monotone bijection between the two cofinite sets), so equality of maps
    is equality of the pairs.  Instances are immutable and hashable.
    """

    dom_gaps: GapSet = ()
    ran_gaps: GapSet = ()

    def __post_init__(self):
        object.__setattr__(self, "dom_gaps", gapset(self.dom_gaps))
        object.__setattr__(self, "ran_gaps", gapset(self.ran_gaps))

    def __call__(self, n: int) -> int | None:
        return evaluate(self, n)

    def __mul__(self, other) -> "CofMap":
        if isinstance(other, CofMap):
            return compose(self, other)
        return NotImplemented

    def inverse(self) -> "CofMap":
        return invert(self)

    def __repr__(self) -> str:
        return f"CofMap({list(self.dom_gaps)}, {list(self.ran_gaps)})"


IDENTITY = CofMap()


def _unrank(gaps: GapSet, r: int) -> int:
    # r-th smallest positive integer (1-based) outside `gaps`
    x = r
    for q in gaps:
        if q <= x:
            x += 1
        else:
            break
    return x


def evaluate(g: CofMap, n: int) -> int | None:
    """Image of ``n`` under ``g``, or None when ``n`` is a domain gap."""
    if n < 1:
        raise ValueError("maps act on positive integers")
    dom = g.dom_gaps
    k = bisect_right(dom, n)
    if k and dom[k - 1] == n:
        return None
    return _unrank(g.ran_gaps, n - k)


def preimage(g: CofMap, v: int) -> int | None:
    """Unique ``x`` with ``evaluate(g, x) == v``, or None when ``v`` is missed."""
    if v < 1:
        raise ValueError("maps act on positive integers")
    ran = g.ran_gaps
    k = bisect_right(ran, v)
    if k and ran[k - 1] == v:
        return None
    return _unrank(g.dom_gaps, v - k)


def _compose_gaps(gd, gr, hd, hr):
    # gap sets of the left-to-right composite, computed symbolically
    dom = set(gd)
    for d in hd:
        if d not in gr:
            # d is hit by g; its g-preimage drops out of the composite's domain
            k = bisect_right(gr, d)
            dom.add(_unrank(gd, d - k))
    ran = set(hr)
    for y in gr:
        if y not in hd:
            # y is missed by g but mapped on by h; its h-image is missed too
            k = bisect_right(hd, y)
            ran.add(_unrank(hr, y - k))
    return tuple(sorted(dom)), tuple(sorted(ran))


def compose(g: CofMap, h: CofMap) -> CofMap:
    """Left-to-right composite ``x -> h(g(x))``.

    Gap sets are computed exactly from the factors' gap sets, never by
    truncating the maps: the composite misses a domain point where ``g``
    does or where ``g`` lands on a domain gap of ``h``, and misses an image
    point where ``h`` does or where ``h`` maps a point that ``g`` missed.
    """
    dom, ran = _compose_gaps(g.dom_gaps, g.ran_gaps, h.dom_gaps, h.ran_gaps)
    return CofMap(dom, ran)


def invert(g: CofMap) -> CofMap:
    """The inverse partial bijection (swap the gap sets)."""
    return CofMap(g.ran_gaps, g.dom_gaps)


def is_idempotent(g: CofMap) -> bool:
    """True iff ``g`` is an identity map on its domain (equal gap sets)."""
    return g.dom_gaps == g.ran_gaps


def require_idempotent(e: CofMap) -> CofMap:
    if not is_idempotent(e):
        raise ValueError(f"not an idempotent (dom gaps differ from ran gaps): {e!r}")
    return e


def shift(g: CofMap) -> int:
    """Eventual translation amount of ``g``.

    Far enough out the map is a pure shift, ``evaluate(g, i) == i + shift(g)``
    for every ``i >= shift_threshold(g)``, and the amount is the difference
    of the gap counts.  Additive under composition, so it is a homomorphism
    onto the integers.
    """
    return len(g.ran_gaps) - len(g.dom_gaps)


def dom_tail_start(g: CofMap) -> int:
    """First point from which the domain contains everything onward."""
    return g.dom_gaps[-1] + 1 if g.dom_gaps else 1


def ran_tail_start(g: CofMap) -> int:
    """First point from which the image contains everything onward."""
    return g.ran_gaps[-1] + 1 if g.ran_gaps else 1


def tail_start(g: CofMap) -> int:
    """Max of the two tail starts: both sides are full from here on."""
    return max(dom_tail_start(g), ran_tail_start(g))


def shift_threshold(g: CofMap) -> int:
    """Least point past every domain gap whose image clears every image gap.

    From the returned ``t`` on, ``evaluate(g, i) == i + shift(g)`` for all
    ``i >= t``.  ``t`` is minimal for the defining property above (not
    necessarily for the translation law itself).
    """
    max_d = g.dom_gaps[-1] if g.dom_gaps else 0
    max_r = g.ran_gaps[-1] if g.ran_gaps else 0
    # for t > max_d the image clears max_r exactly when the rank t - |D|
    # exceeds the number of non-gaps <= max_r; both conditions are monotone
    return max(max_d + 1, max_r - len(g.ran_gaps) + len(g.dom_gaps) + 1)


def tail_identity(k: int) -> CofMap:
    """The idempotent acting as the identity on {k, k+1, k+2, ...}."""
    if k < 1:
        raise ValueError("tail start must be a positive integer")
    gaps = tuple(range(1, k))
    return CofMap(gaps, gaps)


def natural_leq(e: CofMap, f: CofMap) -> bool:
    """Natural order on idempotents: ``e <= f`` iff dom e is inside dom f."""
    require_idempotent(e)
    require_idempotent(f)
    return set(e.dom_gaps) >= set(f.dom_gaps)


def canonical_leq(a: CofMap, b: CofMap) -> bool:
    """Restriction order: ``a <= b`` iff ``a`` equals ``b`` cut down to dom a.

    Equivalently ``a == b * (a.inverse() * a)``, i.e. ``a`` arises from ``b``
    by multiplying with an idempotent on the right.
    """
    return compose(b, compose(invert(a), a)) == a


def up_set(e: CofMap) -> list[CofMap]:
    """All idempotents above ``e`` in the natural order.

    These are the identity maps whose gap set is a subset of e's, so there
    are exactly ``2 ** len(e.dom_gaps)`` of them.  Sorted by gap set.
    """
    require_idempotent(e)
    out = []
    for k in range(len(e.dom_gaps) + 1):
        for sub in combinations(e.dom_gaps, k):
            out.append(CofMap(sub, sub))
    out.sort(key=lambda m: m.dom_gaps)
    return out


def to_dict(g: CofMap) -> dict:
    """JSON form: {"dom_gaps": [...], "ran_gaps": [...]}."""
    return {"dom_gaps": list(g.dom_gaps), "ran_gaps": list(g.ran_gaps)}


def from_dict(d: dict) -> CofMap:
    return CofMap(tuple(d["dom_gaps"]), tuple(d["ran_gaps"]))
