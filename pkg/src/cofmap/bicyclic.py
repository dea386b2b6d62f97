"""The bicyclic monoid and its standard copy inside the cofinite-map monoid.

Abstract elements are kept in normal form (lower ``m`` times, then raise
``n`` times).  The standard copy consists of exactly the maps whose gap
sets are initial segments {1..m} / {1..n}; it is generated by the unit
up-shift and its inverse.  The tail machinery here attaches to every map a
standard-copy stand-in that is indistinguishable from it past a cutoff,
which yields the least group congruence: two maps are identified exactly
when their eventual shifts agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CofMap,
    compose,
    dom_tail_start,
    invert,
    require_idempotent,
    shift,
    shift_threshold,
    tail_identity,
    tail_start,
)


@dataclass(frozen=True)
class Bicyclic:
    """Normal form of a bicyclic-monoid element.

    ``m`` counts lowering steps, ``n`` raising steps; the single relation
    "raise then lower is the identity" reduces every word to this shape.
    (0, 0) is the identity and the idempotents are exactly the (k, k).
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("normal-form exponents must be nonnegative")

    def __mul__(self, other) -> "Bicyclic":
        if not isinstance(other, Bicyclic):
            return NotImplemented
        k = min(self.n, other.m)
        return Bicyclic(self.m + other.m - k, self.n + other.n - k)

    def inverse(self) -> "Bicyclic":
        return Bicyclic(self.n, self.m)

    def is_idempotent(self) -> bool:
        return self.m == self.n

    def to_dict(self) -> dict:
        return {"m": self.m, "n": self.n}


BICYCLIC_IDENTITY = Bicyclic(0, 0)


def embed(x: Bicyclic) -> CofMap:
    """The standard copy of ``x``: the map i -> i - m + n on {m+1, m+2, ...}.

    An injective homomorphism; its image is recognized by
    :func:`as_bicyclic`.
    """
    return CofMap(tuple(range(1, x.m + 1)), tuple(range(1, x.n + 1)))


def as_bicyclic(g: CofMap) -> Bicyclic | None:
    """Normal form of ``g`` if it lies in the standard copy, else None.

    Membership means both gap sets are initial segments of the positive
    integers (possibly empty).
    """
    d, r = g.dom_gaps, g.ran_gaps
    if (not d or d[-1] == len(d)) and (not r or r[-1] == len(r)):
        return Bicyclic(len(d), len(r))
    return None


SHIFT_UP = embed(Bicyclic(0, 1))    # n -> n + 1 everywhere
SHIFT_DOWN = embed(Bicyclic(1, 0))  # n -> n - 1 on {2, 3, ...}


def fresh_bicyclic(e: CofMap) -> tuple[CofMap, CofMap, CofMap]:
    """A bicyclic copy sitting below ``e`` and disjoint from the standard one.

    Returns ``(unity, up, down)``.  The unity is an idempotent below ``e``
    whose gap set is not an initial segment, ``up * down == unity``, and
    the maps ``down**s * up**t`` form a bicyclic monoid none of whose
    elements is standard: every product keeps the anchor point fixed while
    missing the point just below it.
    """
    require_idempotent(e)
    anchor = tail_start(e) + 1
    base = tuple(q for q in range(1, anchor + 1) if q != anchor - 1)
    raised = tuple(q for q in range(1, anchor + 2) if q != anchor - 1)
    up = CofMap(base, raised)
    return CofMap(base, base), up, invert(up)


def tail_projection(g: CofMap) -> tuple[CofMap, CofMap]:
    """Standard-copy stand-in for ``g`` plus the tail idempotent gluing them.

    Returns ``(mu, eps)`` with both in the standard copy, ``eps`` a tail
    identity, and ``g * eps == mu * eps`` as well as ``eps * g == eps * mu``.
    ``mu`` is the pure shift that agrees with ``g`` past its threshold.
    """
    t = shift_threshold(g)
    f = shift(g)
    mu = CofMap(tuple(range(1, t)), tuple(range(1, t + f)))
    eps = tail_identity(t + max(0, f))
    return mu, eps


def absorbing_idempotent(e: CofMap) -> tuple[CofMap, CofMap]:
    """Tail identity absorbing ``e``: returns ``(eps, e * eps)`` with
    ``e * eps == eps``, a standard-copy idempotent."""
    require_idempotent(e)
    eps = tail_identity(dom_tail_start(e))
    return eps, compose(e, eps)


def standard_below(e: CofMap) -> CofMap:
    """A standard-copy idempotent below ``e`` in the natural order: the
    identity on the tail starting right after e's last gap."""
    require_idempotent(e)
    return tail_identity(dom_tail_start(e))


def conjugation_witness(g: CofMap) -> tuple[CofMap, CofMap, CofMap]:
    """Tail idempotent whose two conjugates under ``g`` stay standard.

    Returns ``(eps, g * eps * g.inverse(), g.inverse() * eps * g)``; both
    conjugates are idempotents of the standard copy.
    """
    _, eps = tail_projection(g)
    gi = invert(g)
    return eps, compose(compose(g, eps), gi), compose(compose(gi, eps), g)


def group_congruent(a: CofMap, b: CofMap) -> bool:
    """Least group congruence: related iff the eventual shifts agree,
    iff the two maps coincide on some tail of the positive integers."""
    return shift(a) == shift(b)


def congruence_witnesses(a: CofMap, b: CofMap) -> tuple[CofMap, CofMap] | None:
    """Standard-copy tail idempotents witnessing the congruence on each side.

    Returns ``(left, right)`` with ``left * a == left * b`` and
    ``a * right == b * right``, or None when the shifts differ (then no
    witness can exist on either side, since shifts are additive).
    """
    f = shift(a)
    if f != shift(b):
        return None
    base = max(shift_threshold(a), shift_threshold(b)) + max(0, f)
    eps = tail_identity(base)
    return eps, eps
