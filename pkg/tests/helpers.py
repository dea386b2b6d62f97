"""Independent oracles used across the test suite.

Everything here builds maps the naive way: pair the k-th smallest domain
point with the k-th smallest image point inside a finite window, compose
pointwise through dictionaries, and enumerate candidates exhaustively.
None of it goes through the library's symbolic gap-set formulas.
"""

from itertools import chain, combinations


def two_row(dom_gaps, ran_gaps, n=200, slack=60):
    """Truncated explicit map as a dict, built positionally."""
    dom_block = set(dom_gaps)
    ran_block = set(ran_gaps)
    dom_pts = [x for x in range(1, n + 1) if x not in dom_block]
    ran_pts = []
    y = 1
    while len(ran_pts) < len(dom_pts):
        if y not in ran_block:
            ran_pts.append(y)
        y += 1
        if y > n + slack:
            raise AssertionError("window too small for the gap sets")
    return dict(zip(dom_pts, ran_pts))


def two_row_compose(m1, m2):
    """Pointwise composition of truncated dicts (apply m1 first)."""
    return {x: m2[m1[x]] for x in m1 if m1[x] in m2}


def rewrite_product(m1, n1, m2, n2):
    """Bicyclic product by literal word rewriting of the single relation."""
    word = "q" * m1 + "p" * n1 + "q" * m2 + "p" * n2
    while "pq" in word:
        word = word.replace("pq", "", 1)
    qs = len(word) - len(word.lstrip("q"))
    ps = len(word) - len(word.rstrip("p"))
    assert word == "q" * qs + "p" * ps
    return qs, ps


def small_gapsets(max_gap):
    universe = range(1, max_gap + 1)
    return list(
        chain.from_iterable(combinations(universe, k) for k in range(max_gap + 1))
    )
