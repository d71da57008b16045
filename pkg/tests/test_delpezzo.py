"""Root/line enumeration, pairing, nef and surface Riemann-Roch tests.

The degree-2 root system is cross-checked against the explicit families
alpha_i = 2e0 - e1 - ... - e7 + e_i, alpha_ij = e_i - e_j and
alpha_ijk = e0 - e_i - e_j - e_k, all with both signs; the other degrees are
pinned from the brute-force scan itself plus the saturation re-scan.
"""

from __future__ import annotations

import itertools
import time
from fractions import Fraction

import pytest

from kuwalls.delpezzo import (
    DPContext,
    NefPosition,
    PicVector,
    enumerate_lines,
    enumerate_roots,
    intersect,
    is_root,
    nef_position,
    root_as_line_difference,
    surface_chi,
)

COUNTS = {1: (240, 240), 2: (126, 56), 3: (72, 27), 4: (40, 16), 5: (20, 10)}


def e(ctx: DPContext, i: int) -> PicVector:
    return ctx.exceptional(i)


def degree_two_root_families(ctx: DPContext) -> set[PicVector]:
    e0 = ctx.hyperplane
    total = sum((e(ctx, i) for i in range(2, 8)), e(ctx, 1))
    roots = set()
    for i in range(1, 8):
        roots.add(e0.scale(2) - total + e(ctx, i))
    for i, j in itertools.combinations(range(1, 8), 2):
        roots.add(e(ctx, i) - e(ctx, j))
    for i, j, k in itertools.combinations(range(1, 8), 3):
        roots.add(e0 - e(ctx, i) - e(ctx, j) - e(ctx, k))
    return roots | {-r for r in roots}


def test_intersection_form():
    ctx = DPContext(2)
    assert intersect(ctx, ctx.canonical, ctx.canonical) == 2
    assert intersect(ctx, e(ctx, 1) - e(ctx, 2), e(ctx, 1) - e(ctx, 2)) == -2
    assert intersect(ctx, e(ctx, 1), e(ctx, 2)) == 0
    assert intersect(ctx, ctx.hyperplane, ctx.hyperplane) == 1


@pytest.mark.parametrize("d", range(1, 8))
def test_canonical_square_is_the_degree(d):
    ctx = DPContext(d)
    assert intersect(ctx, ctx.canonical, ctx.canonical) == d


def test_rank_mismatch_rejected():
    ctx = DPContext(2)
    with pytest.raises(ValueError):
        intersect(ctx, DPContext(3).hyperplane, ctx.hyperplane)
    with pytest.raises(ValueError):
        DPContext(8)


@pytest.mark.parametrize("d", sorted(COUNTS))
def test_root_and_line_counts(d):
    ctx = DPContext(d)
    roots = enumerate_roots(ctx)
    lines = enumerate_lines(ctx)
    assert (len(roots), len(lines)) == COUNTS[d]
    # re-verify the defining equations on every returned vector
    for root in roots:
        assert intersect(ctx, root, ctx.canonical) == 0
        assert intersect(ctx, root, root) == -2
    for line in lines:
        assert intersect(ctx, line, ctx.canonical) == -1
        assert intersect(ctx, line, line) == -1
    # deterministic lexicographic order
    assert [r.as_tuple() for r in roots] == sorted(r.as_tuple() for r in roots)
    assert [l.as_tuple() for l in lines] == sorted(l.as_tuple() for l in lines)


def test_degree_two_roots_match_the_explicit_families():
    ctx = DPContext(2)
    expected = degree_two_root_families(ctx)
    assert len(expected) == 126
    assert set(enumerate_roots(ctx)) == expected


@pytest.mark.parametrize("d", sorted(COUNTS))
def test_enumeration_box_saturation(d):
    ctx = DPContext(d)
    assert enumerate_roots(ctx, extra_box=2) == enumerate_roots(ctx)
    assert enumerate_lines(ctx, extra_box=2) == enumerate_lines(ctx)


def test_scan_runtime_budget():
    start = time.perf_counter()
    for d in sorted(COUNTS):
        ctx = DPContext(d)
        enumerate_roots(ctx)
        enumerate_lines(ctx)
    assert time.perf_counter() - start < 2.0


def test_line_involution_pairs_without_fixed_points():
    ctx = DPContext(2)
    lines = enumerate_lines(ctx)
    line_set = set(lines)
    minus_k = -ctx.canonical
    pairs = set()
    for line in lines:
        partner = minus_k - line
        assert partner in line_set
        assert partner != line
        pairs.add(frozenset((line, partner)))
    assert len(pairs) == 28


def test_every_degree_two_root_is_a_difference_of_disjoint_lines():
    ctx = DPContext(2)
    line_set = set(enumerate_lines(ctx))
    for root in enumerate_roots(ctx):
        pair = root_as_line_difference(ctx, root)
        assert pair is not None
        first, second = pair
        assert first in line_set and second in line_set
        assert intersect(ctx, first, second) == 0
        assert first - second == root


def test_difference_of_disjoint_lines_is_a_root():
    ctx = DPContext(2)
    lines = enumerate_lines(ctx)
    for first, second in itertools.permutations(lines, 2):
        if intersect(ctx, first, second) == 0:
            assert is_root(ctx, first - second)


def test_line_difference_examples():
    ctx = DPContext(2)
    assert root_as_line_difference(ctx, e(ctx, 1) - e(ctx, 2)) == (e(ctx, 1), e(ctx, 2))
    alpha_123 = ctx.hyperplane - e(ctx, 1) - e(ctx, 2) - e(ctx, 3)
    pair = root_as_line_difference(ctx, alpha_123)
    assert pair is not None
    first, second = pair
    assert first - second == alpha_123 and intersect(ctx, first, second) == 0
    with pytest.raises(ValueError):
        root_as_line_difference(ctx, e(ctx, 1))


def test_nef_positions():
    ctx = DPContext(2)
    k = ctx.canonical
    for root in enumerate_roots(ctx):
        assert nef_position(ctx, root - k.scale(2)) is NefPosition.INTERIOR
    assert nef_position(ctx, -k) is NefPosition.INTERIOR
    assert nef_position(ctx, e(ctx, 1)) is NefPosition.OUTSIDE
    # e0 pairs to zero with the exceptional lines: nef but not ample
    assert nef_position(ctx, ctx.hyperplane) is NefPosition.BOUNDARY
    with pytest.raises(ValueError):
        nef_position(DPContext(1), k)


def test_surface_chi_triple_on_roots():
    ctx = DPContext(2)
    h = -ctx.canonical  # the restriction of the polarization is anticanonical
    for root in enumerate_roots(ctx):
        assert surface_chi(ctx, root) == 0
        assert surface_chi(ctx, root - h) == 0
        assert surface_chi(ctx, root + h) == 2


def test_surface_chi_basics():
    ctx = DPContext(2)
    assert surface_chi(ctx, PicVector(0, (0,) * 7)) == 1  # chi(O)
    assert surface_chi(ctx, -ctx.canonical) == 1 + Fraction(2 + 2, 2)  # chi(-K) = 3
