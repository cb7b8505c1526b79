import json
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossfold import arc_diagram as ad
from crossfold.arc_diagram import ArcDrawing, ArcSegment, Half
from crossfold.hypercube import VertexLabel

F = Fraction


def gamma_direct(n):
    """Gamma_n written out level by level instead of recursively."""
    segs = []
    for m in range(1, n + 1):
        h = 2 ** (m - 1)
        for offset in range(0, 2 ** n, 2 ** m):
            segs.append((Half.UPPER, F(offset), F(offset + h), (offset, offset + h)))
            for i in range(1, h):
                g = offset + (h - 1) + F(h - i, h + 1)
                e = (offset + i, offset + h + i)
                segs.append((Half.UPPER, F(offset + i), g, e))
                segs.append((Half.LOWER, g, F(offset + h + i), e))
    return segs


def brute_crossings(segs):
    """All crossing segment pairs, straight from the interleaving definition."""
    out = []
    for (h1, a, b, e), (h2, c, d, f) in combinations(segs, 2):
        if h1 == h2 and (a < c < b < d or c < a < d < b):
            out.append((e, f))
    return out


def brute_covers(n, segs):
    above = [sum(1 for h, a, b, _ in segs if h is Half.UPPER and a < x < b) for x in range(2 ** n)]
    below = [sum(1 for h, a, b, _ in segs if h is Half.LOWER and a < x < b) for x in range(2 ** n)]
    return above, below


def as_tuples(d):
    return sorted((s.half.value, s.left, s.right, s.edge) for s in d.segments)


@pytest.mark.parametrize("n", range(1, 9))
def test_recursive_build_matches_direct_construction(n):
    assert as_tuples(ad.build_gamma(n)) == sorted((h.value, a, b, e) for h, a, b, e in gamma_direct(n))


def test_gamma_2_by_hand():
    d = ad.build_gamma(2)
    by_edge = {}
    for s in d.segments:
        by_edge.setdefault(s.edge, []).append(s)
    assert set(by_edge) == {(0, 1), (2, 3), (0, 2), (1, 3)}
    assert [(s.half, s.left, s.right) for s in by_edge[(0, 2)]] == [(Half.UPPER, 0, 2)]
    up, low = sorted(by_edge[(1, 3)], key=lambda s: s.left)
    assert up.half is Half.UPPER and low.half is Half.LOWER
    assert up.left == 1 and up.right == low.left and low.right == 3
    assert 1 < up.right < 2


def test_gamma_1():
    d = ad.build_gamma(1)
    assert [(s.half, s.left, s.right) for s in d.segments] == [(Half.UPPER, 0, 1)]
    assert ad.count_crossings(d).total == 0


def test_gamma_3_structure():
    d = ad.build_gamma(3)
    assert len(d.edges) == 12
    gaps = [s.left for s in d.segments if s.half is Half.LOWER]
    assert sum(3 < g < 4 for g in gaps) == 3
    assert sum(1 < g < 2 for g in gaps) == 1 and sum(5 < g < 6 for g in gaps) == 1


def test_gap_points_decrease_within_the_gap():
    for n in range(2, 9):
        h = 2 ** (n - 1)
        gs = [ad.gap_point(n, i) for i in range(1, h)]
        assert all(h - 1 < g < h for g in gs)
        assert all(a > b for a, b in zip(gs, gs[1:]))
    with pytest.raises(ValueError):
        ad.gap_point(3, 0)


def test_out_of_range():
    for n in (0, ad.MAX_GAMMA_N + 1):
        with pytest.raises(ValueError):
            ad.build_gamma(n)


# frozen from the brute-force interleaving oracle on gamma_direct
BRUTE_CROSSINGS = {1: 0, 2: 0, 3: 2, 4: 20, 5: 128, 6: 672}
BRUTE_COVER_SUMS = {1: 0, 2: 1, 3: 8, 4: 44, 5: 208, 6: 912}


@pytest.mark.parametrize("n", range(1, 7))
def test_brute_force_oracle_values(n):
    segs = gamma_direct(n)
    assert len(brute_crossings(segs)) == BRUTE_CROSSINGS[n]
    above, below = brute_covers(n, segs)
    assert sum(above) == sum(below) == BRUTE_COVER_SUMS[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_engine_matches_brute_force(n):
    d = ad.build_gamma(n)
    segs = gamma_direct(n)
    r = ad.count_crossings_pairwise(d)
    assert r.total == ad.count_crossings_fast(d) == BRUTE_CROSSINGS[n]
    want = {}
    for e, f in brute_crossings(segs):
        key = (e, f) if e <= f else (f, e)
        want[key] = want.get(key, 0) + 1
    assert r.pair_multiplicity == want
    cov = ad.cover_profile(d)
    assert (list(cov.above), list(cov.below)) == brute_covers(n, segs)


def test_covers_gamma_2():
    cov = ad.cover_profile(ad.build_gamma(2))
    assert cov.above == (0, 1, 0, 0)
    assert cov.below == (0, 0, 1, 0)


@pytest.mark.parametrize("n, want", [(1, 0), (3, 8), (4, 44)])
def test_cover_formula(n, want):
    assert ad.gamma_cover_sum_formula(n) == want


@pytest.mark.parametrize("n, want", [(1, 0), (2, 0), (3, 2), (4, 20), (5, 128)])
def test_crossing_formula(n, want):
    assert ad.gamma_crossing_formula(n) == want


def test_crossing_formula_recurrence_at_5():
    assert ad.gamma_crossing_formula(5) == 2 * 20 + 2 ** 7 - 5 * 2 ** 3


@pytest.mark.parametrize("m, want", [(1, 0), (4, 6), (8, 28)])
def test_bunch_crossings(m, want):
    assert ad.bunch_crossings(m) == want


def _properly_cross(p, q, r, s):
    def orient(a, b, c):
        det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (det > 0) - (det < 0)
    return orient(p, q, r) * orient(p, q, s) < 0 and orient(r, s, p) * orient(r, s, q) < 0


@pytest.mark.parametrize("m", range(1, 9))
def test_bunch_crossings_by_drawing_the_bunches(m):
    # R leans right, S leans left, both rooted at (0,0) .. (m-1,0)
    length = F(m + 1)
    r = [((F(i), F(0)), (F(i) + length, length)) for i in range(m)]
    s = [((F(j), F(0)), (F(j) - length, length)) for j in range(m)]
    got = sum(_properly_cross(*a, *b) for a in r for b in s)
    assert got == ad.bunch_crossings(m)


@pytest.mark.parametrize("n", range(1, 11))
def test_counts_match_closed_forms(n):
    d = ad.build_gamma(n)
    assert ad.count_crossings(d).total == ad.gamma_crossing_formula(n)
    cov = ad.cover_profile(d)
    assert cov.sum_above == cov.sum_below == ad.gamma_cover_sum_formula(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_fast_and_pairwise_agree(n):
    d = ad.build_gamma(n)
    assert ad.count_crossings_fast(d) == ad.count_crossings_pairwise(d).total


@pytest.mark.parametrize("n", range(2, 11))
def test_recurrences(n):
    d, prev = ad.build_gamma(n), ad.build_gamma(n - 1)
    c, cp = ad.cover_profile(d), ad.cover_profile(prev)
    h = 2 ** (n - 1)
    assert c.sum_above == 2 ** (n - 2) * (h - 1) + 2 * cp.sum_above
    assert c.sum_below == 2 ** (n - 2) * (h - 1) + 2 * cp.sum_below
    assert ad.count_crossings(d).total == 2 * ad.count_crossings(prev).total + cp.sum_above + cp.sum_below


def test_level_curve_covers():
    # curve i covers i+1 .. h-1 from above and h .. h+i-1 from below
    n = 5
    h = 2 ** (n - 1)
    segs = ad.level_curves(n)
    for i in range(h):
        mine = [s for s in segs if s.edge == (i, h + i)]
        above = {x for s in mine if s.half is Half.UPPER for x in range(2 ** n) if s.left < x < s.right}
        below = {x for s in mine if s.half is Half.LOWER for x in range(2 ** n) if s.left < x < s.right}
        assert above == set(range(i + 1, h))
        assert below == set(range(h, h + i))


@pytest.mark.parametrize("n", range(1, 9))
def test_gamma_is_good(n):
    d = ad.build_gamma(n)
    r = ad.count_crossings_pairwise(d)
    assert ad.validate_good(d, r) == []
    assert all(k == 1 for k in r.pair_multiplicity.values())
    assert all(not set(e) & set(f) for e, f in r.pair_multiplicity)
    assert set(ad.level_crossings(d, r).values()) == {0}


def test_gamma_3_crossing_pairs():
    r = ad.count_crossings_pairwise(ad.build_gamma(3))
    # 1-5 passes over 0-2 in the left copy, 2-6 passes under 5-7 in the right copy
    assert r.pair_multiplicity == {((0, 2), (1, 5)): 1, ((2, 6), (5, 7)): 1}


def test_double_crossing_is_flagged():
    segs = (
        ArcSegment(Half.UPPER, F(0), F(2), (0, 2)),
        ArcSegment(Half.UPPER, F(1), F(3), (1, 3)),
        ArcSegment(Half.LOWER, F(0), F(2), (0, 2)),
        ArcSegment(Half.LOWER, F(1), F(3), (1, 3)),
    )
    d = ArcDrawing(2, segs)
    r = ad.count_crossings_pairwise(d)
    assert r.pair_multiplicity == {((0, 2), (1, 3)): 2}
    kinds = {v.kind for v in ad.validate_good(d, r)}
    assert "multiple" in kinds


def test_adjacent_crossing_and_shared_gap_are_flagged():
    segs = (
        ArcSegment(Half.UPPER, F(0), F(2), (0, 2)),
        ArcSegment(Half.UPPER, F(1), F(5, 2), (2, 3)),
        ArcSegment(Half.LOWER, F(5, 2), F(3), (2, 3)),
        ArcSegment(Half.LOWER, F(5, 2), F(3), (1, 3)),
    )
    d = ArcDrawing(2, segs)
    kinds = {v.kind for v in ad.validate_good(d, ad.count_crossings_pairwise(d))}
    assert {"adjacent", "shared-gap", "through-vertex"} <= kinds


def test_validate_needs_pairs():
    d = ad.build_gamma(3)
    with pytest.raises(ValueError):
        ad.validate_good(d, ad.count_crossings(d, pairs=False))


def test_placement():
    for n in range(1, 11):
        assert ad.verify_placement(ad.build_gamma(n)) is None
    d = ad.build_gamma(3)
    x = VertexLabel.from_bits("011")
    assert d.position(x) == 3 and d.position(VertexLabel.from_bits("100")) == 7 - 3
    shuffled = ArcDrawing(3, d.segments, (1, 0, 2, 3, 4, 5, 6, 7))
    assert "expected 0" in ad.verify_placement(shuffled)


def test_json_round_trip():
    d = ad.build_gamma(3)
    doc = json.loads(json.dumps(d.to_json()))
    assert doc["n"] == 3
    seg = next(s for s in doc["segments"] if s["half"] == "lower")
    assert "/" in seg["left"] and len(seg["edge"][0]) == 3
    back = ArcDrawing.from_json(doc)
    assert as_tuples(back) == as_tuples(d)


def test_coordinate_ranks_are_exact():
    # values closer together than float spacing near 2**60
    big = F(2 ** 60)
    xs = [big + F(1, 3), big, big + F(1, 2), big + F(1, 3), F(-1, 7)]
    assert ad.coordinate_ranks(xs) == [2, 1, 3, 2, 0]


@st.composite
def arc_drawings(draw):
    """Random arc diagrams on n=3 positions plus distinct rational gap points."""
    count = draw(st.integers(0, 14))
    segs = []
    for _ in range(count):
        a = draw(st.fractions(min_value=0, max_value=7, max_denominator=5))
        b = draw(st.fractions(min_value=0, max_value=7, max_denominator=5))
        if a == b:
            continue
        a, b = min(a, b), max(a, b)
        half = draw(st.sampled_from(list(Half)))
        e = draw(st.tuples(st.integers(0, 7), st.integers(0, 7)))
        segs.append(ArcSegment(half, a, b, e))
    return ArcDrawing(3, tuple(segs))


@given(arc_drawings())
@settings(max_examples=300)
def test_counters_agree_on_random_drawings(d):
    segs = [(s.half, s.left, s.right, s.edge) for s in d.segments]
    want = len(brute_crossings(segs))
    assert ad.count_crossings_fast(d) == want
    assert ad.count_crossings_pairwise(d).total == want
