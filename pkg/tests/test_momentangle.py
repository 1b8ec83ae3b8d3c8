import pytest

from maq.homology import reduced_cohomology
from maq.intlattice import FinAbGroup
from maq.momentangle import (BoundExceeded, PoincareSeries, SRRing,
                             buchstaber_real, hochster, skeleton_quotient_hrk,
                             skeleton_wedge, sr_dimension, trc_verdict,
                             trk_moment_angle)
from maq.simplicial import (SimplicialComplex, boundary_simplex,
                            full_subcomplex, skeleton)

from conftest import random_complex, seeded


def test_poincare_series():
    ps = PoincareSeries.make({0: 1, 3: 6})
    assert ps.count(3) == 6
    assert ps.count(1) == 0
    assert ps.total() == 7
    assert ps.to_json() == {"0": 1, "3": 6}


def test_hochster_spheres():
    # two points give the 3-sphere, boundary simplices give odd spheres
    h = hochster(SimplicialComplex.points(2))
    assert list(h.support()) == [0, 3]
    for m in range(2, 6):
        h = hochster(boundary_simplex(m))
        assert list(h.support()) == [0, 2 * m - 1]
        assert h.group(2 * m - 1) == FinAbGroup.free(1)


def test_hochster_matches_subcomplex_sum():
    # spot check the degree-by-degree assembly on a small complex
    K = SimplicialComplex(4, [(1, 2), (2, 3), (3, 4)])
    h = hochster(K)
    total = {}
    for I in _all_subsets(K.m):
        if not I:
            continue
        sub = full_subcomplex(K, I)
        hh = reduced_cohomology(sub)
        for d, g in hh.groups:
            n = d + len(I) + 1
            total[n] = total.get(n, 0) + g.free_rank
    for n, r in total.items():
        assert h.group(n).free_rank == r


def _all_subsets(m):
    import itertools
    out = []
    for r in range(m + 1):
        out.extend(frozenset(c)
                   for c in itertools.combinations(range(1, m + 1), r))
    return out


def test_hochster_bound():
    with pytest.raises(BoundExceeded):
        hochster(SimplicialComplex.points(4), m_bound=3)


def test_sr_dimension():
    R = SRRing(boundary_simplex(3), 2)
    assert [sr_dimension(R, n) for n in range(7)] == [1, 0, 3, 0, 6, 0, 9]
    # full simplex: polynomial ring on m variables
    R = SRRing(SimplicialComplex.simplex(2), 2)
    assert [sr_dimension(R, 2 * k) for k in range(4)] == [1, 2, 3, 4]
    R1 = SRRing(boundary_simplex(3), 1)
    assert [sr_dimension(R1, n) for n in range(4)] == [1, 3, 6, 9]


def test_skeleton_wedge_counts():
    ps = skeleton_wedge(4, 0)
    assert dict(ps.counts) == {0: 1, 3: 6, 4: 8, 5: 3}
    # wedge ranks agree with the full moment-angle computation
    for m in range(3, 6):
        for k in range(m - 1):
            ps = skeleton_wedge(m, k)
            h = hochster(skeleton(m, k))
            for n in range(2 * m + 2):
                assert ps.count(n) == h.group(n).free_rank
                assert h.group(n).torsion == ()


def test_skeleton_quotient_rank_bound():
    for m in range(2, 11):
        for k in range(m - 1):
            hrk, bound, ok = skeleton_quotient_hrk(m, k)
            assert ok
            assert hrk >= bound


def test_trk_and_verdict():
    assert trk_moment_angle(boundary_simplex(4)) == 1
    assert trk_moment_angle(SimplicialComplex.points(5)) == 4
    assert trc_verdict(8, 3)
    assert not trc_verdict(7, 3)
    with pytest.raises(ValueError):
        trk_moment_angle(SimplicialComplex.empty_face_only(2))


def test_buchstaber_real():
    assert buchstaber_real(SimplicialComplex.points(3)) == 2
    assert buchstaber_real(SimplicialComplex.points(5)) == 4
    assert buchstaber_real(boundary_simplex(4)) == 1
    assert buchstaber_real(SimplicialComplex.simplex(3)) == 0
    with pytest.raises(BoundExceeded):
        buchstaber_real(SimplicialComplex.points(4), m_bound=3)


def test_buchstaber_real_positive_without_full_facet():
    rng = seeded("buch")
    for _ in range(10):
        K = random_complex(rng, rng.randint(2, 5))
        if K.is_void() or K.dim() < 0:
            continue
        r = buchstaber_real(K)
        full = frozenset(range(1, K.m + 1))
        if full in K.facets:
            assert r == 0
        else:
            assert 1 <= r <= K.m - (K.dim() + 1)
