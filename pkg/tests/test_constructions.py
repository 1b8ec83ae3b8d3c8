import pytest

from maq.constructions import (PipelineIntegrityError, bosio_meersseman_nerve,
                               lambda_alpha_subgroup, rp2_6, torsion_pipeline,
                               truncate_face)
from maq.homology import reduced_cohomology, reduced_homology
from maq.intlattice import FinAbGroup
from maq.simplicial import (SimplicialComplex, boundary_simplex,
                            minimal_non_faces, sphere_sanity)


def test_rp2_6_is_the_projective_plane():
    K = rp2_6()
    assert K.m == 6
    assert len(K.facets) == 10
    assert K.f_vector() == (6, 15, 10)
    h = reduced_homology(K)
    assert h.group(1) == FinAbGroup.cyclic(2)
    assert h.group(2).is_trivial()
    hc = reduced_cohomology(K)
    assert hc.group(2) == FinAbGroup.cyclic(2)
    # vertex-transitive minimal triangulation: every vertex in 5 triangles
    for v in range(1, 7):
        assert sum(1 for F in K.facets if v in F) == 5


def test_truncate_face_square():
    # truncating an edge of the triangle boundary gives the square
    tri = boundary_simplex(3)
    sq = truncate_face(tri, frozenset({1, 2}))
    assert sq.m == 4
    assert sq.f_vector() == (4, 4)
    assert sphere_sanity(sq).passed


def test_truncate_face_rejects_bad_input():
    with pytest.raises(PipelineIntegrityError):
        truncate_face(boundary_simplex(3), frozenset({1, 2, 3}))
    with pytest.raises(PipelineIntegrityError):
        truncate_face(SimplicialComplex(3, [(1, 2, 3)]), frozenset({1}))


def test_nerve_of_three_points_is_hexagon():
    K = SimplicialComplex.points(3)
    P = bosio_meersseman_nerve(K)
    assert P.m == K.m + len(minimal_non_faces(K))
    assert P.f_vector() == (6, 6)
    assert sphere_sanity(P).passed


def test_lambda_alpha_subgroup():
    M = 5
    H = lambda_alpha_subgroup(M, (2, 4))
    assert H.d == 2 and H.m == M
    # a single circle wound oppositely through coordinates 2 and 4
    assert H.torus_rank() == 1
    assert H.ann.rank() == M - 1
    # characters vanishing on H are exactly those with equal weight at 2, 4
    assert H.ann.contains([0, 1, 0, 1, 0])
    assert H.ann.contains([1, 0, 0, 0, 0])
    assert not H.ann.contains([0, 1, 0, 0, 0])


def test_torsion_pipeline_rp2():
    rep = torsion_pipeline(rp2_6(), 2)
    assert rep.input_m == 6
    assert rep.m == 7
    assert rep.mf_count == 14
    assert rep.M == 21
    assert rep.sphere.passed
    assert rep.free
    assert rep.q == 9
    assert rep.quotient_dim == 26
    assert rep.subgroup.m == rep.M
    assert rep.subgroup.torus_rank() == 1
    assert rep.nerve.m == rep.M
    j = rep.to_json()
    assert j["m"] == 7 and j["free"] is True


def test_pipeline_respects_sanity_flag():
    rep = torsion_pipeline(rp2_6(), 2, sanity_every_step=True)
    assert rep.sphere.passed
