from maq.exact import mat_mul, row_hnf
from maq.intlattice import (FinAbGroup, Lattice, TorusSubgroup,
                            exact_row_check, join_coordinate, meet_coordinate,
                            s_lattice, s_space_f2)

from conftest import random_unimodular, seeded


def test_finabgroup_normalization():
    g = FinAbGroup.make(2, (2, 4, 3))
    assert g.free_rank == 2
    assert g.torsion == (2, 12)
    assert g.order() is None
    assert FinAbGroup.cyclic(6).order() == 6
    assert FinAbGroup.trivial().is_trivial()
    assert str(FinAbGroup.make(0, (2,))) == "Z/2"


def test_finabgroup_from_presentation():
    # Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 = Z/6 as a cyclic chain
    g = FinAbGroup.from_presentation(2, [[2, 0], [0, 3]])
    assert g == FinAbGroup.make(0, (6,))
    g = FinAbGroup.from_presentation(3, [[1, 1, 1]])
    assert g == FinAbGroup.free(2)


def test_tensor_and_tor():
    a = FinAbGroup.make(1, (4,))
    b = FinAbGroup.make(0, (6,))
    # (Z + Z/4) x Z/6: tensor = Z/6 + Z/2, tor = Z/2
    assert a.tensor(b) == FinAbGroup.make(0, (2, 6))
    assert a.tor(b) == FinAbGroup.make(0, (2,))
    assert a.tensor(FinAbGroup.free(1)) == a
    assert a.tor(FinAbGroup.free(5)).is_trivial()


def test_lattice_basics():
    L = Lattice.from_generators(3, [[2, 4, 0], [1, 1, 0]])
    assert L.rank() == 2
    assert L.contains([3, 5, 0])
    assert not L.contains([0, 0, 1])
    assert L.sum(Lattice.from_generators(3, [[0, 0, 1]])).rank() == 3
    mid = L.intersection(Lattice.from_generators(3, [[1, 0, 0]]))
    assert mid.rank() == 1
    assert mid.contains([2, 0, 0])


def test_lattice_cokernel_and_project():
    L = Lattice.from_generators(2, [[2, 0], [0, 3]])
    assert L.cokernel() == FinAbGroup.make(0, (6,))
    P = Lattice.from_generators(3, [[1, 2, 5]]).project([1, 2])
    assert P.basis == ((1, 2),)


def test_saturate_dual_roundtrip():
    rng = seeded("satdual")
    for _ in range(100):
        m = rng.randint(1, 4)
        n = rng.randint(0, m)
        gens = [[rng.randint(-5, 5) for _ in range(m)] for _ in range(n)]
        L = Lattice.from_generators(m, gens)
        back = L.saturate_dual().saturate_dual()
        assert back == L


def test_torus_subgroup_ranks():
    H = TorusSubgroup.from_annihilator(3, [[1, 1, 1]])
    assert H.torus_rank() == 2
    assert H.character_group() == FinAbGroup.free(2)
    assert TorusSubgroup.trivial(2, 4).torus_rank() == 0
    assert TorusSubgroup.full(2, 4).torus_rank() == 4
    assert TorusSubgroup.coordinate(2, 4, frozenset({1, 3})).torus_rank() == 2
    W = TorusSubgroup.from_f2_span(3, [0b011])
    assert W.f2_dim() == 1


def test_meet_join_coordinate_d2():
    # diagonal circle in T^2
    H = TorusSubgroup.from_annihilator(2, [[1, -1]])
    full = meet_coordinate(H, frozenset({1, 2}))
    assert full.intersection == FinAbGroup.free(1)
    one = meet_coordinate(H, frozenset({1}))
    assert one.intersection.is_trivial()
    # H together with the first coordinate circle generates all of T^2
    assert join_coordinate(H, frozenset({1})).is_trivial()
    assert s_lattice(H, frozenset({1})).basis == ((1,),)


def test_meet_coordinate_torsion():
    # H = {(t, t^2)}: meets the first coordinate circle in Z/2
    H = TorusSubgroup.from_annihilator(2, [[2, -1]])
    r = meet_coordinate(H, frozenset({1}))
    assert r.intersection == FinAbGroup.make(0, (2,))
    assert exact_row_check(H, frozenset({1}))
    assert exact_row_check(H, frozenset({1, 2}))


def test_meet_join_d1():
    # Z/2 diagonal inside (Z/2)^2
    W = TorusSubgroup.from_f2_span(2, [0b11])
    assert meet_coordinate(W, frozenset({1})).intersection.is_trivial()
    assert meet_coordinate(W, frozenset({1, 2})).intersection == \
        FinAbGroup.make(0, (2,))
    assert s_space_f2(W, frozenset({1})) == [0b1]
    assert exact_row_check(W, frozenset({1}))


def test_subgroup_json():
    H = TorusSubgroup.from_annihilator(3, [[1, 1, 1]])
    j = H.to_json()
    assert j["d"] == 2 and j["m"] == 3


def test_annihilator_basis_invariance():
    rng = seeded("ann-inv")
    for _ in range(50):
        m = rng.randint(1, 4)
        n = rng.randint(1, m)
        rows = [[rng.randint(-4, 4) for _ in range(m)] for _ in range(n)]
        U = random_unimodular(rng, n)
        H1 = TorusSubgroup.from_annihilator(m, rows)
        H2 = TorusSubgroup.from_annihilator(m, mat_mul(U, rows))
        assert H1 == H2
        assert row_hnf([list(r) for r in rows]) == [list(r) for r in H1.ann.basis]
