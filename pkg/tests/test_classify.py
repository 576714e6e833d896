import pytest

from hercat.classify import (
    CurveCat,
    DirectSum,
    QuiverCat,
    TubeCat,
    build_lattice,
    classify,
    descriptor_suite,
    find_exceptional_class,
    sup_norm_shells,
)
from hercat.errors import InputError
from hercat.klattice import EulerLattice
from hercat.quiver import Quiver, dynkin_quiver


def test_descriptor_validation():
    with pytest.raises(InputError):
        QuiverCat(Quiver.cyclic(2))
    with pytest.raises(InputError):
        CurveCat(-1)
    with pytest.raises(InputError):
        TubeCat(0)
    with pytest.raises(InputError):
        DirectSum(())


def test_build_lattice_examples():
    assert build_lattice(CurveCat(3)).gram.tolist() == [[0, -1], [1, -2]]
    assert build_lattice(DirectSum((TubeCat(1), TubeCat(1)))).gram.tolist() == [[0, 0], [0, 0]]
    assert build_lattice(QuiverCat(Quiver.linear_a(2))).gram.tolist() == [[1, -1], [0, 1]]


def test_classify_elliptic_curve():
    r = classify(CurveCat(1), 3)
    assert r.branch == "CurveLike"
    assert r.has_spherical_class and r.spherical_witness == (1, 0)
    assert not r.has_exceptional_class


def test_classify_rational_curve():
    r = classify(CurveCat(0))
    assert r.has_exceptional_class and r.exceptional_witness == (0, 1)
    assert r.has_spherical_class


def test_classify_rank2_tube():
    r = classify(TubeCat(2))
    assert r.branch == "Tube" and r.num_rank == 1
    assert r.coxeter.tolist() == [[-1]]


def test_classify_homogeneous_tube():
    r = classify(TubeCat(1))
    assert r.num_rank == 0 and not r.has_exceptional_class


def test_classify_a3():
    r = classify(QuiverCat(Quiver.linear_a(3)))
    assert r.branch == "QuiverRep" and r.dynkin_type == "A3"
    assert r.fractional_cy.q == 4
    assert not r.has_spherical_class


def test_classify_kronecker():
    r = classify(QuiverCat(Quiver(2, ((0, 1), (0, 1)))))
    assert r.fractional_cy is None
    # the imaginary root (1, 1) is Coxeter-fixed and isotropic
    assert r.has_spherical_class and r.spherical_witness == (1, 1)


def test_classify_sum():
    d = DirectSum((CurveCat(2), TubeCat(3)))
    r = classify(d)
    assert r.branch == "CurveLike+Tube"
    assert r.num_rank == 4
    assert [c.branch for c in r.components] == ["CurveLike", "Tube"]
    assert r.has_exceptional_class


def test_curve_exceptional_iff_genus_zero():
    for g in range(5):
        lat = build_lattice(CurveCat(g))
        assert (find_exceptional_class(lat, 4) is not None) == (g == 0)
        for v in sup_norm_shells(2, 3):
            assert lat.chi(v, v) == (1 - g) * v[1] ** 2


def test_scan_order():
    shell1 = list(sup_norm_shells(2, 1))
    assert len(shell1) == 8
    assert shell1[:2] == [(1, 0), (0, 1)]
    assert list(sup_norm_shells(0, 3)) == []


def test_exceptional_scan_on_degenerate_lattice():
    assert find_exceptional_class(EulerLattice.from_rows([[0]]), 4) is None


def test_suite_shape():
    suite = descriptor_suite()
    base = [d for d in suite if not isinstance(d, DirectSum)]
    assert len(base) == 4 + 5 + 2 + 4 + 8 + 8
    assert len(suite) == len(base) + len(base) * (len(base) + 1) // 2


@pytest.mark.parametrize("d", [q for q in dynkin_quiver("D4").all_orientations()])
def test_classify_d4_orientations(d):
    r = classify(QuiverCat(d))
    assert r.fractional_cy.q == 3 and r.fractional_cy.sign == 1
