from fractions import Fraction

import pytest

from orbita.Chamber import ChamberSystem
from orbita.OrbitaError import NotStronglyElliptic, NotAdmissibleOrbit
from orbita.RootDatum import RootSet, Weight


@pytest.mark.parametrize('group_name, count', [
    ('sl2', 2),
    ('su21', 3),
    ('sp4', 4),
])
def test_chamber_counts(group_name, count, bundled_roots):
    assert count == len(ChamberSystem(bundled_roots).enumerate_chambers())


def test_holomorphic_chamber_first(bundled_roots):
    chambers = ChamberSystem(bundled_roots).enumerate_chambers()
    assert all(s == 1 for s in chambers[0].signs)
    assert list(range(len(chambers))) == [c.index for c in chambers]


def test_representatives_are_interior(bundled_roots):
    system = ChamberSystem(bundled_roots)
    for chamber in system.enumerate_chambers():
        assert system.is_strongly_elliptic_regular(chamber.representative)
        assert chamber == system.chamber_of(chamber.representative)


def test_su21_signs(su21_roots):
    chambers = ChamberSystem(su21_roots).enumerate_chambers()
    assert [(1, 1), (-1, 1), (-1, -1)] == [c.signs for c in chambers]
    assert {'id': 1, 'signs': '-+'} == chambers[1].to_json_able()


def test_chamber_of(su21_roots):
    system = ChamberSystem(su21_roots)
    assert 0 == system.chamber_of(Weight((1, 1))).index
    assert 1 == system.chamber_of(Weight((1, Fraction(1, 4)))).index


@pytest.mark.parametrize('lam', [
    (Fraction(2, 3), Fraction(1, 3)),  # orthogonal to α2
    (0, 1),  # not dominant for α1
])
def test_chamber_of_refuses(lam, su21_roots):
    with pytest.raises(NotStronglyElliptic):
        ChamberSystem(su21_roots).chamber_of(Weight(lam))


def test_admissible_orbit(su21_roots):
    system = ChamberSystem(su21_roots)
    assert system.is_admissible_orbit(Weight((1, 1)))
    assert not system.is_admissible_orbit(Weight((Fraction(3, 2), 1)))
    with pytest.raises(NotAdmissibleOrbit):
        system.orbit(Weight((Fraction(3, 2), 1)))
    assert Weight((1, 1)) == system.orbit(Weight((1, 1))).lam


def test_c_norm(su21_roots):
    assert 8 == ChamberSystem(su21_roots).c_norm_sq(Weight((1, 1)))


def test_enumerate_orbits_sl2(sl2_roots):
    system = ChamberSystem(sl2_roots)
    holomorphic, antiholomorphic = system.enumerate_chambers()
    found = [sl2_roots.lattice_coords(o.lam) for o in system.enumerate_orbits(holomorphic, 4)]
    assert [(1,), (2,), (3,), (4,)] == found
    found = [sl2_roots.lattice_coords(o.lam) for o in system.enumerate_orbits(antiholomorphic, 4)]
    assert [(-4,), (-3,), (-2,), (-1,)] == found


def test_enumerate_orbits_scaled_form(sl2_roots):
    # with ‖α‖² = 4 the orbits γ, 2γ, 3γ have c-norm 2, 3, 4
    roots = RootSet.generate_roots(sl2_roots.datum.scaled(2))
    system = ChamberSystem(roots)
    found = [roots.lattice_coords(o.lam) for o in system.enumerate_orbits(system.enumerate_chambers()[0], 4)]
    assert [(1,), (2,), (3,)] == found


def test_enumerate_orbits_within_bound(bundled_roots):
    system = ChamberSystem(bundled_roots)
    for chamber in system.enumerate_chambers():
        orbits = system.enumerate_orbits(chamber, 6)
        assert orbits
        for orbit in orbits:
            assert chamber == orbit.chamber
            assert system.c_norm_sq(orbit.lam) <= 36
            assert system.is_admissible_orbit(orbit.lam)
            assert chamber == system.chamber_of(orbit.lam)


def test_enumerate_orbits_bound(sl2_roots):
    system = ChamberSystem(sl2_roots)
    with pytest.raises(ValueError):
        system.enumerate_orbits(system.enumerate_chambers()[0], 0)
