from fractions import Fraction

import pytest

from orbita.Blattner import Blattner, partition_count
from orbita.Chamber import ChamberSystem
from orbita.RootDatum import Weight
from orbita.SelfTest import naive_blattner, naive_partition_count

half = Fraction(1, 2)


def test_sp4_partition(sp4_roots):
    holomorphic = ChamberSystem(sp4_roots).enumerate_chambers()[0]
    assert 2 == partition_count(sp4_roots, Weight((2, 2)), holomorphic)
    assert 1 == partition_count(sp4_roots, Weight((0, 0)), holomorphic)
    assert 0 == partition_count(sp4_roots, Weight((1, 0)), holomorphic)
    assert 0 == partition_count(sp4_roots, Weight((0, -1)), holomorphic)


def test_partition_against_brute_force(bundled_roots):
    blattner = Blattner(bundled_roots)
    ball = bundled_roots.root_lattice_ball(Fraction(20))
    for chamber in blattner.chambers.enumerate_chambers():
        positive = bundled_roots.positive_noncompact_for(chamber.representative)
        for nu in ball:
            assert naive_partition_count(bundled_roots, nu, positive, chamber.representative) \
                   == blattner.partition_count(nu, chamber)


@pytest.mark.parametrize('k', [1, 2, 3])
def test_sl2_ladder(k, sl2_roots):
    blattner = Blattner(sl2_roots)
    orbit = blattner.chambers.orbit(Weight((k * half,)))
    restriction = blattner.restrict_to_K(orbit, 8)
    expected = {}
    n = k + 1
    while n * n <= 128:  # ‖nγ‖² = n²/2
        expected[Weight((n * half,))] = 1
        n += 2
    assert expected == {p.mu: c for p, c in restriction.items()}
    assert Fraction(8) == restriction.certified_norm


def test_sl2_antiholomorphic_ladder(sl2_roots):
    blattner = Blattner(sl2_roots)
    orbit = blattner.chambers.orbit(Weight((-half,)))
    restriction = blattner.restrict_to_K(orbit, 5)
    assert [Weight((-3,)), Weight((-2,)), Weight((-1,))] == sorted(p.mu for p in restriction)


def test_su21_minimal_ktype(su21_roots):
    blattner = Blattner(su21_roots)
    orbit = blattner.chambers.orbit(Weight((1, 1)))
    minimal = Weight((Fraction(3, 2), 2))
    assert 1 == blattner.blattner_multiplicity(orbit, blattner.characters.ktype(minimal))
    norms = blattner.c_norms(orbit, blattner.characters.ktype(minimal))
    assert norms.in_window()
    restriction = blattner.restrict_to_K(orbit, 5)
    lowest = min(restriction, key=lambda p: (blattner.characters.c_norm_sq(p), p))
    assert minimal == lowest.mu


def test_restriction_against_brute_force(bundled_roots):
    blattner = Blattner(bundled_roots)
    for chamber in blattner.chambers.enumerate_chambers():
        orbit = blattner.chambers.enumerate_orbits(chamber, 5)[0]
        found = {p.mu: c for p, c in blattner.restrict_to_K(orbit, 5).items()}
        for param in blattner.k_type_candidates(5):
            assert naive_blattner(bundled_roots, orbit, param.mu) == found.get(param.mu, 0)


def test_negative_cutoff(sl2_roots):
    blattner = Blattner(sl2_roots)
    orbit = blattner.chambers.orbit(Weight((half,)))
    with pytest.raises(ValueError):
        blattner.restrict_to_K(orbit, -1)
