from fractions import Fraction

import pytest

from orbita.Admissibility import (
    ConeDesc, EmbeddingData, Exactness, Status,
    asymptotic_support_cone, check_admissibility, extreme_rays, in_cone, truncation_gap, _segment_minimum,
)
from orbita.BranchingEngine import BranchingEngine, PairConfig
from orbita.Config import Config
from orbita.OrbitaError import DegenerateCone, EmptySupport, IncompatibleLattices, ZeroGap
from orbita.RootDatum import RootDatum, RootSet, Weight


def w(*coords):
    return Weight(coords)


@pytest.fixture
def sl2xsl2_roots(request):
    del request  # unused
    return RootSet.generate_roots(Config.load('diag-sl2').datum_Gprime())


def test_in_cone():
    quadrant = [w(1, 0), w(0, 1)]
    assert in_cone(w(1, 1), quadrant)
    assert in_cone(w(0, 0), quadrant)
    assert not in_cone(w(-1, 0), quadrant)
    assert in_cone(w(0), [])
    assert not in_cone(w(1), [])


def test_extreme_rays():
    assert (w(0, 1), w(1, 0)) == extreme_rays([w(1, 0), w(0, 1), w(1, 1), w(2, 2)])
    # both directions of a line are kept
    assert (w(-1), w(1)) == extreme_rays([w(1), w(-1)])


def test_degenerate_cone():
    with pytest.raises(DegenerateCone):
        ConeDesc(generators=(w(1, 0), w(0, 0)))
    with pytest.raises(DegenerateCone):
        ConeDesc(generators=(w(1, 0), w(1)))
    assert ConeDesc(generators=()).is_zero


def test_embedding_lattice_check(sl2xsl2_roots):
    coarse = RootSet.generate_roots(RootDatum.build('sl2', [[2]], [False], lattice=[[1]]))
    with pytest.raises(IncompatibleLattices):
        EmbeddingData.build(sl2xsl2_roots, coarse, [[1, 1]])
    with pytest.raises(IncompatibleLattices):
        EmbeddingData.build(sl2xsl2_roots, coarse, [[1, 1, 0]])


def test_diagonal_embedding(diag_engine):
    emb = diag_engine.cfg.emb
    assert w(Fraction(3, 2)) == emb.project(w(Fraction(1, 2), 1))
    kernel = emb.kernel()
    assert 1 == len(kernel)
    assert kernel[0] in (w(1, -1), w(-1, 1))
    assert not emb.is_injective
    assert emb.cartan_level_complete
    assert ((1,), (1,)) == emb.lattice_witness


def test_identity_embedding(sl2_roots):
    emb = EmbeddingData.identity(sl2_roots)
    assert emb.is_injective
    assert w(Fraction(1, 2)) == emb.project(w(Fraction(1, 2)))


def test_diagonal_cone(diag_engine):
    orbit = diag_engine.orbit_prime(w(Fraction(1, 2), Fraction(1, 2)))
    cone, verdict = diag_engine.verdict(orbit)
    assert (w(0, 1), w(1, 0)) == cone.generators
    assert w(1, 1) == cone.apex
    assert Exactness.exact == cone.exactness
    assert Status.admissible == verdict.status
    assert verdict.admissible
    assert 1 == verdict.gap
    assert {'status': 'Admissible', 'backend': 'exact', 'gap': '1', 'witness': None,
            'margin': None, 'reason': ''} == verdict.to_json_able()


def test_holomorphic_antiholomorphic_witness(hol_antihol_engine):
    orbit = hol_antihol_engine.orbit_prime(w(Fraction(1, 2), Fraction(-1, 2)))
    cone, verdict = hol_antihol_engine.verdict(orbit)
    assert (w(0, -1), w(1, 0)) == cone.generators
    assert Status.not_admissible == verdict.status
    assert w(1, -1) == verdict.witness
    assert hol_antihol_engine.cfg.emb.project(verdict.witness).is_zero()


def test_identity_cone(sl2_engine):
    orbit = sl2_engine.orbit_prime(w(Fraction(1, 2)))
    cone, verdict = sl2_engine.verdict(orbit)
    assert (w(1),) == cone.generators
    assert Status.admissible == verdict.status
    assert 1 == verdict.gap


def test_sampled_cone_is_unknown(diag_engine):
    orbit = diag_engine.orbit_prime(w(Fraction(1, 2), Fraction(1, 2)))
    cone = asymptotic_support_cone(diag_engine.blattner, orbit, 12, n_samples=1, seed=3)
    assert Exactness.sampled == cone.exactness
    assert 1 == len(cone.generators)
    assert 0 < cone.margin < 1
    verdict = check_admissibility(cone, diag_engine.cfg.emb)
    assert Status.unknown == verdict.status
    assert cone.margin == verdict.margin
    assert verdict.gap is None


def test_sampling_is_seeded(diag_engine):
    orbit = diag_engine.orbit_prime(w(Fraction(1, 2), Fraction(1, 2)))
    first = asymptotic_support_cone(diag_engine.blattner, orbit, 12, n_samples=2, seed=7)
    again = asymptotic_support_cone(diag_engine.blattner, orbit, 12, n_samples=2, seed=7)
    assert first == again


def test_empty_support(diag_engine):
    orbit = diag_engine.orbit_prime(w(Fraction(1, 2), Fraction(1, 2)))
    with pytest.raises(EmptySupport):
        asymptotic_support_cone(diag_engine.blattner, orbit, 1)


def test_truncation_gap(diag_engine):
    emb = diag_engine.cfg.emb
    assert 1 == truncation_gap(ConeDesc(generators=()), emb)
    assert 1 == truncation_gap(ConeDesc(generators=(w(1, 0), w(0, 1))), emb)
    with pytest.raises(ZeroGap):
        truncation_gap(ConeDesc(generators=(w(1, -1),)), emb)


def test_segment_minimum(sl2xsl2_roots):
    emb = EmbeddingData.build(sl2xsl2_roots, sl2xsl2_roots, [[1, 1], [0, 1]])
    # interior critical point at t = (√5 − 1)/2 is a maximum
    assert 1 == _segment_minimum(w(1, 0), w(0, 1), emb)
    assert _segment_minimum(w(1, 0), w(-1, 0), emb) is None
    assert 1 == truncation_gap(ConeDesc(generators=(w(1, 0), w(0, 1))), emb)


def test_verdict_ignores_generator_scale(diag_engine, hol_antihol_engine):
    emb = diag_engine.cfg.emb
    unit = check_admissibility(ConeDesc(generators=(w(0, 1), w(1, 0))), emb)
    scaled = check_admissibility(ConeDesc(generators=(w(0, 3), w(Fraction(5, 2), 0))), emb)
    assert unit.to_json_able() == scaled.to_json_able()

    emb = hol_antihol_engine.cfg.emb
    unit = check_admissibility(ConeDesc(generators=(w(0, -1), w(1, 0))), emb)
    scaled = check_admissibility(ConeDesc(generators=(w(0, -2), w(7, 0))), emb)
    assert Status.not_admissible == scaled.status
    assert unit.witness == scaled.witness


@pytest.mark.parametrize('name, coords, status', [
    ('diag-sl2', (1, 1), Status.admissible),
    ('hol-antihol-sl2', (1, -1), Status.not_admissible),
])
@pytest.mark.parametrize('scale_gprime, scale_g', [
    (2, 1),
    (1, Fraction(3, 2)),
    (Fraction(1, 3), 5),
])
def test_verdict_ignores_form_scale(name, coords, status, scale_gprime, scale_g):
    config = Config.load(name)
    pair = PairConfig.build(config.datum_Gprime().scaled(scale_gprime), config.datum_G().scaled(scale_g),
                            config.dual_projection)
    engine = BranchingEngine(pair)
    cone, verdict = engine.verdict(engine.orbit_prime(engine.source.from_lattice_coords(coords)))
    assert status == verdict.status
    if status == Status.admissible:
        assert (w(0, 1), w(1, 0)) == cone.generators
        assert verdict.gap > 0
    else:
        assert w(1, -1) == verdict.witness


@pytest.mark.parametrize('name, orbits', [
    ('diag-sl2', [(1, 1), (1, 2), (2, 1), (2, 2)]),
    ('hol-antihol-sl2', [(1, -1), (2, -1), (1, -2)]),
])
def test_cone_depends_only_on_chamber(name, orbits):
    engine = BranchingEngine(Config.load(name).pair(), depth=30)
    cones = set()
    for coords in orbits:
        orbit = engine.orbit_prime(engine.source.from_lattice_coords(coords))
        cones.add(engine.cone(orbit).generators)
    assert 1 == len(cones)
