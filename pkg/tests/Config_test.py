from fractions import Fraction

import pytest

from orbita.BranchingEngine import Mode
from orbita.Config import Config, bundled_names, resolve
from orbita.OrbitaError import ConfigError, InvalidCartan
from orbita.RootDatum import Weight


MINIMAL = """
schema: orbita/1
group:
  G:
    name: su21
    cartan: [[2, -1], [-1, 2]]
    compact: [true, false]
"""


def test_bundled_names():
    assert ['diag-sl2', 'hol-antihol-sl2', 'sl2', 'sp4', 'su21'] == bundled_names()


@pytest.mark.parametrize('name', ['diag-sl2', 'hol-antihol-sl2', 'sl2', 'sp4', 'su21'])
def test_round_trip(name):
    config = Config.load(name)
    assert config == Config.loads(config.dumps())
    assert config.source.endswith(name + '.cfg')


def test_resolve(tmp_path):
    assert resolve('sl2') == resolve('sl2.cfg')
    path = tmp_path / 'mine.cfg'
    path.write_text(MINIMAL)
    assert str(path) == resolve(str(path))
    with pytest.raises(ConfigError) as e:
        resolve('no-such-group')
    assert 'sl2' in e.value.details['bundled']


def test_defaults():
    config = Config.loads(MINIMAL)
    assert config.is_identity_pair
    assert Fraction(10) == config.run.cutoff
    assert Mode.certified == config.run.mode
    assert config.run.depth is None
    assert config.run.orbit is None
    assert config.datum_G() == config.datum_Gprime()


def test_diagonal_pair():
    config = Config.load('diag-sl2')
    assert not config.is_identity_pair
    assert (Fraction(1), Fraction(1)) == config.run.orbit
    pair = config.pair()
    assert 2 == pair.roots_Gprime.rank
    assert 1 == pair.roots_G.rank
    assert pair.orientation_ref.coords[0] > 0


def test_orientation():
    config = Config.loads(Config.load('sl2').dumps().replace('orbit: [1]', 'orbit: [1]\n  orientation: [-1]'))
    assert Weight((Fraction(-1, 2),)) == config.pair().orientation_ref

    config = Config.loads(MINIMAL + "run:\n  orientation: [1]\n")
    with pytest.raises(ConfigError):
        config.pair()


@pytest.mark.parametrize('text', [
    "schema: orbita/2\ngroup: {G: {cartan: [[2]], compact: [false]}}",
    "group: {G: {cartan: [[2]], compact: [false]}}",
    "schema: orbita/1\ngroup: {}",
    "schema: orbita/1\ngroup: {G: {cartan: [[2]]}}",
    "schema: orbita/1\ngroup: {G: {cartan: [[2.0]], compact: [false]}}",
    "schema: orbita/1\ngroup: {G: {cartan: [[2]], compact: [0]}}",
    "schema: orbita/1\ngroup: {G: {cartan: [[2]], compact: [false], colour: red}}",
    "schema: orbita/1\ngroup: {G: {cartan: [[2]], compact: [false], lattice: [[0.5]]}}",
    "schema: orbita/1\ngroup: {G: {cartan: [[2]], compact: [false]}, Gprime: {cartan: [[2]], compact: [false]}}",
    "schema: orbita/1\ngroup: {G: {cartan: [[2]], compact: [false]}}\nrun: {cutoff: 0}",
    "schema: orbita/1\ngroup: {G: {cartan: [[2]], compact: [false]}}\nrun: {mode: guess}",
    "schema: orbita/1\ngroup: {G: {cartan: [[2]], compact: [false]}}\nrun: {orbit: 1}",
    "schema: orbita/1\ngroup: {G: {cartan: [[2]], compact: [false]}}\nrun: {verbose: true}",
    "schema: orbita/1\ngroup: [",
    "- just a list",
])
def test_invalid(text):
    with pytest.raises(ConfigError):
        Config.loads(text)


def test_invalid_cartan_surfaces_at_build():
    config = Config.loads("schema: orbita/1\ngroup: {G: {cartan: [[2, -1], [0, 2]], compact: [true, false]}}")
    with pytest.raises(InvalidCartan):
        config.datum_G()


def test_rational_strings():
    config = Config.loads(MINIMAL + 'run:\n  cutoff: "25/2"\n  depth: 15\n  mode: stabilize\n')
    assert Fraction(25, 2) == config.run.cutoff
    assert Fraction(15) == config.run.depth
    assert Mode.stabilize == config.run.mode
    assert {'cutoff': '25/2', 'mode': 'stabilize', 'depth': 15} == config.run.to_dict()
