"""
YAML configuration files

    schema: orbita/1
    group:
      G:      {name, cartan, compact, [gram], [lattice]}
      Gprime: {...}                      # optional; absent means G′ = G
    embedding:
      dual_projection: [[...], ...]      # rank(G) rows of rank(G′) entries
    run:
      cutoff: 20
      depth: 12
      mode: certified                    # or stabilize
      orbit: [1, 1]                      # λ′ in Λ′ lattice coordinates
      orientation: [1]                   # optional, o in Λ lattice coordinates

Rationals are integers or "p/q" strings.
"""
import logging
import os
import typing
from fractions import Fraction

import attr
import yaml

from .BranchingEngine import Mode, PairConfig
from .OrbitaError import ConfigError
from .RootDatum import RootDatum, RootSet, Weight
from .utils import Matrix, parse_rational, rational_matrix, format_rational


logger = logging.getLogger(__name__)

SCHEMA = "orbita/1"
DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')
DEFAULT_CUTOFF = Fraction(10)


def bundled_names() -> typing.List[str]:
    return sorted(f[:-4] for f in os.listdir(DATA_DIR) if f.endswith('.cfg'))


def resolve(name_or_path: str) -> str:
    """
    An existing file path, or the name of a bundled config with or without
    the .cfg suffix
    """
    if os.path.isfile(name_or_path):
        return name_or_path
    name = os.path.basename(name_or_path)
    if not name.endswith('.cfg'):
        name += '.cfg'
    candidate = os.path.join(DATA_DIR, name)
    if os.path.isfile(candidate):
        return candidate
    raise ConfigError("no such config file or bundled config: {}".format(name_or_path),
                      bundled=bundled_names())


def _rational(value, where: str) -> Fraction:
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError("{}: {}".format(where, e))


def _vector(value, where: str) -> typing.Tuple[Fraction, ...]:
    if not isinstance(value, (list, tuple)):
        raise ConfigError("{}: expected a list".format(where))
    return tuple(_rational(x, "{}[{}]".format(where, i)) for i, x in enumerate(value))


def _matrix(value, where: str) -> Matrix:
    if not isinstance(value, (list, tuple)) or not value:
        raise ConfigError("{}: expected a list of rows".format(where))
    try:
        return rational_matrix(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise ConfigError("{}: {}".format(where, e))


def _rows_out(m: typing.Optional[Matrix]) -> typing.Optional[list]:
    if m is None:
        return None
    return [[_scalar_out(x) for x in row] for row in m]


def _scalar_out(x: Fraction) -> typing.Union[int, str]:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else format_rational(x)


@attr.s(slots=True, frozen=True, auto_attribs=True)
class GroupBlock:
    name: str
    cartan: typing.Tuple[typing.Tuple[int, ...], ...]
    compact: typing.Tuple[bool, ...]
    gram: typing.Optional[Matrix] = None
    lattice: typing.Optional[Matrix] = None

    @classmethod
    def from_dict(cls, d, where: str) -> "GroupBlock":
        if not isinstance(d, dict):
            raise ConfigError("{}: expected a mapping".format(where))
        unknown = set(d) - {'name', 'cartan', 'compact', 'gram', 'lattice'}
        if unknown:
            raise ConfigError("{}: unknown keys {}".format(where, sorted(unknown)))
        try:
            cartan = d['cartan']
            compact = d['compact']
        except KeyError as e:
            raise ConfigError("{}: missing key {}".format(where, e))
        if not isinstance(cartan, list) or not all(isinstance(row, list) for row in cartan):
            raise ConfigError("{}.cartan: expected a list of rows".format(where))
        if not all(isinstance(x, int) and not isinstance(x, bool) for row in cartan for x in row):
            raise ConfigError("{}.cartan: entries must be integers".format(where))
        if not isinstance(compact, list) or not all(isinstance(f, bool) for f in compact):
            raise ConfigError("{}.compact: expected a list of booleans".format(where))
        return cls(
            name=str(d.get('name', where)),
            cartan=tuple(tuple(row) for row in cartan),
            compact=tuple(compact),
            gram=None if d.get('gram') is None else _matrix(d['gram'], where + '.gram'),
            lattice=None if d.get('lattice') is None else _matrix(d['lattice'], where + '.lattice'),
        )

    def to_dict(self) -> dict:
        d = {
            'name': self.name,
            'cartan': [list(row) for row in self.cartan],
            'compact': list(self.compact),
        }
        if self.gram is not None:
            d['gram'] = _rows_out(self.gram)
        if self.lattice is not None:
            d['lattice'] = _rows_out(self.lattice)
        return d

    def datum(self) -> RootDatum:
        return RootDatum.build(self.name, self.cartan, self.compact, gram=self.gram, lattice=self.lattice)


@attr.s(slots=True, frozen=True, auto_attribs=True)
class RunBlock:
    cutoff: Fraction = DEFAULT_CUTOFF
    depth: typing.Optional[Fraction] = None
    mode: Mode = Mode.certified
    orbit: typing.Optional[typing.Tuple[Fraction, ...]] = None
    orientation: typing.Optional[typing.Tuple[Fraction, ...]] = None

    @classmethod
    def from_dict(cls, d) -> "RunBlock":
        if d is None:
            return cls()
        if not isinstance(d, dict):
            raise ConfigError("run: expected a mapping")
        unknown = set(d) - {'cutoff', 'depth', 'mode', 'orbit', 'orientation'}
        if unknown:
            raise ConfigError("run: unknown keys {}".format(sorted(unknown)))
        try:
            mode = Mode(d.get('mode', Mode.certified.value))
        except ValueError:
            raise ConfigError("run.mode: expected one of {}".format([m.value for m in Mode]))
        cutoff = _rational(d.get('cutoff', DEFAULT_CUTOFF), 'run.cutoff')
        if cutoff <= 0:
            raise ConfigError("run.cutoff must be positive")
        return cls(
            cutoff=cutoff,
            depth=None if d.get('depth') is None else _rational(d['depth'], 'run.depth'),
            mode=mode,
            orbit=None if d.get('orbit') is None else _vector(d['orbit'], 'run.orbit'),
            orientation=None if d.get('orientation') is None else _vector(d['orientation'], 'run.orientation'),
        )

    def to_dict(self) -> dict:
        d = {'cutoff': _scalar_out(self.cutoff), 'mode': self.mode.value}
        if self.depth is not None:
            d['depth'] = _scalar_out(self.depth)
        if self.orbit is not None:
            d['orbit'] = [_scalar_out(x) for x in self.orbit]
        if self.orientation is not None:
            d['orientation'] = [_scalar_out(x) for x in self.orientation]
        return d


@attr.s(slots=True, frozen=True, auto_attribs=True)
class Config:
    G: GroupBlock
    Gprime: typing.Optional[GroupBlock] = None
    dual_projection: typing.Optional[Matrix] = None
    run: RunBlock = attr.ib(factory=RunBlock)
    source: typing.Optional[str] = attr.ib(default=None, eq=False)

    @classmethod
    def from_dict(cls, d, source: typing.Optional[str] = None) -> "Config":
        """
        :raises ConfigError: on schema violations
        """
        if not isinstance(d, dict):
            raise ConfigError("config must be a mapping")
        if d.get('schema') != SCHEMA:
            raise ConfigError("unsupported or missing schema tag {!r}, expected {}".format(d.get('schema'), SCHEMA))
        group = d.get('group')
        if not isinstance(group, dict) or 'G' not in group:
            raise ConfigError("group.G is required")

        gprime = None
        if group.get('Gprime') is not None:
            gprime = GroupBlock.from_dict(group['Gprime'], 'group.Gprime')

        dual_projection = None
        embedding = d.get('embedding') or {}
        if not isinstance(embedding, dict):
            raise ConfigError("embedding: expected a mapping")
        if embedding.get('dual_projection') is not None:
            dual_projection = _matrix(embedding['dual_projection'], 'embedding.dual_projection')
        if gprime is not None and dual_projection is None:
            raise ConfigError("embedding.dual_projection is required with group.Gprime")

        return cls(
            G=GroupBlock.from_dict(group['G'], 'group.G'),
            Gprime=gprime,
            dual_projection=dual_projection,
            run=RunBlock.from_dict(d.get('run')),
            source=source,
        )

    @classmethod
    def loads(cls, text: str, source: typing.Optional[str] = None) -> "Config":
        try:
            payload = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise ConfigError("invalid YAML: {}".format(e))
        return cls.from_dict(payload, source)

    @classmethod
    def load(cls, name_or_path: str) -> "Config":
        path = resolve(name_or_path)
        logger.debug("loading config {}".format(path))
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return cls.loads(f.read(), source=path)
        except OSError as e:
            raise ConfigError("can not read {}: {}".format(path, e))

    def to_dict(self) -> dict:
        group = {'G': self.G.to_dict()}
        if self.Gprime is not None:
            group['Gprime'] = self.Gprime.to_dict()
        d = {'schema': SCHEMA, 'group': group}
        if self.dual_projection is not None:
            d['embedding'] = {'dual_projection': _rows_out(self.dual_projection)}
        d['run'] = self.run.to_dict()
        return d

    def dumps(self) -> str:
        return yaml.safe_dump(self.to_dict(), sort_keys=False, default_flow_style=None)

    @property
    def is_identity_pair(self) -> bool:
        return self.Gprime is None

    def datum_G(self) -> RootDatum:
        return self.G.datum()

    def datum_Gprime(self) -> RootDatum:
        return self.datum_G() if self.Gprime is None else self.Gprime.datum()

    def roots_G(self) -> RootSet:
        return RootSet.generate_roots(self.datum_G())

    def pair(self) -> PairConfig:
        datum_g = self.datum_G()
        datum_gprime = self.datum_Gprime()
        if self.dual_projection is None:
            return PairConfig.identity(datum_g, self._orientation(datum_g))
        return PairConfig.build(datum_gprime, datum_g, self.dual_projection, self._orientation(datum_g))

    def _orientation(self, datum: RootDatum) -> typing.Optional[Weight]:
        if self.run.orientation is None:
            return None
        try:
            return RootSet.generate_roots(datum).from_lattice_coords(self.run.orientation)
        except ValueError as e:
            raise ConfigError("run.orientation: {}".format(e))
