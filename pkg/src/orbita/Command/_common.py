import argparse
import typing
from fractions import Fraction

from ..Chamber import Chamber, ChamberSystem
from ..Config import Config
from ..OrbitaError import ConfigError
from ..RootDatum import RootSet, Weight
from ..utils import parse_rational


def add_shared_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--pair', '--config', dest='config', type=str,
                        help="Config file, or the name of a bundled config")
    parser.add_argument('--cutoff', type=str, help="c-norm cutoff r (default: from config)")
    parser.add_argument('--depth', type=str, help="Depth of the asymptotic cone estimate")
    parser.add_argument('--format', choices=['json', 'csv'], default='json', help="Output format")
    parser.add_argument('--stabilize', action='store_true', help="Certify by two-radius stabilization")
    parser.add_argument('--orbit', type=str, help="Comma separated lattice coordinates of λ")
    parser.add_argument('--chamber', type=int, help="Chamber id")


def rational_arg(value: typing.Optional[str], name: str) -> typing.Optional[Fraction]:
    if value is None:
        return None
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError("--{}: {}".format(name, e))


def coords_arg(value: str) -> typing.Tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(x) for x in value.split(','))
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError("--orbit: {}".format(e))


def require_config(config: typing.Optional[Config]) -> Config:
    if config is None:
        raise ConfigError("--pair is required for this command")
    return config


def cutoff(args, config: Config) -> Fraction:
    value = rational_arg(args.cutoff, 'cutoff')
    if value is None:
        return config.run.cutoff
    if value <= 0:
        raise ConfigError("--cutoff must be positive")
    return value


def depth(args, config: Config) -> typing.Optional[Fraction]:
    value = rational_arg(args.depth, 'depth')
    return config.run.depth if value is None else value


def orbit_weight(args, config: Config, roots: RootSet) -> Weight:
    """
    λ from --orbit, falling back to run.orbit of the config
    """
    if args.orbit is not None:
        coords = coords_arg(args.orbit)
    elif config.run.orbit is not None:
        coords = config.run.orbit
    else:
        raise ConfigError("no orbit given; use --orbit or run.orbit")
    try:
        return roots.from_lattice_coords(coords)
    except ValueError as e:
        raise ConfigError("--orbit: {}".format(e))


def chamber_arg(args, chambers: ChamberSystem) -> typing.Optional[Chamber]:
    if args.chamber is None:
        return None
    all_chambers = chambers.enumerate_chambers()
    if not 0 <= args.chamber < len(all_chambers):
        raise ConfigError("--chamber must be between 0 and {}".format(len(all_chambers) - 1))
    return all_chambers[args.chamber]


def lattice_coords(roots: RootSet, weight: Weight) -> typing.List[str]:
    return [str(c) for c in roots.lattice_coords(weight)]


def sort_key(roots: RootSet, weight: Weight) -> tuple:
    return tuple(roots.lattice_coords(weight))
