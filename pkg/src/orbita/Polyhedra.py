"""
Exact polyhedra through the Parma Polyhedra Library

ppl only takes integer coefficients, so rational rows are cleared of their
denominators on the way in. Rays and lines come back as primitive integer
vectors, points as tuples of Fractions.
"""
import logging
import math
import typing
from fractions import Fraction

import ppl


logger = logging.getLogger(__name__)

Row = typing.Sequence[Fraction]


def _common_denominator(values: typing.Iterable[Fraction]) -> int:
    denominator = 1
    for x in values:
        denominator = denominator * x.denominator // math.gcd(denominator, x.denominator)
    return denominator


def _integral(row: Row, rhs=0) -> typing.Tuple[typing.List[int], int]:
    """(row, rhs) scaled by a positive integer so that every entry is integral"""
    values = [Fraction(x) for x in row] + [Fraction(rhs)]
    denominator = _common_denominator(values)
    ints = [int(x * denominator) for x in values]
    return ints[:-1], ints[-1]


def _check_length(row: Row, dimension: int):
    if len(row) != dimension:
        raise ValueError("row has {} entries, expected {}".format(len(row), dimension))


def _padded(values: typing.Sequence, dimension: int) -> typing.List[int]:
    values = [int(x) for x in values]
    return values + [0] * (dimension - len(values))


def add_constraints(poly: ppl.C_Polyhedron,
                    at_least: typing.Iterable[typing.Tuple[Row, Fraction]] = (),
                    equalities: typing.Iterable[typing.Tuple[Row, Fraction]] = ()):
    """Intersect `poly` in place with row·x >= rhs and row·x == rhs"""
    dimension = poly.space_dimension()
    cs = ppl.Constraint_System()
    for row, rhs in at_least:
        _check_length(row, dimension)
        coefficients, constant = _integral(row, rhs)
        cs.insert(ppl.Linear_Expression(coefficients, -constant) >= 0)
    for row, rhs in equalities:
        _check_length(row, dimension)
        coefficients, constant = _integral(row, rhs)
        cs.insert(ppl.Linear_Expression(coefficients, -constant) == 0)
    poly.add_constraints(cs)


def polyhedron(dimension: int,
               at_least: typing.Iterable[typing.Tuple[Row, Fraction]] = (),
               equalities: typing.Iterable[typing.Tuple[Row, Fraction]] = ()) -> ppl.C_Polyhedron:
    poly = ppl.C_Polyhedron(dimension, 'universe')
    add_constraints(poly, at_least=at_least, equalities=equalities)
    return poly


def cone(dimension: int, generators: typing.Iterable[Row]) -> ppl.C_Polyhedron:
    """
    ℝ≥0-span of `generators`: the origin plus one ray per generator.

    :raises ValueError: on a zero generator or one of the wrong length
    """
    gs = ppl.Generator_System()
    gs.insert(ppl.point(ppl.Linear_Expression([0] * dimension, 0)))
    for g in generators:
        _check_length(g, dimension)
        coefficients, _ = _integral(g)
        if not any(coefficients):
            raise ValueError("zero generator")
        gs.insert(ppl.ray(ppl.Linear_Expression(coefficients, 0)))
    poly = ppl.C_Polyhedron(dimension, 'empty')
    poly.add_generators(gs)
    return poly


def contains(poly: ppl.C_Polyhedron, v: Row) -> bool:
    dimension = poly.space_dimension()
    _check_length(v, dimension)
    v = [Fraction(x) for x in v]
    denominator = _common_denominator(v)
    single = ppl.C_Polyhedron(dimension, 'empty')
    single.add_generator(ppl.point(ppl.Linear_Expression([int(x * denominator) for x in v], 0), denominator))
    return poly.contains(single)


def points(poly: ppl.C_Polyhedron) -> typing.List[typing.Tuple[Fraction, ...]]:
    dimension = poly.space_dimension()
    found = []
    for gen in poly.minimized_generators():
        if gen.is_point():
            divisor = int(gen.divisor())
            found.append(tuple(Fraction(c, divisor) for c in _padded(gen.coefficients(), dimension)))
    return sorted(found)


def directions(poly: ppl.C_Polyhedron
               ) -> typing.Tuple[typing.List[typing.Tuple[int, ...]], typing.List[typing.Tuple[int, ...]]]:
    """
    (rays, lines) of the minimized generator system, each sorted. For a cone
    the rays are its extreme rays and the lines span its lineality space.
    """
    dimension = poly.space_dimension()
    rays = []
    lines = []
    for gen in poly.minimized_generators():
        if gen.is_ray():
            rays.append(tuple(_padded(gen.coefficients(), dimension)))
        elif gen.is_line():
            lines.append(tuple(_padded(gen.coefficients(), dimension)))
    return sorted(rays), sorted(lines)


def feasible_point(dimension: int,
                   at_least: typing.Iterable[typing.Tuple[Row, Fraction]] = (),
                   equalities: typing.Iterable[typing.Tuple[Row, Fraction]] = ()
                   ) -> typing.Optional[typing.Tuple[Fraction, ...]]:
    """Smallest point of the minimized generator system, None when the polyhedron is empty"""
    poly = polyhedron(dimension, at_least=at_least, equalities=equalities)
    if poly.is_empty():
        logger.debug("empty polyhedron ({} dims)".format(dimension))
        return None
    return points(poly)[0]
