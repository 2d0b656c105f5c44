import os
from fractions import Fraction

import pytest

from orbita import utils
from orbita.utils import parse_rational, sqrt_lower, sqrt_upper, primitive_vector, worker_count


def test_list_modules():
    path = os.path.join(os.path.dirname(utils.__file__), 'Command')
    modules = utils.list_modules(path)
    assert ['admissible', 'blattner', 'chambers', 'orbits', 'restrict', 'selftest', 'spinor'] == modules


@pytest.mark.parametrize('value, expected', [
    (3, Fraction(3)),
    ("1/2", Fraction(1, 2)),
    (" -4/6 ", Fraction(-2, 3)),
    (Fraction(5, 7), Fraction(5, 7)),
])
def test_parse_rational(value, expected):
    assert expected == parse_rational(value)


@pytest.mark.parametrize('value', [0.5, True, None, "one"])
def test_parse_rational_refuses(value):
    with pytest.raises(ValueError):
        parse_rational(value)


@pytest.mark.parametrize('q, lower, upper', [
    (Fraction(4), Fraction(2), Fraction(2)),
    (Fraction(9, 4), Fraction(3, 2), Fraction(3, 2)),
    (Fraction(2), Fraction(1), Fraction(2)),
    (Fraction(1, 2), Fraction(1, 2), Fraction(1)),
    (Fraction(0), Fraction(0), Fraction(0)),
])
def test_sqrt_bounds(q, lower, upper):
    assert lower == sqrt_lower(q)
    assert upper == sqrt_upper(q)
    assert sqrt_lower(q) ** 2 <= q <= sqrt_upper(q) ** 2


def test_sqrt_negative():
    with pytest.raises(ValueError):
        sqrt_upper(Fraction(-1))


@pytest.mark.parametrize('v, expected', [
    ((Fraction(1, 2), Fraction(-1, 2)), (1, -1)),
    ((4, 6, 0), (2, 3, 0)),
    ((Fraction(-2, 3),), (-1,)),
])
def test_primitive_vector(v, expected):
    assert expected == primitive_vector(v)


def test_primitive_vector_zero():
    with pytest.raises(ValueError):
        primitive_vector((0, 0))


def test_worker_count(monkeypatch):
    monkeypatch.setenv('ORBITA_THREADS', '1')
    assert 1 == worker_count()
    monkeypatch.setenv('ORBITA_THREADS', 'many')
    assert (os.cpu_count() or 1) == worker_count()
    monkeypatch.delenv('ORBITA_THREADS')
    assert (os.cpu_count() or 1) == worker_count()
