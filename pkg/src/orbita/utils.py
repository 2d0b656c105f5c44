import math
import os
import typing
from fractions import Fraction

import sympy

Rational = typing.Union[int, str, Fraction]
Matrix = typing.Tuple[typing.Tuple[Fraction, ...], ...]


def list_modules(path, recurse=True):
    modules = []
    for file in sorted(os.listdir(path)):
        if file.startswith('_'): continue

        full_path = os.path.join(path, file)
        if os.path.isdir(full_path) and \
                os.path.exists(os.path.join(full_path, '__init__.py')):
            # this is a package
            if recurse:
                submodules = list_modules(full_path)
                modules.extend(["{}.{}".format(file, m) for m in submodules])
        elif file.endswith('.py'):
            modules.append(file[:-3])
    return modules


def parse_rational(value: Rational) -> Fraction:
    """
    Parse an integer or a "p/q" string into a Fraction.

    Floats are refused: every quantity handled by orbita is exact.

    :raises ValueError: on floats, booleans and unparsable strings
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError("Refusing inexact value {!r}".format(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError("Can not interpret {!r} as a rational".format(value))


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def rational_matrix(rows: typing.Iterable[typing.Iterable[Rational]]) -> Matrix:
    return tuple(tuple(parse_rational(x) for x in row) for row in rows)


def to_sympy(rows: typing.Iterable[typing.Iterable[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix([
        [sympy.Rational(x.numerator, x.denominator) for x in map(Fraction, row)]
        for row in rows
    ])


def from_sympy(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def from_sympy_matrix(m: sympy.Matrix) -> Matrix:
    return tuple(
        tuple(from_sympy(m[i, j]) for j in range(m.cols))
        for i in range(m.rows)
    )


def isqrt(n: int) -> int:
    root, _ = sympy.integer_nthroot(n, 2)
    return int(root)


def sqrt_lower(q: Fraction) -> Fraction:
    """
    Largest "easy" rational lower bound of sqrt(q): exact when q is a square
    of a rational, otherwise floor(sqrt(p*d))/d for q = p/d.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt of negative value {}".format(q))
    n = q.numerator * q.denominator
    return Fraction(isqrt(n), q.denominator)


def sqrt_upper(q: Fraction) -> Fraction:
    """
    Rational upper bound of sqrt(q), exact when q is a perfect square.
    """
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt of negative value {}".format(q))
    n = q.numerator * q.denominator
    root = isqrt(n)
    if root * root == n:
        return Fraction(root, q.denominator)
    return Fraction(root + 1, q.denominator)


def primitive_vector(v: typing.Sequence[Fraction]) -> typing.Tuple[int, ...]:
    """
    Scale a nonzero rational vector by a positive factor to the unique integer
    vector with coprime entries on the same ray.
    """
    v = [Fraction(x) for x in v]
    if all(x == 0 for x in v):
        raise ValueError("zero vector has no direction")
    common_denominator = 1
    for x in v:
        common_denominator = common_denominator * x.denominator // math.gcd(common_denominator, x.denominator)
    ints = [int(x * common_denominator) for x in v]
    g = 0
    for i in ints:
        g = math.gcd(g, abs(i))
    return tuple(i // g for i in ints)


def worker_count() -> int:
    """
    Size of worker pools, capped by the ORBITA_THREADS environment variable
    """
    default = os.cpu_count() or 1
    try:
        requested = int(os.environ['ORBITA_THREADS'])
    except (KeyError, ValueError):
        return default
    return max(1, min(requested, default))
