"""
Exact root-system core

Weights are rational row vectors in the basis of simple roots. A RootDatum is
the configured input (Cartan matrix, compactness of the simple roots,
invariant form and the lattice Λ); a RootSet is everything derived from it.
"""
import collections
import functools
import itertools
import logging
import math
import typing
from fractions import Fraction

import attr

from .OrbitaError import InvalidCartan, InconsistentFlags, IncompatibleLattices, NotRegular
from .utils import Matrix, Rational, rational_matrix, to_sympy, from_sympy_matrix, sqrt_upper


logger = logging.getLogger(__name__)

MAX_ROOTS = 2000


def _fractions(v: typing.Iterable[Rational]) -> typing.Tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


@attr.s(slots=True, frozen=True, auto_attribs=True, order=True, repr=False)
class Weight:
    coords: typing.Tuple[Fraction, ...] = attr.ib(converter=_fractions)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def unit(cls, rank: int, i: int) -> "Weight":
        return cls(tuple(int(i == j) for j in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: Rational) -> "Weight":
        k = Fraction(k)
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __repr__(self):
        return "Weight({})".format(", ".join(str(x) for x in self.coords))

    def to_json_able(self) -> typing.List[str]:
        return [str(x) for x in self.coords]


def _validate_cartan(cartan: typing.Tuple[typing.Tuple[int, ...], ...]):
    rank = len(cartan)
    if rank == 0:
        raise InvalidCartan("empty Cartan matrix")
    for i, row in enumerate(cartan):
        if len(row) != rank:
            raise InvalidCartan("Cartan matrix is not square", row=i)
        for j, a_ij in enumerate(row):
            if i == j and a_ij != 2:
                raise InvalidCartan("diagonal entry must be 2", i=i)
            if i != j:
                if a_ij > 0:
                    raise InvalidCartan("off-diagonal entry must be <= 0", i=i, j=j)
                if (a_ij == 0) != (cartan[j][i] == 0):
                    raise InvalidCartan("zero pattern is not symmetric", i=i, j=j)


def symmetrized_gram(cartan: typing.Sequence[typing.Sequence[int]]) -> Matrix:
    """
    The invariant form obtained by symmetrizing the Cartan matrix, normalized
    so that the short roots of every connected component have length² 2.

    :raises InvalidCartan: when the matrix is not symmetrizable
    """
    rank = len(cartan)
    lengths = [None] * rank
    for start in range(rank):
        if lengths[start] is not None:
            continue
        component = [start]
        lengths[start] = Fraction(1)
        queue = collections.deque([start])
        while queue:
            i = queue.popleft()
            for j in range(rank):
                if j == i or cartan[i][j] == 0:
                    continue
                length_j = lengths[i] * Fraction(cartan[i][j], cartan[j][i])
                if lengths[j] is None:
                    lengths[j] = length_j
                    component.append(j)
                    queue.append(j)
                elif lengths[j] != length_j:
                    raise InvalidCartan("Cartan matrix is not symmetrizable", i=i, j=j)
        scale = 2 / min(lengths[i] for i in component)
        for i in component:
            lengths[i] *= scale

    return tuple(
        tuple(Fraction(cartan[i][j]) * lengths[i] / 2 for j in range(rank))
        for i in range(rank)
    )


def fundamental_weights(cartan: typing.Sequence[typing.Sequence[int]]) -> Matrix:
    """
    Rows are the fundamental weights in simple-root coordinates
    """
    m = to_sympy([[Fraction(x) for x in row] for row in cartan]).T
    if m.det() == 0:
        raise InvalidCartan("singular Cartan matrix")
    return from_sympy_matrix(m.inv())


@attr.s(slots=True, frozen=True, auto_attribs=True)
class RootDatum:
    """
    Configured group data. Use `RootDatum.build()` to get validation and
    defaults.
    """
    name: str
    cartan: typing.Tuple[typing.Tuple[int, ...], ...]
    compact_flags: typing.Tuple[bool, ...]
    gram: Matrix
    lattice_basis: Matrix

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @classmethod
    def build(cls,
              name: str,
              cartan: typing.Sequence[typing.Sequence[int]],
              compact: typing.Sequence[bool],
              gram: typing.Optional[typing.Sequence[typing.Sequence[Rational]]] = None,
              lattice: typing.Optional[typing.Sequence[typing.Sequence[Rational]]] = None,
              ) -> "RootDatum":
        try:
            cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        except (TypeError, ValueError) as e:
            raise InvalidCartan("Cartan entries must be integers: {}".format(e))
        _validate_cartan(cartan)
        rank = len(cartan)

        compact = tuple(bool(f) for f in compact)
        if len(compact) != rank:
            raise InconsistentFlags("expected {} compactness flags, got {}".format(rank, len(compact)))

        if gram is None:
            gram = symmetrized_gram(cartan)
        else:
            gram = rational_matrix(gram)
            if len(gram) != rank or any(len(row) != rank for row in gram):
                raise InvalidCartan("gram matrix must be {0}x{0}".format(rank))
        for i in range(rank):
            for j in range(rank):
                if gram[i][j] != gram[j][i]:
                    raise InvalidCartan("gram matrix is not symmetric", i=i, j=j)
                if cartan[i][j] * gram[i][i] != 2 * gram[i][j]:
                    raise InvalidCartan("gram matrix does not symmetrize the Cartan matrix", i=i, j=j)
        if not to_sympy(gram).is_positive_definite:
            raise InvalidCartan("invariant form is not positive definite")

        if lattice is None:
            lattice = fundamental_weights(cartan)
        else:
            lattice = rational_matrix(lattice)
        if len(lattice) != rank or any(len(row) != rank for row in lattice) \
                or to_sympy(lattice).det() == 0:
            raise IncompatibleLattices("lattice basis must be {0} independent vectors of length {0}".format(rank))

        datum = cls(name=name, cartan=cartan, compact_flags=compact, gram=gram, lattice_basis=lattice)
        lattice_inverse = _inverse(lattice)
        for i in range(rank):
            coords = _row_times(Weight.unit(rank, i).coords, lattice_inverse)
            if any(c.denominator != 1 for c in coords):
                raise IncompatibleLattices("simple root {} is not in the lattice".format(i))
        return datum

    def scaled(self, factor: Rational) -> "RootDatum":
        """
        Same datum with the invariant form multiplied by `factor` > 0
        """
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return attr.evolve(self, gram=tuple(tuple(factor * x for x in row) for row in self.gram))


@functools.lru_cache(maxsize=None)
def _inverse(m: Matrix) -> Matrix:
    return from_sympy_matrix(to_sympy(m).inv())


def _row_times(v: typing.Sequence[Fraction], m: Matrix) -> typing.Tuple[Fraction, ...]:
    return tuple(
        sum((v[i] * m[i][j] for i in range(len(v))), Fraction(0))
        for j in range(len(m[0]))
    )


def lattice_points(basis: Matrix, gram: Matrix, offset: Weight, radius_sq: Fraction) -> typing.List[Weight]:
    """
    All points x ∈ offset + ℤ-span(basis) with (x, x) <= radius_sq, sorted.

    Works in lattice coordinates x = (y + n)·B with y = offset·B⁻¹: the
    quadratic form there is Q = B·G·Bᵀ and |(y+n)_i| <= sqrt(radius_sq·(Q⁻¹)_ii).
    """
    radius_sq = Fraction(radius_sq)
    if radius_sq < 0:
        return []
    rank = len(basis)
    q = to_sympy(basis) * to_sympy(gram) * to_sympy(basis).T
    q_inverse = from_sympy_matrix(q.inv())
    y = _row_times(offset.coords, _inverse(basis))

    ranges = []
    for i in range(rank):
        s = sqrt_upper(radius_sq * q_inverse[i][i])
        ranges.append(range(math.ceil(-y[i] - s), math.floor(-y[i] + s) + 1))

    points = []
    for n in itertools.product(*ranges):
        x = Weight(_row_times([y[i] + n[i] for i in range(rank)], basis))
        if _quadratic(x.coords, gram) <= radius_sq:
            points.append(x)
    points.sort()
    return points


def _quadratic(u: typing.Sequence[Fraction], gram: Matrix, v: typing.Sequence[Fraction] = None) -> Fraction:
    if v is None:
        v = u
    total = Fraction(0)
    for i, u_i in enumerate(u):
        if u_i == 0:
            continue
        row = gram[i]
        total += u_i * sum((row[j] * v_j for j, v_j in enumerate(v) if v_j != 0), Fraction(0))
    return total


@attr.s(slots=True, frozen=True, auto_attribs=True)
class WeylElement:
    """
    Linear map on weights, stored as the images of the simple roots (rows)
    """
    matrix: Matrix
    sign: int

    def apply(self, weight: Weight) -> Weight:
        return Weight(_row_times(weight.coords, self.matrix))

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self ∘ other"""
        return WeylElement(
            matrix=tuple(_row_times(row, self.matrix) for row in other.matrix),
            sign=self.sign * other.sign,
        )


@attr.s(slots=True, frozen=True, auto_attribs=True)
class HalfSums:
    rho: Weight
    rho_c: Weight
    rho_n: Weight


class RootSet:
    """
    All roots of a RootDatum with their compactness, the fixed positive system
    (positive = nonnegative simple-root coordinates), W_K, W, and the lattice.
    """

    def __init__(self, datum: RootDatum, positive: typing.Dict[Weight, bool]):
        self.datum = datum
        self.rank = datum.rank
        self.gram = datum.gram

        self.positive_roots = tuple(sorted(positive, key=lambda r: (sum(r.coords), r)))
        self._compact = {}
        for root, compact in positive.items():
            self._compact[root] = compact
            self._compact[-root] = compact
        self.roots = self.positive_roots + tuple(-r for r in self.positive_roots)
        self.positive_compact = tuple(r for r in self.positive_roots if positive[r])
        self.positive_noncompact = tuple(r for r in self.positive_roots if not positive[r])
        self.simple_roots = tuple(Weight.unit(self.rank, i) for i in range(self.rank))
        self.simple_compact = tuple(
            r for r in self.positive_compact
            if not any((r - s) in positive and positive[r - s] for s in self.positive_compact)
        )

        self.rho_c = Fraction(1, 2) * self._sum(self.positive_compact)
        self.rho_n_base = Fraction(1, 2) * self._sum(self.positive_noncompact)

        self._lattice_inverse = _inverse(datum.lattice_basis)
        self._weyl_groups = {}

    @classmethod
    def generate_roots(cls, datum: RootDatum) -> "RootSet":
        """
        Close the simple roots under the root-string rule and propagate the
        compactness flags with [k,k]⊂k, [k,p]⊂p, [p,p]⊂k.

        :raises InvalidCartan: when the root system does not close (not of finite type)
        :raises InconsistentFlags: when two paths give a root different flags
        """
        rank = datum.rank
        simple = [Weight.unit(rank, i) for i in range(rank)]
        positive = {s: datum.compact_flags[i] for i, s in enumerate(simple)}

        layer = list(simple)
        while layer:
            next_layer = {}
            for beta in sorted(layer):
                for i, alpha in enumerate(simple):
                    down = 0
                    while (beta - (down + 1) * alpha) in positive:
                        down += 1
                    pairing = sum((beta.coords[j] * datum.cartan[i][j] for j in range(rank)), Fraction(0))
                    up = down - pairing
                    if up <= 0:
                        continue
                    gamma = beta + alpha
                    flag = positive[beta] == datum.compact_flags[i]
                    if next_layer.get(gamma, flag) != flag:
                        raise InconsistentFlags("root {} gets conflicting compactness".format(gamma),
                                                root=gamma.to_json_able())
                    next_layer[gamma] = flag
            positive.update(next_layer)
            layer = list(next_layer)
            if len(positive) > MAX_ROOTS:
                raise InvalidCartan("root system does not close; not of finite type")

        roots = cls(datum, positive)
        roots.check_closure_rules()
        logger.debug("{}: {} positive roots, {} compact".format(
            datum.name, len(roots.positive_roots), len(roots.positive_compact)))
        return roots

    def _sum(self, weights: typing.Iterable[Weight]) -> Weight:
        total = Weight.zero(self.rank)
        for w in weights:
            total = total + w
        return total

    def check_closure_rules(self):
        """
        Exhaustive check over all root pairs. Raises InconsistentFlags on violation.
        """
        for a, b in itertools.combinations_with_replacement(self.roots, 2):
            c = a + b
            if c not in self._compact:
                continue
            expected = self._compact[a] == self._compact[b]
            if self._compact[c] != expected:
                raise InconsistentFlags("closure rule violated by {} + {}".format(a, b),
                                        roots=[a.to_json_able(), b.to_json_able()])

    def is_compact(self, root: Weight) -> bool:
        return self._compact[root]

    @property
    def noncompact_roots(self) -> typing.Tuple[Weight, ...]:
        return self.positive_noncompact + tuple(-r for r in self.positive_noncompact)

    def inner(self, mu: Weight, nu: Weight) -> Fraction:
        return _quadratic(mu.coords, self.gram, nu.coords)

    def norm_sq(self, mu: Weight) -> Fraction:
        return _quadratic(mu.coords, self.gram)

    def coroot_pairing(self, mu: Weight, alpha: Weight) -> Fraction:
        """⟨μ, α^∨⟩ = 2(μ,α)/(α,α)"""
        return 2 * self.inner(mu, alpha) / self.norm_sq(alpha)

    def reflect(self, mu: Weight, alpha: Weight) -> Weight:
        return mu - self.coroot_pairing(mu, alpha) * alpha

    def fundamental_coords(self, mu: Weight) -> typing.Tuple[Fraction, ...]:
        return tuple(self.coroot_pairing(mu, alpha) for alpha in self.simple_roots)

    def is_regular(self, xi: Weight) -> bool:
        return all(self.inner(xi, alpha) != 0 for alpha in self.positive_roots)

    def is_compact_dominant(self, mu: Weight, strict: bool = False) -> bool:
        for alpha in self.positive_compact:
            p = self.inner(mu, alpha)
            if p < 0 or (strict and p == 0):
                return False
        return True

    def is_compact_integral(self, mu: Weight) -> bool:
        return all(self.coroot_pairing(mu, alpha).denominator == 1 for alpha in self.simple_compact)

    def rho_n(self, xi: Weight) -> Weight:
        """½ Σ of the noncompact roots β with (β, ξ) > 0"""
        return Fraction(1, 2) * self._sum(self.positive_noncompact_for(xi))

    def positive_noncompact_for(self, xi: Weight) -> typing.Tuple[Weight, ...]:
        """
        R_n^+(ξ): the noncompact roots positive on ξ, in the order of the
        fixed positive noncompact roots
        """
        out = []
        for beta in self.positive_noncompact:
            p = self.inner(xi, beta)
            if p == 0:
                raise NotRegular("{} is orthogonal to noncompact root {}".format(xi, beta),
                                 weight=xi.to_json_able(), root=beta.to_json_able())
            out.append(beta if p > 0 else -beta)
        return tuple(out)

    def half_sums(self, xi: Weight) -> HalfSums:
        """
        ρ(ξ), ρ_c and ρ_n(ξ)

        :raises NotRegular: when ξ is orthogonal to some root
        """
        positive = []
        for alpha in self.positive_roots:
            p = self.inner(xi, alpha)
            if p == 0:
                raise NotRegular("{} is orthogonal to root {}".format(xi, alpha),
                                 weight=xi.to_json_able(), root=alpha.to_json_able())
            positive.append(alpha if p > 0 else -alpha)
        return HalfSums(
            rho=Fraction(1, 2) * self._sum(positive),
            rho_c=self.rho_c,
            rho_n=Fraction(1, 2) * self._sum(r for r in positive if not self._compact[r]),
        )

    def weyl_group(self, compact_only: bool = True) -> typing.Tuple[WeylElement, ...]:
        """
        W_K (generated by the compact reflections) or, with
        `compact_only=False`, the full Weyl group W. Identity first.
        """
        try:
            return self._weyl_groups[compact_only]
        except KeyError:
            pass

        generators = self.simple_compact if compact_only else self.simple_roots
        reflections = [
            WeylElement(
                matrix=tuple(self.reflect(s, alpha).coords for s in self.simple_roots),
                sign=-1,
            )
            for alpha in generators
        ]
        identity = WeylElement(matrix=tuple(s.coords for s in self.simple_roots), sign=1)
        seen = {identity.matrix: identity}
        queue = collections.deque([identity])
        while queue:
            w = queue.popleft()
            for s in reflections:
                sw = s.compose(w)
                if sw.matrix not in seen:
                    seen[sw.matrix] = sw
                    queue.append(sw)
        group = tuple(seen.values())
        self._weyl_groups[compact_only] = group
        return group

    def lattice_coords(self, mu: Weight) -> typing.Tuple[Fraction, ...]:
        return _row_times(mu.coords, self._lattice_inverse)

    def in_lattice(self, mu: Weight) -> bool:
        return all(c.denominator == 1 for c in self.lattice_coords(mu))

    def from_lattice_coords(self, coords: typing.Sequence[Rational]) -> Weight:
        coords = _fractions(coords)
        if len(coords) != self.rank:
            raise ValueError("expected {} lattice coordinates, got {}".format(self.rank, len(coords)))
        return Weight(_row_times(coords, self.datum.lattice_basis))

    def lattice_ball(self, offset: Weight, radius_sq: Fraction) -> typing.List[Weight]:
        """All x ∈ offset + Λ with (x, x) <= radius_sq"""
        return lattice_points(self.datum.lattice_basis, self.gram, offset, radius_sq)

    def root_lattice_ball(self, radius_sq: Fraction) -> typing.List[Weight]:
        """All ℤ-combinations of simple roots with (x, x) <= radius_sq"""
        basis = tuple(s.coords for s in self.simple_roots)
        return lattice_points(basis, self.gram, Weight.zero(self.rank), radius_sq)
