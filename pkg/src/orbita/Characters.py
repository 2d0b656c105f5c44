"""
Virtual characters of the compact group K (and of its cover K̃)

K-types are labelled by μ = highest weight + ρ_c, strictly dominant.
"""
import functools
import logging
import typing
from fractions import Fraction

import attr
import sortedcontainers

from .OrbitaError import NonTerminating, NotDominant
from .RootDatum import RootSet, Weight
from .Spinor import Coset, SpinorCharacter, cover_type
from .utils import sqrt_upper


logger = logging.getLogger(__name__)

MAX_PEELING_STEPS = 1000000


@attr.s(slots=True, frozen=True, auto_attribs=True, order=True)
class KTypeParam:
    mu: Weight
    coset: Coset = attr.ib(default=Coset.lattice, eq=False, order=False)

    def to_json_able(self) -> dict:
        return {'mu': self.mu.to_json_able(), 'coset': self.coset.value}


class TorusCharacter:
    """
    Finite integer combination of torus weights
    """
    def __init__(self, terms: typing.Optional[typing.Mapping[Weight, int]] = None):
        self.terms = sortedcontainers.SortedDict()
        if terms:
            for w, c in terms.items():
                self.add(w, c)

    def add(self, weight: Weight, coefficient: int):
        c = self.terms.get(weight, 0) + coefficient
        if c:
            self.terms[weight] = c
        else:
            self.terms.pop(weight, None)

    def __getitem__(self, weight: Weight) -> int:
        return self.terms.get(weight, 0)

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        if isinstance(other, TorusCharacter):
            return dict(self.terms) == dict(other.terms)
        if isinstance(other, dict):
            return dict(self.terms) == {w: c for w, c in other.items() if c}
        return NotImplemented

    def __mul__(self, other: "TorusCharacter") -> "TorusCharacter":
        product = TorusCharacter()
        for w1, c1 in self.items():
            for w2, c2 in other.items():
                product.add(w1 + w2, c1 * c2)
        return product

    def total(self) -> int:
        return sum(self.terms.values())

    def __repr__(self):
        return "TorusCharacter({})".format(dict(self.terms))


class VirtualCharacter:
    """
    Finite integer combination of K-types. Coefficients are exact for every
    K-type P with c^K_P <= `certified_norm`; None means exact everywhere.
    """
    def __init__(self,
                 coeffs: typing.Optional[typing.Mapping[KTypeParam, int]] = None,
                 certified_norm: typing.Optional[Fraction] = None):
        self.coeffs = sortedcontainers.SortedDict()
        if coeffs:
            for p, c in coeffs.items():
                self.add(p, c)
        if certified_norm is not None:
            certified_norm = max(Fraction(certified_norm), Fraction(0))
        self.certified_norm = certified_norm

    def add(self, param: KTypeParam, coefficient: int):
        c = self.coeffs.get(param, 0) + coefficient
        if c:
            self.coeffs[param] = c
        else:
            self.coeffs.pop(param, None)

    def __getitem__(self, key: typing.Union[KTypeParam, Weight]) -> int:
        if isinstance(key, Weight):
            key = KTypeParam(key)
        return self.coeffs.get(key, 0)

    def items(self):
        return self.coeffs.items()

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return dict(self.coeffs) == dict(other.coeffs)

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        out = VirtualCharacter(self.coeffs, _min_norm(self.certified_norm, other.certified_norm))
        for p, c in other.items():
            out.add(p, c)
        return out

    def scaled(self, k: int) -> "VirtualCharacter":
        return VirtualCharacter({p: k * c for p, c in self.items()}, self.certified_norm)

    def __repr__(self):
        return "VirtualCharacter({}, certified_norm={})".format(
            {p.mu: c for p, c in self.items()}, self.certified_norm)


def _min_norm(a: typing.Optional[Fraction], b: typing.Optional[Fraction]) -> typing.Optional[Fraction]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class CompactCharacters:
    """
    Character arithmetic for the compact group K of a RootSet: Weyl dimension,
    Freudenthal weight multiplicities, highest-weight peeling and tensoring
    with the spinor character.
    """
    def __init__(self, roots: RootSet):
        self.roots = roots
        self.cover = cover_type(roots)
        self.rho_c = roots.rho_c
        self._rho_c_pairing = {alpha: roots.inner(self.rho_c, alpha) for alpha in roots.positive_compact}
        # memo table belongs to this instance
        self.weight_multiplicities = functools.lru_cache(maxsize=None)(self._weight_multiplicities)

    def ktype(self, mu: Weight) -> KTypeParam:
        return KTypeParam(mu=mu, coset=self.cover.coset_of(mu - self.rho_c))

    def c_norm_sq(self, param: typing.Union[KTypeParam, Weight]) -> Fraction:
        """(μ+ρ_c, μ+ρ_c)"""
        mu = param.mu if isinstance(param, KTypeParam) else param
        return self.roots.norm_sq(mu + self.rho_c)

    def _require_dominant(self, mu: Weight):
        if not self.roots.is_compact_dominant(mu, strict=True) \
                or not self.roots.is_compact_integral(mu - self.rho_c):
            raise NotDominant("{} is not a K-type parameter".format(mu), weight=mu.to_json_able())

    def weyl_dimension(self, param: typing.Union[KTypeParam, Weight]) -> int:
        mu = param.mu if isinstance(param, KTypeParam) else param
        self._require_dominant(mu)
        dim = Fraction(1)
        for alpha in self.roots.positive_compact:
            dim *= self.roots.inner(mu, alpha) / self._rho_c_pairing[alpha]
        assert dim.denominator == 1
        return int(dim)

    def _height(self, weight: Weight) -> Fraction:
        return self.roots.inner(weight, self.rho_c)

    def _weight_multiplicities(self, mu: Weight) -> TorusCharacter:
        """
        Freudenthal recursion, layer by layer below the highest weight μ − ρ_c.

        Every weight of the module is reachable from the highest weight by
        subtracting simple compact roots through weights, so each layer only
        needs the candidates one step below the previous layer.
        """
        if isinstance(mu, KTypeParam):
            mu = mu.mu
        self._require_dominant(mu)
        roots = self.roots
        hw = mu - self.rho_c
        top_height = self._height(hw)
        top = roots.norm_sq(mu)

        mult = {hw: 1}
        layer = [hw]
        while layer:
            candidates = sorted({nu - a for nu in layer for a in roots.simple_compact})
            layer = []
            for nu in candidates:
                denominator = top - roots.norm_sq(nu + self.rho_c)
                if denominator <= 0:
                    continue
                numerator = Fraction(0)
                for alpha in roots.positive_compact:
                    higher = nu + alpha
                    while self._height(higher) <= top_height:
                        m = mult.get(higher, 0)
                        if m:
                            numerator += m * roots.inner(higher, alpha)
                        higher = higher + alpha
                m = 2 * numerator / denominator
                if m.denominator != 1:
                    raise NonTerminating("non-integral multiplicity {} at {}".format(m, nu))
                if m:
                    mult[nu] = int(m)
                    layer.append(nu)
        return TorusCharacter(mult)

    def character_of(self, param: typing.Union[KTypeParam, Weight]) -> TorusCharacter:
        mu = param.mu if isinstance(param, KTypeParam) else param
        return self.weight_multiplicities(mu)

    def decompose(self, t_char: typing.Union[TorusCharacter, typing.Mapping[Weight, int]],
                  certified_norm: typing.Optional[Fraction] = None) -> VirtualCharacter:
        """
        Peel off irreducible characters from the top: the remaining weight of
        greatest height (ties broken lexicographically) must be dominant and
        integral, and its whole irreducible character is subtracted.

        :raises NonTerminating: when the top weight is not dominant integral,
                                i.e. the input is not W_K-invariant
        """
        items = t_char.items()
        remaining = sortedcontainers.SortedDict()
        for w, c in items:
            if c:
                remaining[(self._height(w), w)] = c

        out = VirtualCharacter(certified_norm=certified_norm)
        steps = 0
        while remaining:
            steps += 1
            if steps > MAX_PEELING_STEPS:
                raise NonTerminating("decomposition did not terminate")
            (_, top), c = remaining.peekitem(-1)
            mu = top + self.rho_c
            if not self.roots.is_compact_dominant(mu, strict=True) \
                    or not self.roots.is_compact_integral(top):
                raise NonTerminating("top weight {} is not dominant integral".format(top),
                                     weight=top.to_json_able())
            for w, m in self.weight_multiplicities(mu).items():
                key = (self._height(w), w)
                left = remaining.get(key, 0) - c * m
                if left:
                    remaining[key] = left
                else:
                    remaining.pop(key, None)
            out.add(self.ktype(mu), c)
        return out

    def tensor_spinor(self, v: VirtualCharacter, spinor: SpinorCharacter) -> VirtualCharacter:
        """
        V ⊗ S, decomposed over K̃. The certified range shrinks by the largest
        spinor weight norm.
        """
        product = TorusCharacter()
        for param, c in v.items():
            for w, m in self.weight_multiplicities(param.mu).items():
                for nu, s in spinor.items():
                    product.add(w + nu, c * m * s)
        certified_norm = None
        if v.certified_norm is not None:
            certified_norm = v.certified_norm - sqrt_upper(spinor.max_norm_sq(self.roots))
        return self.decompose(product, certified_norm=certified_norm)


def branch_compact(param: KTypeParam,
                   source: CompactCharacters,
                   target: CompactCharacters,
                   emb: "EmbeddingData") -> VirtualCharacter:
    """
    Restrict the K′-type `param` to K along the embedding's dual projection.

    :raises IncompatibleLattices: when a projected weight leaves Λ̃
    """
    projected = TorusCharacter()
    for w, m in source.weight_multiplicities(param.mu).items():
        projected.add(emb.project(w), m)
    return target.decompose(projected)
