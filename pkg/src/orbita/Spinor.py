"""
Double-cover bookkeeping and the spinor character of p

K̃ is K itself when ρ_n lies in Λ, a double cover otherwise; weights of the
cover live in Λ̃ = Λ ∪ (ρ_n + Λ). Orientations of p are represented by a
strongly elliptic reference weight.
"""
import enum
import logging
import typing
from fractions import Fraction

import attr
import sortedcontainers

from .Chamber import OrbitParam
from .OrbitaError import NotStronglyElliptic, NotDominant, NotRegular, IncompatibleLattices
from .RootDatum import RootSet, Weight


logger = logging.getLogger(__name__)


class CoverKind(enum.Enum):
    isomorphism = "isomorphism"
    double_cover = "double_cover"


class Coset(enum.Enum):
    lattice = "L"
    shifted = "rho_n+L"


@attr.s(slots=True, frozen=True, auto_attribs=True)
class CoverInfo:
    kind: CoverKind
    rho_n_ref: Weight
    roots: RootSet = attr.ib(eq=False, repr=False)

    def coset_of(self, weight: Weight) -> Coset:
        """
        Which coset of Λ in Λ̃ the weight lies in

        :raises IncompatibleLattices: when the weight is not in Λ̃
        """
        if self.roots.in_lattice(weight):
            return Coset.lattice
        if self.roots.in_lattice(weight - self.rho_n_ref):
            return Coset.shifted
        raise IncompatibleLattices("{} is not a weight of the cover torus".format(weight),
                                   weight=weight.to_json_able())

    def shifted_coset(self, weight: Weight) -> Coset:
        """
        Tag for a weight that belongs to ρ_n + Λ by construction. When K̃ = K
        that coset is Λ itself, and the weight is still tagged shifted.

        :raises IncompatibleLattices: when the weight is not in ρ_n + Λ
        """
        if not self.roots.in_lattice(weight - self.rho_n_ref):
            raise IncompatibleLattices("{} is not in rho_n + L".format(weight),
                                       weight=weight.to_json_able())
        return Coset.shifted

    def in_cover_lattice(self, weight: Weight) -> bool:
        try:
            self.coset_of(weight)
            return True
        except IncompatibleLattices:
            return False


@attr.s(slots=True, frozen=True, auto_attribs=True, order=True)
class CoverWeight:
    """
    A weight of T̃. For ρ_c-shifted parameters (K̃-types) the coset tag refers
    to coords − ρ_c.
    """
    coords: Weight
    coset: Coset = attr.ib(eq=False, order=False)


@attr.s(slots=True, frozen=True, auto_attribs=True, order=True)
class KOutParam:
    mu: CoverWeight


class SpinorCharacter:
    """
    Fully expanded ∏ (e^{β/2} − e^{−β/2}) over the noncompact roots positive
    on `orientation_ref`.
    """
    def __init__(self, terms: typing.Mapping[Weight, int], coset: Coset, orientation_ref: Weight):
        self.terms = sortedcontainers.SortedDict({w: c for w, c in terms.items() if c != 0})
        self.coset = coset
        self.orientation_ref = orientation_ref

    def __getitem__(self, weight: Weight) -> int:
        return self.terms.get(weight, 0)

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SpinorCharacter):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __neg__(self) -> "SpinorCharacter":
        return SpinorCharacter({w: -c for w, c in self.terms.items()}, self.coset, self.orientation_ref)

    def max_norm_sq(self, roots: RootSet) -> Fraction:
        return max((roots.norm_sq(w) for w in self.terms), default=Fraction(0))

    def to_json_able(self) -> typing.List[dict]:
        return [{'weight': w.to_json_able(), 'coefficient': c} for w, c in self.terms.items()]


def _require_strongly_elliptic(roots: RootSet, weight: Weight, dominant: bool = True):
    if dominant and not roots.is_compact_dominant(weight, strict=True):
        raise NotStronglyElliptic("{} is not strictly dominant for the compact roots".format(weight),
                                  weight=weight.to_json_able())
    try:
        roots.positive_noncompact_for(weight)
    except NotRegular as e:
        raise NotStronglyElliptic(str(e), details=e.details)


def cover_type(roots: RootSet) -> CoverInfo:
    rho_n = roots.rho_n_base
    kind = CoverKind.isomorphism if roots.in_lattice(rho_n) else CoverKind.double_cover
    logger.debug("{}: K~ -> K is {}".format(roots.datum.name, kind.value))
    return CoverInfo(kind=kind, rho_n_ref=rho_n, roots=roots)


def spinor_character(roots: RootSet, ref: Weight) -> SpinorCharacter:
    """
    :raises NotStronglyElliptic: when `ref` is not strongly elliptic regular
    """
    _require_strongly_elliptic(roots, ref)
    terms = {Weight.zero(roots.rank): 1}
    for beta in roots.positive_noncompact_for(ref):
        half = Fraction(1, 2) * beta
        product = {}
        for w, c in terms.items():
            product[w + half] = product.get(w + half, 0) + c
            product[w - half] = product.get(w - half, 0) - c
        terms = product
    coset = cover_type(roots).shifted_coset(roots.rho_n(ref))
    return SpinorCharacter(terms, coset, ref)


def orientation_ratio(roots: RootSet, lambda1: Weight, lambda2: Weight) -> int:
    """
    (−1)^#flips, the number of noncompact roots positive on λ1 and negative
    on λ2. Each flip reverses one oriented root plane of p.

    Only noncompact regularity is needed, so −λ is a legal argument.

    :raises NotStronglyElliptic: when either weight is orthogonal to a noncompact root
    """
    _require_strongly_elliptic(roots, lambda1, dominant=False)
    _require_strongly_elliptic(roots, lambda2, dominant=False)
    flips = sum(1 for beta in roots.positive_noncompact_for(lambda1) if roots.inner(beta, lambda2) < 0)
    return -1 if flips % 2 else 1


def orbit_to_Kout(cover: CoverInfo, orbit: OrbitParam) -> KOutParam:
    """
    λ as a K̃-type parameter; λ − ρ_c lies in ρ_n + Λ for every admissible orbit.
    """
    coset = cover.shifted_coset(orbit.lam - cover.roots.rho_c)
    return KOutParam(mu=CoverWeight(coords=orbit.lam, coset=coset))


def in_K_out(roots: RootSet, mu: typing.Union[CoverWeight, Weight]) -> bool:
    """
    μ − ρ_c ∈ ρ_n + Λ

    :raises NotDominant: when μ is not strictly dominant for the compact roots
    """
    if isinstance(mu, CoverWeight):
        mu = mu.coords
    if not roots.is_compact_dominant(mu, strict=True):
        raise NotDominant("{} is not strictly dominant".format(mu), weight=mu.to_json_able())
    return roots.in_lattice(mu - roots.rho_c - roots.rho_n_base)
