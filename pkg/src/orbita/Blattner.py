"""
Blattner multiplicities of discrete series K-types

    m_λ(μ) = Σ_{w ∈ W_K} ε(w) Q_n(w(μ) − λ − ρ_n(λ))

with Q_n the partition function of the noncompact roots positive on λ, and
K-types labelled by μ = highest weight + ρ_c. A K-type can only occur when
‖μ+ρ_c‖ >= ‖λ+ρ(λ)‖.
"""
import logging
import typing
from fractions import Fraction

import attr

from .Chamber import Chamber, ChamberSystem, OrbitParam
from .Characters import CompactCharacters, KTypeParam, VirtualCharacter
from .OrbitaError import NegativeMultiplicity
from .RootDatum import RootSet, Weight
from .utils import Rational


logger = logging.getLogger(__name__)


class NoncompactPartition:
    """
    Number of ways to write ν as an ℕ-combination of R_n^+(chamber).

    Roots are processed in lexicographic order; the memo is keyed on
    (ν, index of the first root still allowed). The functional (·, representative)
    is positive on every root used, which bounds each loop.
    """
    def __init__(self, roots: RootSet, chamber: Chamber):
        self.roots = roots
        self.chamber = chamber
        self.positive = tuple(sorted(roots.positive_noncompact_for(chamber.representative)))
        self._heights = tuple(roots.inner(beta, chamber.representative) for beta in self.positive)
        self.memo = {}  # type: typing.Dict[typing.Tuple[Weight, int], int]

    def count(self, nu: Weight) -> int:
        return self._count(nu, self.roots.inner(nu, self.chamber.representative), 0)

    def _count(self, nu: Weight, height: Fraction, i: int) -> int:
        if height < 0:
            return 0
        if i == len(self.positive):
            return 1 if nu.is_zero() else 0

        key = (nu, i)
        try:
            return self.memo[key]
        except KeyError:
            pass

        beta = self.positive[i]
        step = self._heights[i]
        total = 0
        rest = nu
        while height >= 0:
            total += self._count(rest, height, i + 1)
            rest = rest - beta
            height -= step
        self.memo[key] = total
        return total


def partition_count(roots: RootSet, nu: Weight, chamber: Chamber) -> int:
    return NoncompactPartition(roots, chamber).count(nu)


@attr.s(slots=True, frozen=True, auto_attribs=True)
class CNorms:
    """Squared c-norms ‖λ+ρ(λ)‖² and ‖μ+ρ_c‖²"""
    cG: Fraction
    cK: Fraction

    def in_window(self) -> bool:
        return self.cK >= self.cG


class Blattner:
    """
    Blattner restriction π_λ|_K for the discrete series of one group. Partition
    memo tables are kept per chamber for the lifetime of this object.
    """
    def __init__(self, roots: RootSet,
                 chambers: typing.Optional[ChamberSystem] = None,
                 characters: typing.Optional[CompactCharacters] = None):
        self.roots = roots
        self.chambers = chambers or ChamberSystem(roots)
        self.characters = characters or CompactCharacters(roots)
        self._partitions = {}  # type: typing.Dict[Chamber, NoncompactPartition]

    def partition(self, chamber: Chamber) -> NoncompactPartition:
        try:
            return self._partitions[chamber]
        except KeyError:
            p = NoncompactPartition(self.roots, chamber)
            self._partitions[chamber] = p
            return p

    def partition_count(self, nu: Weight, chamber: Chamber) -> int:
        return self.partition(chamber).count(nu)

    def c_norms(self, orbit: OrbitParam, param: KTypeParam) -> CNorms:
        return CNorms(
            cG=self.chambers.c_norm_sq(orbit.lam),
            cK=self.characters.c_norm_sq(param),
        )

    def blattner_multiplicity(self, orbit: OrbitParam, param: KTypeParam) -> int:
        """
        :raises NegativeMultiplicity: when the alternating sum comes out negative
        """
        lam = orbit.lam
        shift = lam + self.roots.rho_n(lam)
        partition = self.partition(orbit.chamber)
        m = 0
        for w in self.roots.weyl_group(compact_only=True):
            m += w.sign * partition.count(w.apply(param.mu) - shift)
        if m < 0:
            raise NegativeMultiplicity("Blattner sum is {} at {} for {}".format(m, param.mu, lam),
                                       orbit=lam.to_json_able(), mu=param.mu.to_json_able())
        return m

    def k_type_candidates(self, r: Rational) -> typing.List[KTypeParam]:
        """
        All K-type parameters μ (μ − ρ_c ∈ Λ, strictly dominant) with
        ‖μ+ρ_c‖ <= r
        """
        r = Fraction(r)
        rho_c = self.roots.rho_c
        out = []
        for x in self.roots.lattice_ball(2 * rho_c, r * r):
            mu = x - rho_c
            if self.roots.is_compact_dominant(mu, strict=True):
                out.append(KTypeParam(mu=mu, coset=self.characters.ktype(mu).coset))
        return out

    def restrict_to_K(self, orbit: OrbitParam, r: Rational) -> VirtualCharacter:
        """
        All K-types with c^K <= r and their multiplicities in π_λ. Only the
        shell c^G <= c^K <= r is evaluated.
        """
        r = Fraction(r)
        if r < 0:
            raise ValueError("cutoff must be nonnegative")
        c_g = self.chambers.c_norm_sq(orbit.lam)
        restriction = VirtualCharacter(certified_norm=r)
        evaluated = 0
        for param in self.k_type_candidates(r):
            if self.characters.c_norm_sq(param) < c_g:
                continue
            evaluated += 1
            m = self.blattner_multiplicity(orbit, param)
            if m:
                restriction.add(param, m)
        logger.debug("restrict_to_K({}, {}): {} candidates, {} K-types".format(
            orbit.lam, r, evaluated, len(restriction)))
        return restriction
