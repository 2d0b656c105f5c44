"""
Branching of a discrete series of G′ to G ⊂ G′

The restriction π′|_{K′} is pushed to K, tensored with the spinor character
S^o of p and decomposed over K̃. The result is a signed sum of single K̃-types
λ, one per discrete series π_λ of G, and the sign is fixed by the orientation
o. Truncation at a K′ radius R keeps every multiplicity with c^G <= r exact
when the admissibility gap δ is known.
"""
import concurrent.futures
import enum
import logging
import typing
from fractions import Fraction

import attr
import sortedcontainers

from .Admissibility import (EmbeddingData, AdmissibilityVerdict, ConeDesc, Status,
                            asymptotic_support_cone, check_admissibility)
from .Blattner import Blattner
from .Chamber import Chamber, ChamberSystem, OrbitParam
from .Characters import CompactCharacters, KTypeParam, VirtualCharacter, branch_compact
from .OrbitaError import (OrbitaError, NotAdmissiblePair, UncertifiedRange, UnexpectedKtype,
                          NegativeMultiplicity)
from .RootDatum import RootDatum, RootSet, Weight
from .Spinor import SpinorCharacter, spinor_character, orientation_ratio, in_K_out
from .utils import Rational, sqrt_upper, worker_count


logger = logging.getLogger(__name__)

DEFAULT_DEPTH = Fraction(12)


class Mode(enum.Enum):
    certified = "certified"
    stabilize = "stabilize"


@attr.s(slots=True, frozen=True, auto_attribs=True)
class PairConfig:
    """
    A pair G ⊂ G′ at the Cartan level, with the orientation reference o of p
    used for the spinor twist
    """
    datum_Gprime: RootDatum
    datum_G: RootDatum
    emb: EmbeddingData = attr.ib(repr=False)
    orientation_ref: Weight

    @classmethod
    def build(cls, datum_Gprime: RootDatum, datum_G: RootDatum,
              dual_projection: typing.Sequence[typing.Sequence[Rational]],
              orientation_ref: typing.Optional[Weight] = None) -> "PairConfig":
        """
        Without `orientation_ref`, o is the representative of the holomorphic
        chamber of G.

        :raises IncompatibleLattices: when p(Λ′) is not contained in Λ
        :raises NotStronglyElliptic: when o is not strongly elliptic regular
        """
        source = RootSet.generate_roots(datum_Gprime)
        target = source if datum_G == datum_Gprime else RootSet.generate_roots(datum_G)
        emb = EmbeddingData.build(source, target, dual_projection)
        if orientation_ref is None:
            orientation_ref = ChamberSystem(target).enumerate_chambers()[0].representative
        spinor_character(target, orientation_ref)
        return cls(datum_Gprime=datum_Gprime, datum_G=datum_G, emb=emb, orientation_ref=orientation_ref)

    @classmethod
    def identity(cls, datum: RootDatum, orientation_ref: typing.Optional[Weight] = None) -> "PairConfig":
        rank = datum.rank
        return cls.build(datum, datum, [[int(i == j) for j in range(rank)] for i in range(rank)],
                         orientation_ref)

    @property
    def roots_Gprime(self) -> RootSet:
        return self.emb.source

    @property
    def roots_G(self) -> RootSet:
        return self.emb.target


@attr.s(slots=True, frozen=True, auto_attribs=True)
class BranchingEntry:
    orbit: OrbitParam
    multiplicity: int
    certified: bool

    def to_json_able(self, roots: RootSet) -> dict:
        return {
            'orbit': [str(c) for c in roots.lattice_coords(self.orbit.lam)],
            'multiplicity': self.multiplicity,
            'certified': self.certified,
            'chamber': self.orbit.chamber.index,
        }


@attr.s(slots=True, frozen=True, auto_attribs=True)
class ViolationReport:
    """Nonzero entries found in more than one chamber, one witness pair per chamber pair"""
    pairs: typing.Tuple[typing.Tuple[OrbitParam, OrbitParam], ...]

    def to_json_able(self) -> dict:
        return {'violations': [
            [{'orbit': a.lam.to_json_able(), 'chamber': a.chamber.index},
             {'orbit': b.lam.to_json_able(), 'chamber': b.chamber.index}]
            for a, b in self.pairs
        ]}


@attr.s(slots=True, auto_attribs=True)
class BranchingResult:
    orbit_prime: OrbitParam
    cutoff: Fraction
    gap: typing.Optional[Fraction]
    radius: Fraction
    mode: Mode
    verdict: AdmissibilityVerdict
    entries: sortedcontainers.SortedDict = attr.ib(factory=sortedcontainers.SortedDict)
    chamber: typing.Union[Chamber, ViolationReport, None] = None

    @property
    def multiplicities(self) -> typing.Dict[Weight, int]:
        return {orbit.lam: entry.multiplicity for orbit, entry in self.entries.items()}

    def nonzero(self) -> typing.List[BranchingEntry]:
        return [entry for entry in self.entries.values() if entry.multiplicity]

    def entry(self, lam: Weight) -> typing.Optional[BranchingEntry]:
        for orbit, entry in self.entries.items():
            if orbit.lam == lam:
                return entry
        return None

    def summary(self) -> dict:
        return {
            'gap': None if self.gap is None else str(self.gap),
            'cutoff': str(self.cutoff),
            'radius': str(self.radius),
            'mode': self.mode.value,
            'unique_chamber': None if self.chamber is None else self.chamber.to_json_able(),
        }


def verify_unique_chamber(result: BranchingResult) -> typing.Union[Chamber, ViolationReport, None]:
    """
    The chamber holding every nonzero entry; None for an empty result.
    """
    first_by_chamber = {}  # type: typing.Dict[Chamber, OrbitParam]
    for entry in result.nonzero():
        first_by_chamber.setdefault(entry.orbit.chamber, entry.orbit)
    if not first_by_chamber:
        return None
    witnesses = sorted(first_by_chamber.values(), key=lambda o: o.chamber.index)
    if len(witnesses) == 1:
        return witnesses[0].chamber
    pairs = tuple((a, b) for i, a in enumerate(witnesses) for b in witnesses[i + 1:])
    logger.warning("nonzero multiplicities in {} chambers".format(len(witnesses)))
    return ViolationReport(pairs=pairs)


class BranchingEngine:
    """
    Per-pair state: root sets, Blattner tables of G′, compact character tables
    of K′ and K, the chambers of G and the spinor character S^o.
    """
    def __init__(self, cfg: PairConfig, depth: typing.Optional[Rational] = None,
                 n_samples: typing.Optional[int] = None, seed: int = 0):
        self.cfg = cfg
        self.source = cfg.roots_Gprime
        self.target = cfg.roots_G
        self.depth = None if depth is None else Fraction(depth)
        self.n_samples = n_samples
        self.seed = seed

        self.blattner = Blattner(self.source)
        self.source_characters = self.blattner.characters
        if self.target is self.source:
            self.target_characters = self.source_characters
            self.chambers = self.blattner.chambers
        else:
            self.target_characters = CompactCharacters(self.target)
            self.chambers = ChamberSystem(self.target)
        self.spinor = spinor_character(self.target, cfg.orientation_ref)  # type: SpinorCharacter
        self.spinor_shift = sqrt_upper(self.spinor.max_norm_sq(self.target))

    def orbit_prime(self, lam: Weight) -> OrbitParam:
        return self.blattner.chambers.orbit(lam)

    def cone(self, orbit: OrbitParam) -> ConeDesc:
        depth = self.depth
        if depth is None:
            depth = max(DEFAULT_DEPTH, 3 * sqrt_upper(self.blattner.chambers.c_norm_sq(orbit.lam)))
        return asymptotic_support_cone(self.blattner, orbit, depth, n_samples=self.n_samples, seed=self.seed)

    def verdict(self, orbit: OrbitParam) -> typing.Tuple[ConeDesc, AdmissibilityVerdict]:
        cone = self.cone(orbit)
        return cone, check_admissibility(cone, self.cfg.emb)

    def radius(self, cutoff: Fraction, gap: Fraction, cone: ConeDesc) -> Fraction:
        """
        K′ radius R with every K-type of c^K <= cutoff + 2Δ coming only from
        K′-types of c^{K′} <= R:

            R = (cutoff + 2Δ + Δ′)/δ,  Δ′ = δ‖b‖ + max_w ‖p(w b)‖ + 2‖ρ_c‖

        where b is the lowest K′-type and Δ the largest spinor weight norm.
        """
        emb = self.cfg.emb
        shift = 2 * sqrt_upper(self.target.norm_sq(self.target.rho_c))
        if cone.apex is not None:
            apex = cone.apex
            shift += gap * sqrt_upper(self.source.norm_sq(apex))
            shift += max(sqrt_upper(self.target.norm_sq(emb.project(w.apply(apex))))
                         for w in self.source.weyl_group(compact_only=True))
        return (cutoff + 2 * self.spinor_shift + shift) / gap

    def _branch(self, param: KTypeParam) -> VirtualCharacter:
        return branch_compact(param, self.source_characters, self.target_characters, self.cfg.emb)

    def restricted_to_K_tilde(self, orbit: OrbitParam, radius: Fraction,
                              certified_norm: Fraction) -> VirtualCharacter:
        """
        (π′|_{K′} truncated at `radius`)|_K ⊗ S^o over K̃, with V taken as
        exact up to `certified_norm`
        """
        restriction = self.blattner.restrict_to_K(orbit, radius)
        params = list(restriction)
        logger.debug("{} K′-types below radius {}".format(len(params), radius))

        with concurrent.futures.ThreadPoolExecutor(max_workers=worker_count()) as executor:
            branched = list(executor.map(self._branch, params))

        v = VirtualCharacter(certified_norm=certified_norm)
        for param, part in zip(params, branched):
            m = restriction[param]
            for p, c in part.items():
                v.add(p, m * c)
        return self.target_characters.tensor_spinor(v, self.spinor)

    def _window(self, cutoff: Fraction) -> typing.List[OrbitParam]:
        orbits = []
        for chamber in self.chambers.enumerate_chambers():
            orbits.extend(self.chambers.enumerate_orbits(chamber, cutoff))
        orbits.sort()
        return orbits

    def _multiplicities(self, tensor: VirtualCharacter, strict: bool = True) -> typing.Dict[Weight, int]:
        """
        Read off m_λ = ±coefficient for every K̃-type inside the certified
        range of `tensor`. Without `strict`, K̃-types matching no discrete
        series are logged and skipped.

        :raises UnexpectedKtype: when a K̃-type is outside K̂_out or is not an
                                 admissible strongly elliptic parameter of G
        """
        out = {}
        limit_sq = tensor.certified_norm * tensor.certified_norm
        for param, c in tensor.items():
            if self.target_characters.c_norm_sq(param) > limit_sq:
                continue
            lam = param.mu
            if not in_K_out(self.target, lam):
                raise UnexpectedKtype("K~-type {} fails the coset parity check".format(lam),
                                      mu=lam.to_json_able())
            try:
                orbit = self.chambers.orbit(lam)
            except OrbitaError as e:
                if not strict:
                    logger.warning("skipping K~-type {}: {}".format(lam, e))
                    continue
                raise UnexpectedKtype("K~-type {} matches no discrete series: {}".format(lam, e),
                                      mu=lam.to_json_able())
            out[orbit.lam] = orientation_ratio(self.target, self.cfg.orientation_ref, -lam) * c
        return out

    def twisted_restriction(self, orbit: OrbitParam, cutoff: Fraction, radius: Fraction) -> VirtualCharacter:
        """π′ truncated at `radius`, restricted to K and twisted by S^o, certified up to cutoff + Δ"""
        logger.info("branching {} at cutoff {} with K′ radius {}".format(orbit.lam, cutoff, radius))
        return self.restricted_to_K_tilde(orbit, radius, certified_norm=cutoff + 2 * self.spinor_shift)

    def restrict_discrete_series(self, orbit: OrbitParam, cutoff: Rational,
                                 mode: typing.Optional[Mode] = None) -> BranchingResult:
        """
        Multiplicities of every discrete series of G with c^G <= cutoff in π′.

        Certified mode needs an Admissible verdict. Stabilize mode (also the
        fallback for Unknown verdicts) runs at radii R and 2R and certifies
        only the entries on which both runs agree.

        :raises NotAdmissiblePair: when the verdict is NotAdmissible
        :raises NegativeMultiplicity: when a certified multiplicity is negative
        """
        cutoff = Fraction(cutoff)
        cone, verdict = self.verdict(orbit)
        if verdict.status == Status.not_admissible:
            raise NotAdmissiblePair("restriction of {} is not admissible".format(orbit.lam),
                                    witness=verdict.witness.to_json_able())
        gap = verdict.gap if verdict.status == Status.admissible else None
        if mode is None:
            mode = Mode.certified
        if gap is None:
            mode = Mode.stabilize

        radius = self.radius(cutoff, gap if gap is not None else Fraction(1), cone)
        tensor = self.twisted_restriction(orbit, cutoff, radius)
        strict = mode == Mode.certified
        found = self._multiplicities(tensor, strict)

        first = found
        if mode == Mode.stabilize:
            radius = 2 * radius
            found = self._multiplicities(self.twisted_restriction(orbit, cutoff, radius), strict)

        result = BranchingResult(orbit_prime=orbit, cutoff=cutoff, gap=gap, radius=radius,
                                 mode=mode, verdict=verdict)
        window = self._window(cutoff)
        for o in window:
            m = found.get(o.lam, 0)
            certified = m == first.get(o.lam, 0)
            if certified and m < 0:
                raise NegativeMultiplicity("multiplicity {} at {}".format(m, o.lam),
                                           orbit=o.lam.to_json_able())
            result.entries[o] = BranchingEntry(orbit=o, multiplicity=m, certified=certified)
        result.chamber = verify_unique_chamber(result)
        logger.info("{} entries, {} nonzero".format(len(result.entries), len(result.nonzero())))
        return result

    def multiplicity(self, orbit: OrbitParam, lam: Weight, cutoff: Rational) -> int:
        """
        :raises UncertifiedRange: when λ is outside the certified window
        """
        cutoff = Fraction(cutoff)
        target_orbit = self.chambers.orbit(lam)
        if self.chambers.c_norm_sq(lam) > cutoff * cutoff:
            raise UncertifiedRange("{} is beyond cutoff {}".format(lam, cutoff),
                                   orbit=lam.to_json_able(), cutoff=str(cutoff))
        result = self.restrict_discrete_series(orbit, cutoff)
        entry = result.entries[target_orbit]
        if not entry.certified:
            raise UncertifiedRange("{} did not stabilize".format(lam), orbit=lam.to_json_able())
        return entry.multiplicity

    def stabilization_check(self, orbit: OrbitParam, r1: Rational, r2: Rational) -> bool:
        """
        Whether runs at cutoffs r1 < r2 agree on the entries with c^G <= r1
        """
        r1, r2 = Fraction(r1), Fraction(r2)
        if not r1 < r2:
            raise ValueError("need r1 < r2")
        first = self.restrict_discrete_series(orbit, r1)
        second = self.restrict_discrete_series(orbit, r2)
        for o, entry in first.entries.items():
            if second.entries[o].multiplicity != entry.multiplicity:
                logger.warning("{}: {} at cutoff {}, {} at cutoff {}".format(
                    o.lam, entry.multiplicity, r1, second.entries[o].multiplicity, r2))
                return False
        return True


def restrict_discrete_series(orbit: OrbitParam, cfg: PairConfig, cutoff: Rational,
                             mode: typing.Optional[Mode] = None) -> BranchingResult:
    return BranchingEngine(cfg).restrict_discrete_series(orbit, cutoff, mode)


def multiplicity(orbit: OrbitParam, lam: Weight, cfg: PairConfig, cutoff: Rational) -> int:
    return BranchingEngine(cfg).multiplicity(orbit, lam, cutoff)


def stabilization_check(orbit: OrbitParam, cfg: PairConfig, r1: Rational, r2: Rational) -> bool:
    return BranchingEngine(cfg).stabilization_check(orbit, r1, r2)
