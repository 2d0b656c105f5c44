"""
Chambers of strongly elliptic regular elements and the admissible orbit
parameters they contain
"""
import itertools
import logging
import typing
from fractions import Fraction

import attr

from . import Polyhedra
from .OrbitaError import NotStronglyElliptic, NotAdmissibleOrbit
from .RootDatum import RootSet, Weight
from .utils import Rational


logger = logging.getLogger(__name__)


@attr.s(slots=True, frozen=True, auto_attribs=True)
class Chamber:
    """
    Sign vector on the fixed positive noncompact roots, with an exact interior
    point. Two chambers are equal when their signs are.
    """
    signs: typing.Tuple[int, ...]
    index: int = attr.ib(eq=False, order=False)
    representative: Weight = attr.ib(eq=False, order=False)

    def to_json_able(self) -> dict:
        return {
            'id': self.index,
            'signs': ''.join('+' if s > 0 else '-' for s in self.signs),
        }


@attr.s(slots=True, frozen=True, auto_attribs=True, order=True)
class OrbitParam:
    """
    Harish-Chandra parameter λ of a discrete series, i.e. the orbit Gλ.
    Equality and ordering only look at λ.
    """
    lam: Weight
    chamber: Chamber = attr.ib(eq=False, order=False)


class ChamberSystem:
    def __init__(self, roots: RootSet):
        self.roots = roots
        self._chambers = None  # type: typing.Optional[typing.List[Chamber]]

    def signs_of(self, lam: Weight) -> typing.Tuple[int, ...]:
        signs = []
        for beta in self.roots.positive_noncompact:
            p = self.roots.inner(lam, beta)
            signs.append(0 if p == 0 else (1 if p > 0 else -1))
        return tuple(signs)

    def is_strongly_elliptic_regular(self, lam: Weight) -> bool:
        return self.roots.is_compact_dominant(lam, strict=True) \
               and 0 not in self.signs_of(lam)

    def chamber_of(self, lam: Weight) -> Chamber:
        if not self.is_strongly_elliptic_regular(lam):
            raise NotStronglyElliptic("{} is not strongly elliptic regular".format(lam),
                                      weight=lam.to_json_able())
        signs = self.signs_of(lam)
        for chamber in self.enumerate_chambers():
            if chamber.signs == signs:
                return chamber
        # unreachable: lam itself witnesses feasibility
        raise AssertionError("sign vector {} of {} not enumerated".format(signs, lam))

    def _interior_point(self, signs: typing.Tuple[int, ...]) -> typing.Optional[Weight]:
        rank = self.roots.rank
        unit = [Weight.unit(rank, j) for j in range(rank)]

        def row(root: Weight, sign: int = 1) -> typing.List[Fraction]:
            return [sign * self.roots.inner(u, root) for u in unit]

        at_least = [(row(alpha), 1) for alpha in self.roots.positive_compact]
        at_least += [(row(beta, s), 1) for beta, s in zip(self.roots.positive_noncompact, signs)]
        point = Polyhedra.feasible_point(rank, at_least=at_least)
        if point is None:
            return None
        return Weight(point)

    def enumerate_chambers(self) -> typing.List[Chamber]:
        """
        All realizable sign vectors, the all-plus (holomorphic) one first.
        """
        if self._chambers is not None:
            return self._chambers

        chambers = []
        for signs in itertools.product((1, -1), repeat=len(self.roots.positive_noncompact)):
            point = self._interior_point(signs)
            logger.debug("sign vector {}: {}".format(signs, "feasible" if point else "empty"))
            if point is None:
                continue
            chambers.append(Chamber(signs=signs, index=len(chambers), representative=point))
        logger.info("{}: {} chambers".format(self.roots.datum.name, len(chambers)))
        self._chambers = chambers
        return chambers

    def is_admissible_orbit(self, lam: Weight) -> bool:
        """
        λ − ρ(λ) ∈ Λ

        :raises NotRegular: when λ is singular
        """
        half_sums = self.roots.half_sums(lam)
        return self.roots.in_lattice(lam - half_sums.rho)

    def orbit(self, lam: Weight) -> OrbitParam:
        """
        Validated OrbitParam for λ

        :raises NotStronglyElliptic: when λ is not strongly elliptic regular
        :raises NotAdmissibleOrbit: when λ − ρ(λ) is not in Λ
        """
        chamber = self.chamber_of(lam)
        if not self.is_admissible_orbit(lam):
            raise NotAdmissibleOrbit("{} is not an admissible orbit parameter".format(lam),
                                     weight=lam.to_json_able())
        return OrbitParam(lam=lam, chamber=chamber)

    def c_norm_sq(self, lam: Weight) -> Fraction:
        """(λ+ρ(λ), λ+ρ(λ))"""
        return self.roots.norm_sq(lam + self.roots.half_sums(lam).rho)

    def enumerate_orbits(self, chamber: Chamber, bound: Rational) -> typing.List[OrbitParam]:
        """
        All admissible λ in `chamber` with ‖λ+ρ(λ)‖ <= bound, sorted.

        λ runs over ρ(C)+Λ, so x = λ+ρ(C) runs over the lattice ball around
        2ρ(C).
        """
        bound = Fraction(bound)
        if bound <= 0:
            raise ValueError("bound must be positive")
        rho = self.roots.half_sums(chamber.representative).rho
        orbits = []
        for x in self.roots.lattice_ball(2 * rho, bound * bound):
            lam = x - rho
            if self.signs_of(lam) != chamber.signs:
                continue
            if not self.roots.is_compact_dominant(lam, strict=True):
                continue
            orbits.append(OrbitParam(lam=lam, chamber=chamber))
        orbits.sort()
        logger.debug("chamber {}: {} orbits with c-norm <= {}".format(chamber.index, len(orbits), bound))
        return orbits
