"""
Admissibility of a discrete series of G′ restricted to G ⊂ G′

The asymptotic support of π′|_{K′} is read off its Blattner K′-types. The
restriction is admissible when no nonzero direction of that cone (or of its
W_{K′} translates) projects to 0, and the smallest projected norm ratio δ over
the cone then bounds how fast K-types run away.
"""
import enum
import itertools
import logging
import random
import typing
from fractions import Fraction

import attr
import sympy

from . import Polyhedra
from .Blattner import Blattner
from .Chamber import OrbitParam
from .OrbitaError import EmptySupport, DegenerateCone, ZeroGap, IncompatibleLattices
from .RootDatum import RootSet, Weight, WeylElement
from .utils import Matrix, Rational, rational_matrix, to_sympy, from_sympy, primitive_vector, sqrt_lower


logger = logging.getLogger(__name__)

# resolution of rational lower bounds for irrational edge minima
GAP_RESOLUTION = 10 ** 12


@attr.s(slots=True, frozen=True, auto_attribs=True)
class EmbeddingData:
    """
    Cartan-level data of G ⊂ G′: the dual projection p: (t′)* → t*, as a
    rank(G) × rank(G′) matrix acting on simple-root coordinates.
    """
    dual_projection: Matrix
    source: RootSet = attr.ib(eq=False, repr=False)
    target: RootSet = attr.ib(eq=False, repr=False)
    lattice_witness: Matrix = attr.ib(eq=False, repr=False)

    @classmethod
    def build(cls, source: RootSet, target: RootSet,
              dual_projection: typing.Sequence[typing.Sequence[Rational]]) -> "EmbeddingData":
        """
        :raises IncompatibleLattices: when p(Λ′) is not contained in Λ
        """
        dual_projection = rational_matrix(dual_projection)
        if len(dual_projection) != target.rank \
                or any(len(row) != source.rank for row in dual_projection):
            raise IncompatibleLattices("dual projection must be {}x{}".format(target.rank, source.rank))

        emb = cls(dual_projection=dual_projection, source=source, target=target, lattice_witness=())
        witness = []
        for i, row in enumerate(source.datum.lattice_basis):
            image = emb.project(Weight(row))
            coords = target.lattice_coords(image)
            if any(c.denominator != 1 for c in coords):
                raise IncompatibleLattices("lattice vector {} of G′ does not project into Λ".format(i),
                                           image=image.to_json_able())
            witness.append(coords)
        return attr.evolve(emb, lattice_witness=tuple(witness))

    @classmethod
    def identity(cls, roots: RootSet) -> "EmbeddingData":
        return cls.build(roots, roots, [[int(i == j) for j in range(roots.rank)] for i in range(roots.rank)])

    def project(self, weight: Weight) -> Weight:
        return Weight(tuple(
            sum((row[j] * weight.coords[j] for j in range(len(row))), Fraction(0))
            for row in self.dual_projection
        ))

    def kernel(self) -> typing.List[Weight]:
        return [Weight(primitive_vector([from_sympy(x) for x in v]))
                for v in to_sympy(self.dual_projection).nullspace()]

    @property
    def is_injective(self) -> bool:
        return not self.kernel()

    @property
    def cartan_level_complete(self) -> bool:
        """
        Whether the W_{K′}-translates decide the K′-saturated condition: true
        when K′ is abelian or p is injective.
        """
        return not self.source.positive_compact or self.is_injective


class Exactness(enum.Enum):
    exact = "exact"
    sampled = "sampled"


@attr.s(slots=True, frozen=True, auto_attribs=True)
class ConeDesc:
    """
    ℝ≥0-span of nonzero generators in (t′)* simple-root coordinates. `apex`
    is the lowest K′-type the directions were measured from.
    """
    generators: typing.Tuple[Weight, ...]
    exactness: Exactness = Exactness.exact
    depth: typing.Optional[Fraction] = None
    apex: typing.Optional[Weight] = None
    seed: typing.Optional[int] = None
    n_samples: typing.Optional[int] = None
    margin: typing.Optional[Fraction] = None

    def __attrs_post_init__(self):
        ranks = {g.rank for g in self.generators}
        if len(ranks) > 1:
            raise DegenerateCone("generators of mixed length")
        for g in self.generators:
            if g.is_zero():
                raise DegenerateCone("zero generator")

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def to_json_able(self) -> dict:
        return {
            'generators': [g.to_json_able() for g in self.generators],
            'exactness': self.exactness.value,
            'depth': None if self.depth is None else str(self.depth),
        }


class Status(enum.Enum):
    admissible = "Admissible"
    not_admissible = "NotAdmissible"
    unknown = "Unknown"


@attr.s(slots=True, frozen=True, auto_attribs=True)
class AdmissibilityVerdict:
    status: Status
    backend: Exactness
    gap: typing.Optional[Fraction] = None
    witness: typing.Optional[Weight] = None
    weyl_element: typing.Optional[WeylElement] = attr.ib(default=None, repr=False)
    margin: typing.Optional[Fraction] = None
    reason: str = ''

    @property
    def admissible(self) -> bool:
        return self.status == Status.admissible

    def to_json_able(self) -> dict:
        return {
            'status': self.status.value,
            'backend': self.backend.value,
            'gap': None if self.gap is None else str(self.gap),
            'witness': None if self.witness is None else self.witness.to_json_able(),
            'margin': None if self.margin is None else str(self.margin),
            'reason': self.reason,
        }


def in_cone(v: Weight, generators: typing.Sequence[Weight]) -> bool:
    """Exact membership test v ∈ ℝ≥0-span(generators)"""
    if not generators:
        return v.is_zero()
    return Polyhedra.contains(Polyhedra.cone(v.rank, [g.coords for g in generators]), v.coords)


def _cone_parts(generators: typing.Sequence[Weight]
                ) -> typing.Tuple[typing.List[Weight], typing.List[Weight]]:
    """(extreme rays of the pointed part, basis of the lineality space)"""
    if not generators:
        return [], []
    rays, lines = Polyhedra.directions(Polyhedra.cone(generators[0].rank, [g.coords for g in generators]))
    return [Weight(r) for r in rays], [Weight(l) for l in lines]


def extreme_rays(generators: typing.Iterable[Weight]) -> typing.Tuple[Weight, ...]:
    """
    Primitive generators of the minimized cone, sorted. A line of the
    lineality space contributes both of its directions.
    """
    rays, lines = _cone_parts(list(generators))
    return tuple(sorted(set(rays) | set(lines) | {-line for line in lines}))


def asymptotic_support_cone(blattner: Blattner, orbit: OrbitParam, depth: Rational,
                            n_samples: typing.Optional[int] = None, seed: int = 0) -> ConeDesc:
    """
    Directions from the lowest K′-type to the K′-types of the outer shell
    c^{K′} ∈ [depth/2, depth], reduced to extreme rays.

    With `n_samples`, only a seeded random subset of the directions is kept and
    the cone is marked sampled; `margin` is the fraction left out.

    :raises EmptySupport: when no K′-type has c-norm <= depth
    """
    depth = Fraction(depth)
    restriction = blattner.restrict_to_K(orbit, depth)
    if not len(restriction):
        raise EmptySupport("no K-type of {} below depth {}".format(orbit.lam, depth),
                           orbit=orbit.lam.to_json_able(), depth=str(depth))
    characters = blattner.characters
    lowest = min(restriction, key=lambda p: (characters.c_norm_sq(p), p))

    shell_sq = depth * depth / 4
    directions = set()
    for param in restriction:
        if characters.c_norm_sq(param) < shell_sq or param.mu == lowest.mu:
            continue
        directions.add(Weight(primitive_vector((param.mu - lowest.mu).coords)))
    directions = sorted(directions)

    if n_samples is not None and n_samples < len(directions):
        rng = random.Random(seed)
        sample = sorted(rng.sample(directions, n_samples))
        margin = Fraction(len(directions) - n_samples, len(directions))
        logger.debug("sampled {} of {} directions".format(n_samples, len(directions)))
        return ConeDesc(generators=extreme_rays(sample), exactness=Exactness.sampled,
                        depth=depth, apex=lowest.mu, seed=seed, n_samples=n_samples, margin=margin)

    generators = extreme_rays(directions)
    logger.debug("cone of {} at depth {}: {} directions, {} extreme rays".format(
        orbit.lam, depth, len(directions), len(generators)))
    return ConeDesc(generators=generators, depth=depth, apex=lowest.mu)


def _kernel_direction(generators: typing.Sequence[Weight], emb: EmbeddingData) -> typing.Optional[Weight]:
    """
    A nonzero direction of the cone spanned by `generators` that p sends to
    0, lines first. None when the cone meets ker p only in 0.
    """
    if not generators:
        return None
    poly = Polyhedra.cone(emb.source.rank, [g.coords for g in generators])
    Polyhedra.add_constraints(poly, equalities=[(row, 0) for row in emb.dual_projection])
    rays, lines = Polyhedra.directions(poly)
    found = lines + rays
    return Weight(found[0]) if found else None


def check_admissibility(cone: ConeDesc, emb: EmbeddingData,
                        weyl_orbit: typing.Optional[typing.Sequence[WeylElement]] = None
                        ) -> AdmissibilityVerdict:
    """
    Decide p(w·cone) ∩ ker p = {0} for every w in `weyl_orbit` (default W_{K′}).

    Sampled cones and configurations where the Weyl translates do not decide
    the question (nonabelian K′, p not injective) give Unknown instead of
    Admissible.
    """
    if weyl_orbit is None:
        weyl_orbit = emb.source.weyl_group(compact_only=True)

    for w in weyl_orbit:
        witness = _kernel_direction([w.apply(g) for g in cone.generators], emb)
        if witness is not None:
            logger.info("not admissible: {} projects to 0".format(witness))
            return AdmissibilityVerdict(status=Status.not_admissible, backend=cone.exactness,
                                        witness=witness, weyl_element=w,
                                        reason="cone direction in the kernel of the projection")

    if cone.exactness == Exactness.sampled:
        return AdmissibilityVerdict(status=Status.unknown, backend=cone.exactness, margin=cone.margin,
                                    reason="sampled cone can not certify admissibility")
    if not emb.cartan_level_complete:
        return AdmissibilityVerdict(status=Status.unknown, backend=cone.exactness, margin=cone.margin,
                                    reason="Weyl translates do not decide the K-saturated condition")

    gap = truncation_gap(cone, emb, weyl_orbit)
    logger.info("admissible, gap >= {}".format(gap))
    return AdmissibilityVerdict(status=Status.admissible, backend=cone.exactness, gap=gap)


def _segment_minimum(u: Weight, v: Weight, emb: EmbeddingData) -> typing.Optional[Fraction]:
    """
    Rational lower bound of min over t ∈ [0,1] of ‖p(x)‖²/‖x‖², x = (1−t)u + tv.
    None when the segment passes through 0.
    """
    t = sympy.Symbol('t', real=True)
    x = [(1 - t) * sympy.Rational(a.numerator, a.denominator) + t * sympy.Rational(b.numerator, b.denominator)
         for a, b in zip(u.coords, v.coords)]
    g_source = to_sympy(emb.source.gram)
    g_target = to_sympy(emb.target.gram)
    p = to_sympy(emb.dual_projection)
    xs = sympy.Matrix(x)
    px = p * xs
    numerator = sympy.expand((px.T * g_target * px)[0, 0])
    denominator = sympy.expand((xs.T * g_source * xs)[0, 0])

    denominator_poly = sympy.Poly(denominator, t)
    if any(0 <= r <= 1 for r in denominator_poly.real_roots()):
        return None

    candidates = [numerator.subs(t, 0) / denominator.subs(t, 0), numerator.subs(t, 1) / denominator.subs(t, 1)]
    critical = sympy.Poly(sympy.expand(sympy.diff(numerator, t) * denominator
                                       - numerator * sympy.diff(denominator, t)), t)
    if not critical.is_zero:
        for r in critical.real_roots():
            if 0 < r < 1:
                candidates.append(sympy.simplify(numerator.subs(t, r) / denominator.subs(t, r)))

    lowest = None
    for value in candidates:
        if value.is_Rational:
            bound = from_sympy(value)
        else:
            bound = from_sympy(sympy.floor(value * GAP_RESOLUTION)) / GAP_RESOLUTION
        if lowest is None or bound < lowest:
            lowest = bound
    return lowest


def truncation_gap(cone: ConeDesc, emb: EmbeddingData,
                   weyl_orbit: typing.Optional[typing.Sequence[WeylElement]] = None) -> Fraction:
    """
    Rational δ > 0 with ‖p(w·v)‖ >= δ‖w·v‖ on the rays of the cone and on the
    segments between them, for every w in `weyl_orbit`.

    :raises ZeroGap: when some ray or segment projects to 0
    """
    if weyl_orbit is None:
        weyl_orbit = emb.source.weyl_group(compact_only=True)
    if cone.is_zero:
        return Fraction(1)

    gap_sq = None
    for w in weyl_orbit:
        rays = extreme_rays(w.apply(g) for g in cone.generators)
        for v in rays:
            ratio = emb.target.norm_sq(emb.project(v)) / emb.source.norm_sq(v)
            if gap_sq is None or ratio < gap_sq:
                gap_sq = ratio
        for u, v in itertools.combinations(rays, 2):
            bound = _segment_minimum(u, v, emb)
            if bound is not None and bound < gap_sq:
                gap_sq = bound

    if gap_sq <= 0:
        raise ZeroGap("a cone direction projects to 0")
    return sqrt_lower(gap_sq)
