from ._registry import register
from . import _common
from ..Admissibility import check_admissibility
from ..BranchingEngine import BranchingEngine
from ..ResultTable import ResultTable


@register('admissible')
class Admissible:
    help = "Asymptotic K′-support cone of a discrete series of G′ and its admissibility verdict"

    @staticmethod
    def add_arguments(parser):
        parser.add_argument('--samples', type=int, help="Estimate the cone from this many sampled directions")
        parser.add_argument('--seed', type=int, default=0, help="Seed for --samples")

    @staticmethod
    def run(args, config) -> ResultTable:
        config = _common.require_config(config)
        pair = config.pair()
        engine = BranchingEngine(pair, depth=_common.depth(args, config), n_samples=args.samples, seed=args.seed)
        source = pair.roots_Gprime
        orbit = engine.orbit_prime(_common.orbit_weight(args, config, source))
        cone = engine.cone(orbit)
        verdict = check_admissibility(cone, pair.emb)

        table = ResultTable(columns=('generator',))
        for g in cone.generators:
            table.add({'generator': g.to_json_able()}, key=g.coords)
        summary = verdict.to_json_able()
        summary['depth'] = str(cone.depth)
        summary['orbit'] = _common.lattice_coords(source, orbit.lam)
        table.summary = summary
        return table
