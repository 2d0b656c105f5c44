from ._registry import register
from . import _common
from ..BranchingEngine import BranchingEngine, Mode
from ..ResultTable import ResultTable


@register('restrict')
class Restrict:
    help = "Multiplicities of the discrete series of G in a discrete series of G′"

    @staticmethod
    def add_arguments(parser):
        pass

    @staticmethod
    def run(args, config) -> ResultTable:
        config = _common.require_config(config)
        pair = config.pair()
        engine = BranchingEngine(pair, depth=_common.depth(args, config))
        orbit = engine.orbit_prime(_common.orbit_weight(args, config, pair.roots_Gprime))
        mode = Mode.stabilize if args.stabilize else config.run.mode
        result = engine.restrict_discrete_series(orbit, _common.cutoff(args, config), mode)

        roots = pair.roots_G
        table = ResultTable(columns=('orbit', 'multiplicity', 'certified', 'chamber'))
        for orbit_g, entry in result.entries.items():
            table.add(entry.to_json_able(roots), key=_common.sort_key(roots, orbit_g.lam))
        table.summary = result.summary()
        return table
