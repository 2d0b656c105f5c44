from ._registry import register
from . import _common
from ..Chamber import ChamberSystem
from ..ResultTable import ResultTable


@register('orbits')
class Orbits:
    help = "Enumerate admissible orbit parameters of G with c-norm <= cutoff"

    @staticmethod
    def add_arguments(parser):
        pass

    @staticmethod
    def run(args, config) -> ResultTable:
        config = _common.require_config(config)
        roots = config.roots_G()
        chambers = ChamberSystem(roots)
        bound = _common.cutoff(args, config)
        selected = _common.chamber_arg(args, chambers)
        table = ResultTable(columns=('orbit', 'chamber', 'c_norm_sq'))
        for chamber in chambers.enumerate_chambers():
            if selected is not None and chamber != selected:
                continue
            for orbit in chambers.enumerate_orbits(chamber, bound):
                table.add({
                    'orbit': _common.lattice_coords(roots, orbit.lam),
                    'chamber': chamber.index,
                    'c_norm_sq': str(chambers.c_norm_sq(orbit.lam)),
                }, key=_common.sort_key(roots, orbit.lam))
        table.summary = {'group': roots.datum.name, 'cutoff': str(bound), 'count': len(table)}
        return table
