from ._registry import register
from . import _common
from ..Blattner import Blattner
from ..ResultTable import ResultTable


@register('blattner')
class BlattnerCommand:
    help = "K-types of a discrete series of G up to the cutoff (Blattner formula)"

    @staticmethod
    def add_arguments(parser):
        pass

    @staticmethod
    def run(args, config) -> ResultTable:
        config = _common.require_config(config)
        roots = config.roots_G()
        blattner = Blattner(roots)
        orbit = blattner.chambers.orbit(_common.orbit_weight(args, config, roots))
        r = _common.cutoff(args, config)

        table = ResultTable(columns=('mu', 'multiplicity', 'c_norm_sq'))
        for param, m in blattner.restrict_to_K(orbit, r).items():
            table.add({
                'mu': _common.lattice_coords(roots, param.mu),
                'multiplicity': m,
                'c_norm_sq': str(blattner.characters.c_norm_sq(param)),
            }, key=_common.sort_key(roots, param.mu))
        table.summary = {
            'group': roots.datum.name,
            'orbit': _common.lattice_coords(roots, orbit.lam),
            'chamber': orbit.chamber.index,
            'cutoff': str(r),
            'c_norm_sq': str(blattner.chambers.c_norm_sq(orbit.lam)),
        }
        return table
