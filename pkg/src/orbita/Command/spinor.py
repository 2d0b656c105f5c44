from ._registry import register
from . import _common
from ..Chamber import ChamberSystem
from ..ResultTable import ResultTable
from ..Spinor import cover_type, spinor_character


@register('spinor')
class Spinor:
    help = "Weights of the spinor character of p for an orientation"

    @staticmethod
    def add_arguments(parser):
        pass

    @staticmethod
    def run(args, config) -> ResultTable:
        """
        The orientation is the representative of --chamber, else --orbit,
        else run.orientation, else the holomorphic chamber
        """
        config = _common.require_config(config)
        roots = config.roots_G()
        chambers = ChamberSystem(roots)
        chamber = _common.chamber_arg(args, chambers)
        if chamber is not None:
            ref = chamber.representative
        elif args.orbit is not None:
            ref = _common.orbit_weight(args, config, roots)
        elif config.run.orientation is not None:
            ref = roots.from_lattice_coords(config.run.orientation)
        else:
            ref = chambers.enumerate_chambers()[0].representative

        spinor = spinor_character(roots, ref)
        table = ResultTable(columns=('weight', 'coefficient'))
        for weight, c in spinor.items():
            table.add({'weight': _common.lattice_coords(roots, weight), 'coefficient': c},
                      key=_common.sort_key(roots, weight))
        table.summary = {
            'group': roots.datum.name,
            'cover': cover_type(roots).kind.value,
            'coset': spinor.coset.value,
            'orientation': _common.lattice_coords(roots, ref),
            'chamber': chambers.chamber_of(ref).index,
        }
        return table
