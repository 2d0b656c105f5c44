from ._registry import register
from . import _common
from ..Chamber import ChamberSystem
from ..ResultTable import ResultTable


@register('chambers')
class Chambers:
    help = "List the chambers of strongly elliptic regular elements of G"

    @staticmethod
    def add_arguments(parser):
        pass

    @staticmethod
    def run(args, config) -> ResultTable:
        config = _common.require_config(config)
        roots = config.roots_G()
        table = ResultTable(columns=('id', 'signs', 'representative'))
        for chamber in ChamberSystem(roots).enumerate_chambers():
            row = chamber.to_json_able()
            row['representative'] = _common.lattice_coords(roots, chamber.representative)
            table.add(row, key=(chamber.index,))
        table.summary = {'group': roots.datum.name, 'count': len(table)}
        return table
