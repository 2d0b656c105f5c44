from ._registry import register
from . import _common
from .. import SelfTest
from ..ResultTable import ResultTable


@register('selftest')
class SelfTestCommand:
    help = "Run the acceptance criteria on the bundled data"

    @staticmethod
    def add_arguments(parser):
        pass

    @staticmethod
    def run(args, config) -> ResultTable:
        cutoff = _common.rational_arg(args.cutoff, 'cutoff')
        outcomes = SelfTest.run_all(cutoff=cutoff)
        table = ResultTable(columns=('criterion', 'name', 'status', 'detail'))
        for outcome in outcomes:
            table.add(outcome.to_json_able(), key=(outcome.number,))
        failed = [o.number for o in outcomes if not o.passed]
        table.summary = {'passed': len(outcomes) - len(failed), 'failed': failed}
        if failed:
            table.exit_code = SelfTest.SelfTestFailure.exit_code
        return table
