from fractions import Fraction

from orbita import SelfTest
from orbita.Config import Config


def test_reports_failure(cli, mocker):
    def corrupted(name):
        config = Config.load(name)
        if name == 'sp4':
            return Config.loads(config.dumps().replace('compact: [true, false]', 'compact: [false, true]'))
        return config

    mocker.patch('orbita.SelfTest.bundled', side_effect=corrupted)
    mocker.patch.object(SelfTest, 'criteria', [c for c in SelfTest.criteria if c.number in (1, 2)])
    run = cli('selftest')
    assert 4 == run.exit_code
    assert 'FAIL' == run.rows[1]['status']
    assert [2] == run.summary['failed']


def test_cutoff_override(cli, mocker):
    run_all = mocker.patch('orbita.SelfTest.run_all', return_value=[
        SelfTest.Outcome(number=1, name="root closure rules", passed=True, detail="ok"),
    ])
    run = cli('selftest', '--cutoff', '30')
    assert 0 == run.exit_code
    run_all.assert_called_once_with(cutoff=Fraction(30))
    assert [{'criterion': 1, 'name': 'root closure rules', 'status': 'PASS', 'detail': 'ok'}] == run.rows
    assert {'passed': 1, 'failed': []} == run.summary
