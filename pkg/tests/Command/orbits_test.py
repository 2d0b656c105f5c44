def test_sl2(cli):
    run = cli('orbits', '--pair', 'sl2', '--cutoff', '4')
    assert 0 == run.exit_code
    assert [['-4'], ['-3'], ['-2'], ['-1'], ['1'], ['2'], ['3'], ['4']] == [row['orbit'] for row in run.rows]
    assert [1, 1, 1, 1, 0, 0, 0, 0] == [row['chamber'] for row in run.rows]
    assert '25/2' == run.rows[-1]['c_norm_sq']
    assert 8 == run.summary['count']


def test_chamber_filter(cli):
    run = cli('orbits', '--pair', 'su21', '--cutoff', '5', '--chamber', '1')
    assert run.rows
    assert {1} == {row['chamber'] for row in run.rows}


def test_chamber_out_of_range(cli):
    run = cli('orbits', '--pair', 'sl2', '--chamber', '2')
    assert 2 == run.exit_code
    assert 'config_error' == run.error['reason']


def test_bad_cutoff(cli):
    assert 2 == cli('orbits', '--pair', 'sl2', '--cutoff', 'half').exit_code
    assert 2 == cli('orbits', '--pair', 'sl2', '--cutoff', '-1').exit_code
