from orbita.SelfTest import ladder_oracle


def test_diagonal(cli):
    run = cli('restrict', '--pair', 'diag-sl2', '--cutoff', '10')
    assert 0 == run.exit_code
    nonzero = [row for row in run.rows if row['multiplicity']]
    assert {'orbit': ['3'], 'multiplicity': 1, 'certified': True, 'chamber': 0} == nonzero[0]
    for row in run.rows:
        assert ladder_oracle(1, 1, int(row['orbit'][0])) == row['multiplicity']
    assert {'id': 0, 'signs': '+'} == run.summary['unique_chamber']
    assert 'certified' == run.summary['mode']


def test_orbit_override(cli):
    run = cli('restrict', '--pair', 'diag-sl2', '--cutoff', '8', '--orbit', '1,2')
    assert ['4'] == [row['orbit'] for row in run.rows if row['multiplicity']][0]


def test_stabilize(cli):
    run = cli('restrict', '--pair', 'diag-sl2', '--cutoff', '6', '--stabilize')
    assert 0 == run.exit_code
    assert 'stabilize' == run.summary['mode']
    assert all(row['certified'] for row in run.rows)


def test_identity_pair(cli):
    run = cli('restrict', '--pair', 'sl2', '--cutoff', '5')
    assert [{'orbit': ['1'], 'multiplicity': 1, 'certified': True, 'chamber': 0}] \
           == [row for row in run.rows if row['multiplicity']]


def test_not_admissible(cli):
    run = cli('restrict', '--pair', 'hol-antihol-sl2')
    assert 3 == run.exit_code
    assert '' == run.stdout
    assert 'not_admissible_pair' == run.error['reason']
    assert ['1', '-1'] == run.error['details']['witness']
