import json
import typing

import attr
import pytest

from orbita.__main__ import main


@attr.s(slots=True, auto_attribs=True)
class CliRun:
    exit_code: int
    stdout: str
    stderr: str

    @property
    def rows(self) -> typing.List[dict]:
        return [row for row in self._lines() if 'summary' not in row]

    @property
    def summary(self) -> typing.Optional[dict]:
        for row in self._lines():
            if 'summary' in row:
                return row['summary']
        return None

    @property
    def error(self) -> dict:
        return json.loads(self.stderr.strip().splitlines()[-1])

    def _lines(self) -> typing.List[dict]:
        return [json.loads(line) for line in self.stdout.splitlines()]


@pytest.fixture
def cli(capsys):
    """
    Run the command line in-process, returning exit code and captured output
    """
    def run(*argv: str) -> CliRun:
        code = main(list(argv))
        out, err = capsys.readouterr()
        return CliRun(exit_code=code, stdout=out, stderr=err)
    return run
