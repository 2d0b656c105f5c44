"""
Deterministic tabular output: JSON lines or CSV

Rows are emitted in the order of their sort keys (tuples of exact
rationals), rationals are printed as str(Fraction), and the optional summary
block comes last.
"""
import csv
import enum
import io
import json
import typing

import attr


class Format(enum.Enum):
    json = "json"
    csv = "csv"


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


@attr.s(slots=True, auto_attribs=True)
class ResultTable:
    columns: typing.Tuple[str, ...]
    rows: typing.List[typing.Tuple[tuple, dict]] = attr.ib(factory=list)
    summary: typing.Optional[dict] = None
    exit_code: int = 0

    def add(self, row: dict, key: tuple = ()):
        missing = set(self.columns) - set(row)
        if missing:
            raise ValueError("row is missing columns {}".format(sorted(missing)))
        self.rows.append((key, row))

    def sorted_rows(self) -> typing.List[dict]:
        return [row for _, row in sorted(self.rows, key=lambda kr: kr[0])]

    def __len__(self):
        return len(self.rows)

    def render(self, fmt: Format = Format.json) -> str:
        out = io.StringIO()
        self.write(out, fmt)
        return out.getvalue()

    def write(self, stream: typing.TextIO, fmt: Format = Format.json):
        if fmt == Format.json:
            for row in self.sorted_rows():
                stream.write(json.dumps({c: row[c] for c in self.columns}, ensure_ascii=False))
                stream.write("\n")
            if self.summary is not None:
                stream.write(json.dumps({'summary': self.summary}, ensure_ascii=False))
                stream.write("\n")
            return

        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.sorted_rows():
            writer.writerow([_cell(row[c]) for c in self.columns])
        if self.summary is not None:
            for k, v in self.summary.items():
                stream.write("# {}: {}\n".format(k, json.dumps(v, ensure_ascii=False)))
