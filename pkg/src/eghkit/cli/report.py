"""Run reports in plain-text or ``key=value`` record form."""

from __future__ import annotations

from dataclasses import dataclass, field


DOCUMENT_KEYS = ("ring", "field", "degrees", "ideal")


def _token(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(_token(v) for v in value) or "-"
    text = str(value).replace(", ", ",").replace(" ", "")
    return text or "-"


@dataclass
class RunReport:
    """Inputs echo, a table of rows and a summary.

    Rows carrying a ``pass`` key count as violations when it is False.
    """

    command: str
    inputs: dict
    columns: tuple[str, ...]
    rows: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    document: str | None = None

    @property
    def violations(self) -> int:
        return sum(1 for row in self.rows if row.get("pass") is False)

    def full_summary(self) -> dict:
        return {**self.summary, "rows": len(self.rows), "violations": self.violations}

    def render(self, fmt: str = "text") -> str:
        if fmt == "records":
            return self._records()
        if fmt == "text":
            return self._text()
        raise ValueError(f"unknown format {fmt!r}")

    def _records(self) -> str:
        lines = [" ".join(["kind=input", f"command={self.command}"]
                          + [f"{k}={_token(v)}" for k, v in self.inputs.items()])]
        for row in self.rows:
            lines.append(" ".join(["kind=row"] + [f"{c}={_token(row.get(c, '-'))}" for c in self.columns]))
        lines.append(" ".join(["kind=summary", f"command={self.command}"]
                              + [f"{k}={_token(v)}" for k, v in self.full_summary().items()]))
        out = "\n".join(lines) + "\n"
        return out.encode("ascii", "replace").decode("ascii")

    def _text(self) -> str:
        out = [f"command: {self.command}"]
        if self.document is not None:
            out.append("input:")
            out.extend("  " + line for line in self.document.splitlines())
        for k, v in self.inputs.items():
            if self.document is None or k not in DOCUMENT_KEYS:
                out.append(f"{k}: {_plain(v)}")
        if self.rows:
            cells = [[_cell(c, row.get(c, "-")) for c in self.columns] for row in self.rows]
            widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(self.columns)]
            out.append("  ".join(c.rjust(w) for c, w in zip(self.columns, widths)))
            for r in cells:
                out.append("  ".join(v.rjust(w) for v, w in zip(r, widths)))
        for k, v in self.full_summary().items():
            out.append(f"{k}: {_plain(v)}")
        return "\n".join(out) + "\n"


def _plain(value) -> str:
    if isinstance(value, (bool, list, tuple)):
        return _token(value)
    return str(value)


def _cell(column: str, value) -> str:
    if column == "pass" and isinstance(value, bool):
        return "pass" if value else "FAIL"
    return _plain(value)
