"""Line-oriented input documents.

::

    # comments run to end of line
    ring x, y, z over gf(7)        # or: over monomial
    degrees 2, 3, inf
    ideal x^2 + y*z, y^3 - z^2*x
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..mideal import MonomialIdeal
from ..monom import DegreeSequence, Monomial, Ring
from ..polyfp import Polynomial, PolynomialIdeal, PrimeField, parse_terms


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        detail = f" (expected {' or '.join(expected)})" if expected else ""
        super().__init__(f"line {line}, column {column}: {message}{detail}")


@dataclass(frozen=True)
class InputDocument:
    ring: Ring
    field: PrimeField | None
    degrees: DegreeSequence | None
    generators: tuple

    @property
    def is_monomial(self) -> bool:
        return self.field is None

    def monomial_ideal(self) -> MonomialIdeal:
        if not self.is_monomial:
            raise ValueError("document declares a polynomial ring; expected 'over monomial'")
        return MonomialIdeal(self.ring, self.generators)

    def polynomial_ideal(self) -> PolynomialIdeal:
        if self.is_monomial:
            raise ValueError("document declares a monomial ring; expected 'over gf(p)'")
        return PolynomialIdeal(self.ring, self.field, self.generators)

    def generator_texts(self) -> list[str]:
        if self.is_monomial:
            return [self.ring.format(g) for g in self.generators]
        return [str(g) for g in self.generators]

    def to_text(self) -> str:
        kind = "monomial" if self.is_monomial else str(self.field)
        lines = [f"ring {', '.join(self.ring.names)} over {kind}"]
        if self.degrees is not None:
            lines.append(f"degrees {self.degrees}")
        if self.generators:
            lines.append("ideal " + ", ".join(self.generator_texts()))
        return "\n".join(lines) + "\n"


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_FIELD = re.compile(r"gf\(\s*(\d+)\s*\)")


def _split_items(body: str, offset: int) -> list[tuple[str, int]]:
    """Comma-separated items with their 1-based starting columns."""
    items = []
    start = 0
    for part in body.split(","):
        lead = len(part) - len(part.lstrip())
        items.append((part.strip(), offset + start + lead + 1))
        start += len(part) + 1
    return items


def parse_input(text: str) -> InputDocument:
    ring = None
    fld = None
    degrees = None
    generators = None
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        keyword, _, rest = line.strip().partition(" ")
        body_col = indent + len(keyword) + 1
        if keyword not in ("ring", "degrees", "ideal"):
            raise ParseError(f"unknown declaration {keyword!r}", lineno, indent + 1,
                             ("'ring'", "'degrees'", "'ideal'"))
        if keyword in seen:
            raise ParseError(f"duplicate '{keyword}' declaration", lineno, indent + 1)
        seen.add(keyword)
        if keyword != "ring" and ring is None:
            raise ParseError("the ring must be declared first", lineno, indent + 1, ("'ring'",))

        if keyword == "ring":
            names_part, sep, kind = rest.partition(" over ")
            if not sep:
                raise ParseError("missing coefficient declaration", lineno, len(line) + 1, ("'over'",))
            names = []
            for name, col in _split_items(names_part, body_col):
                if not _IDENT.fullmatch(name):
                    raise ParseError(f"invalid variable name {name!r}", lineno, col, ("an identifier",))
                names.append(name)
            try:
                ring = Ring(tuple(names))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, body_col + 1) from None
            kind = kind.strip()
            kind_col = body_col + len(names_part) + len(" over ") + 1
            if kind == "monomial":
                fld = None
            else:
                m = _FIELD.fullmatch(kind)
                if not m:
                    raise ParseError(f"unknown coefficient kind {kind!r}", lineno, kind_col,
                                     ("'monomial'", "'gf(<prime>)'"))
                try:
                    fld = PrimeField(int(m.group(1)))
                except ValueError as exc:
                    raise ParseError(str(exc), lineno, kind_col) from None

        elif keyword == "degrees":
            entries = []
            for item, col in _split_items(rest, body_col):
                if item == "inf":
                    entries.append(float("inf"))
                elif item.isdigit():
                    entries.append(int(item))
                else:
                    raise ParseError(f"invalid degree {item!r}", lineno, col, ("an integer", "'inf'"))
            try:
                degrees = DegreeSequence(tuple(entries))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, body_col + 1) from None
            if len(degrees) > ring.n:
                raise ParseError(f"{len(degrees)} degrees for {ring.n} variables", lineno, body_col + 1)

        else:
            generators = []
            for item, col in _split_items(rest, body_col):
                if not item:
                    raise ParseError("empty generator", lineno, col, ("a generator",))
                try:
                    terms = parse_terms(item, ring)
                except ValueError as exc:
                    msg = str(exc)
                    m = re.match(r"column (\d+): (.*)", msg)
                    if m:
                        raise ParseError(m.group(2), lineno, col + int(m.group(1)) - 1) from None
                    raise ParseError(msg, lineno, col) from None
                if fld is None:
                    if len(terms) != 1 or terms[0][1] != 1:
                        raise ParseError(f"{item!r} is not a monomial", lineno, col, ("a monomial",))
                    generators.append(Monomial(terms[0][0]))
                else:
                    try:
                        poly = Polynomial(ring, fld, terms)
                    except ValueError as exc:
                        raise ParseError(f"inhomogeneous generator {item!r}", lineno, col) from exc
                    generators.append(poly)

    if ring is None:
        raise ParseError("no ring declaration", 1, 1, ("'ring'",))
    return InputDocument(ring, fld, degrees, tuple(generators or ()))
