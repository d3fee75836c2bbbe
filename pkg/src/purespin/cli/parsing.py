"""Text syntax for scalars, spinors, phase vectors and connection documents.

Grammar (whitespace is ignored between tokens)::

    scalar    := rational | "(" rational "," rational ")"      # (a,b) = a + b i
    rational  := ["-"] digits ["/" digits]
    spinor    := ["+"|"-"] sterm (("+"|"-") sterm)*
    sterm     := scalar ["*" blade] | blade
    blade     := "t" digits                  # single index, e.g. t3, t10
               | "t{" digit+ "}"             # one digit per index, e.g. t{13}
               | "t{" digits ("," digits)* "}"   # e.g. t{1,10}
    vector    := ["+"|"-"] vterm (("+"|"-") vterm)*
    vterm     := [scalar "*"] ("e" digits | "t" digits)

A bare scalar in a spinor is a multiple of 1̂, so ``1`` is the blade 1̂ and
``0`` is the zero spinor.  Indices inside braces may be unordered; the
orientation sign is applied.  Canonical printing lists blades in ascending
mask order and frame vectors e_1..e_n, θ^1..θ^n, and parses back to the same
object.
"""

from __future__ import annotations

import json
from typing import Any

from gmpy2 import mpq

from ..clifford import PhaseVector
from ..exact_linalg import ONE, ZERO, Scalar
from ..exterior import Spinor, blade_mask, mask_indices

__all__ = [
    "ParseError",
    "InputError",
    "parse_scalar",
    "format_scalar",
    "parse_spinor",
    "format_spinor",
    "parse_phase_vector",
    "format_phase_vector",
    "parse_vector_list",
    "connection_from_json",
    "connection_to_json",
    "jet_from_json",
]


class InputError(ValueError):
    """Invalid user input (syntax or constraint violation)."""


class ParseError(InputError):
    def __init__(self, message: str, text: str, pos: int, line: int = 1):
        self.message = message
        self.text = text
        self.pos = pos
        self.line = line
        self.column = pos + 1
        lines = text.splitlines() or [""]
        shown = lines[line - 1] if 0 < line <= len(lines) else ""
        super().__init__(f"line {line}, column {self.column}: {message} in {shown!r}")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.eat(ch):
            self.error(f"expected {ch!r}")

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.pos)

    def digits(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits")
        return self.text[start:self.pos]

    def at_end(self) -> bool:
        return self.peek() == ""


def _rational(lx: _Lexer, allow_sign: bool) -> mpq:
    neg = allow_sign and lx.eat("-")
    num = int(lx.digits())
    den = 1
    if lx.eat("/"):
        start = lx.pos
        den = int(lx.digits())
        if den == 0:
            raise ParseError("zero denominator", lx.text, start)
    q = mpq(num, den)
    return -q if neg else q


def _scalar(lx: _Lexer, allow_sign: bool = True) -> Scalar:
    if lx.eat("("):
        re = _rational(lx, True)
        lx.expect(",")
        im = _rational(lx, True)
        lx.expect(")")
        return Scalar(re, im)
    return Scalar(_rational(lx, allow_sign), 0)


def parse_scalar(text: str) -> Scalar:
    lx = _Lexer(text)
    x = _scalar(lx)
    if not lx.at_end():
        lx.error("trailing input")
    return x


def format_scalar(x: Scalar) -> str:
    return str(x)


def _blade(lx: _Lexer, n: int | None) -> tuple[int, int, list[int]]:
    start = lx.pos
    lx.expect("t")
    if lx.eat("{"):
        first = lx.digits()
        if lx.peek() == ",":
            idx = [int(first)]
            while lx.eat(","):
                idx.append(int(lx.digits()))
        else:
            idx = [int(ch) for ch in first]
        lx.expect("}")
    else:
        idx = [int(lx.digits())]
    for i in idx:
        if i < 1 or (n is not None and i > n):
            raise ParseError(f"index {i} out of range 1..{n}", lx.text, start)
    mask, sign = blade_mask(idx)
    return mask, sign, idx


def parse_spinor(text: str, n: int | None = None) -> Spinor:
    """Parse the spinor grammar; ``n`` defaults to the largest index seen."""
    lx = _Lexer(text)
    terms: list[tuple[int, Scalar]] = []
    top = 0
    first = True
    while True:
        if lx.at_end():
            lx.error("expected a term")
        neg = False
        if lx.eat("-"):
            neg = True
        elif not lx.eat("+") and not first:
            lx.error("expected '+' or '-'")
        if lx.peek() == "t":
            coeff, (mask, sign, idx) = ONE, _blade(lx, n)
        else:
            coeff = _scalar(lx, allow_sign=False)
            mask, sign, idx = 0, 1, []
            if lx.eat("*"):
                mask, sign, idx = _blade(lx, n)
        top = max([top] + idx)
        if neg:
            coeff = -coeff
        if sign:
            terms.append((mask, coeff if sign > 0 else -coeff))
        first = False
        if lx.at_end():
            break
        if lx.peek() not in "+-":
            lx.error("expected '+' or '-'")
    dim = n if n is not None else top
    c: dict[int, Scalar] = {}
    for mask, x in terms:
        c[mask] = c.get(mask, ZERO) + x
    return Spinor(dim, c)


def _term(coeff: Scalar, label: str, first: bool) -> str:
    """Render ``coeff*label`` with a leading sign; empty label means a bare scalar."""
    if coeff.is_real and coeff.re < 0:
        sign, coeff = "-", -coeff
    else:
        sign = "+"
    if not label:
        body = str(coeff)
    elif coeff == ONE:
        body = label
    else:
        body = f"{coeff}*{label}"
    if first:
        return body if sign == "+" else "-" + body
    return f" {sign} {body}"


def blade_label(mask: int) -> str:
    idx = mask_indices(mask)
    if not idx:
        return ""
    if len(idx) == 1:
        return f"t{idx[0]}"
    if max(idx) >= 10:
        return "t{" + ",".join(map(str, idx)) + "}"
    return "t{" + "".join(map(str, idx)) + "}"


def format_spinor(s: Spinor) -> str:
    items = sorted(s.items())
    if not items:
        return "0"
    return "".join(_term(x, blade_label(m), k == 0) for k, (m, x) in enumerate(items))


def parse_phase_vector(text: str, n: int) -> PhaseVector:
    lx = _Lexer(text)
    coords = [ZERO] * (2 * n)
    first = True
    if lx.peek() == "0":
        lx.pos += 1
        if lx.at_end():
            return PhaseVector.zero(n)
        lx.error("trailing input")
    while True:
        if lx.at_end():
            lx.error("expected a term")
        neg = False
        if lx.eat("-"):
            neg = True
        elif not lx.eat("+") and not first:
            lx.error("expected '+' or '-'")
        coeff = ONE
        if lx.peek() not in ("e", "t"):
            coeff = _scalar(lx, allow_sign=False)
            lx.expect("*")
        start = lx.pos
        kind = lx.peek()
        if kind not in ("e", "t"):
            lx.error("expected e<i> or t<i>")
        lx.pos += 1
        i = int(lx.digits())
        if not 1 <= i <= n:
            raise ParseError(f"index {i} out of range 1..{n}", lx.text, start)
        a = i - 1 if kind == "e" else n + i - 1
        coords[a] = coords[a] + (-coeff if neg else coeff)
        first = False
        if lx.at_end():
            break
        if lx.peek() not in "+-":
            lx.error("expected '+' or '-'")
    return PhaseVector.from_coords(n, coords)


def format_phase_vector(v: PhaseVector) -> str:
    n = v.n
    parts = []
    for a, x in enumerate(v.coords()):
        if x:
            label = f"e{a + 1}" if a < n else f"t{a - n + 1}"
            parts.append(_term(x, label, not parts))
    return "".join(parts) if parts else "0"


def parse_vector_list(text: str, n: int) -> list[PhaseVector]:
    """Semicolon-separated phase vectors, e.g. ``"e1; t2"``."""
    out = []
    offset = 0
    for chunk in text.split(";"):
        if chunk.strip():
            try:
                out.append(parse_phase_vector(chunk, n))
            except ParseError as err:
                raise ParseError(err.message, text, offset + err.pos) from None
        offset += len(chunk) + 1
    return out


# ---------------------------------------------------------------------------
# JSON documents


def _json_load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, text, err.colno - 1, err.lineno) from None


def _rational_field(s, where: str) -> mpq:
    if isinstance(s, int) and not isinstance(s, bool):
        return mpq(s)
    if not isinstance(s, str):
        raise InputError(f"{where}: expected a rational string, got {s!r}")
    lx = _Lexer(s)
    try:
        q = _rational(lx, True)
        if not lx.at_end():
            lx.error("trailing input")
    except ParseError as err:
        raise InputError(f"{where}: {err}") from None
    return q


def _scalar_field(s, where: str) -> Scalar:
    if isinstance(s, int) and not isinstance(s, bool):
        return Scalar(s)
    if not isinstance(s, str):
        raise InputError(f"{where}: expected a scalar string, got {s!r}")
    try:
        return parse_scalar(s)
    except ParseError as err:
        raise InputError(f"{where}: {err}") from None


def connection_from_json(text_or_doc):
    """Build a FrameConnection from ``{"n", "omega": [[a,b,c,re,im], ...], "A": [...]}``.

    Indices are 1-based frame indices.  Every listed ω_abc needs its partner
    ω_acb = -ω_abc listed too (or both omitted); nothing is symmetrized.
    """
    from ..connection import FrameConnection

    doc = _json_load(text_or_doc) if isinstance(text_or_doc, str) else text_or_doc
    if not isinstance(doc, dict):
        raise InputError("connection document must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"'n' must be a positive integer, got {n!r}")
    entries: dict[tuple[int, int, int], Scalar] = {}
    for k, entry in enumerate(doc.get("omega", [])):
        where = f"omega[{k}]"
        if not isinstance(entry, list) or len(entry) not in (4, 5):
            raise InputError(f"{where}: expected [a, b, c, re, im]")
        a, b, c = entry[:3]
        for idx in (a, b, c):
            if not isinstance(idx, int) or isinstance(idx, bool) or not 1 <= idx <= 2 * n:
                raise InputError(f"{where}: index {idx!r} out of range 1..{2 * n}")
        re = _rational_field(entry[3], where)
        im = _rational_field(entry[4], where) if len(entry) == 5 else mpq(0)
        if (a, b, c) in entries:
            raise InputError(f"{where}: duplicate entry ({a},{b},{c})")
        entries[(a, b, c)] = Scalar(re, im)
    for (a, b, c), x in entries.items():
        partner = entries.get((a, c, b), ZERO)
        if x + partner:
            raise InputError(
                f"omega antisymmetry broken at ({a},{b},{c}): omega_abc = {x}, omega_acb = {partner}"
            )
    A = doc.get("A", ["0"] * (2 * n))
    if not isinstance(A, list) or len(A) != 2 * n:
        raise InputError(f"'A' must list {2 * n} scalars")
    gauge = [_scalar_field(x, f"A[{k}]") for k, x in enumerate(A)]
    return FrameConnection.from_entries(n, entries, gauge)


def connection_to_json(c) -> str:
    """Canonical document: nonzero ω entries (both partners) in index order."""
    omega = []
    for (a, b, cc), x in c.nonzero_entries():
        omega.append([a, b, cc, str(x.re), str(x.im)])
    doc = {"n": c.n, "omega": omega, "A": [str(x) for x in c.A]}
    return json.dumps(doc, separators=(", ", ": "))


def jet_from_json(doc, n: int):
    """``{"value": spinor-text, "derivs": [2n spinor-texts]}`` -> SpinorJet."""
    from ..connection import SpinorJet

    if isinstance(doc, str):
        doc = _json_load(doc)
    value = parse_spinor(doc["value"], n)
    derivs = doc.get("derivs")
    if derivs is None:
        return SpinorJet.constant(value)
    if len(derivs) != 2 * n:
        raise InputError(f"'derivs' must list {2 * n} spinors")
    return SpinorJet(value, tuple(parse_spinor(d, n) for d in derivs))
