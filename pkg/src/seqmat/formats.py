"""Text formats: matrix and vector files, program listings, codings.

Matrix file (bit-exact round trip):
    line 1: field descriptor          gf2 | gfp <p> | rational
    line 2: n <dimension>
    next n lines: n whitespace-separated scalar literals

A vector file is the same with a single entry line.  A coding file is a
matrix file followed by one "fixups: r_1 ... r_n" line (0 = no fix-up,
otherwise the 1-based partner index) or one "perm: s_1 ... s_n" line
(1-based image of each index).

Program listings print one assignment per line as
    x<i> := <c1>*x1 + ... + <cn>*xn
with zero terms omitted, coefficient 1 omitted, -1 rendered as a bare
sign, and "x<i> := 0" for an all-zero row.  Indices are 1-based.
"""

from __future__ import annotations

from .errors import ParseError
from .fields import FieldSpec, field_parse
from .matrix import Matrix, StraightLineProgram, Vector
from .sequentialize import InSituCoding, PermCoding


def _content_lines(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


def _parse_header(lines: list[str]) -> tuple[FieldSpec, int]:
    if len(lines) < 2:
        raise ParseError("missing field/dimension header")
    field = field_parse(lines[0])
    parts = lines[1].split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise ParseError(f"bad dimension line: {lines[1]!r}")
    n = int(parts[1])
    if n < 1:
        raise ParseError("dimension must be at least 1")
    return field, n


def _parse_entry_line(field: FieldSpec, n: int, line: str) -> tuple:
    tokens = line.split()
    if len(tokens) != n:
        raise ParseError(f"expected {n} entries, got {len(tokens)}: {line!r}")
    return tuple(field.parse_scalar(tok) for tok in tokens)


def parse_matrix(text: str) -> Matrix:
    lines = _content_lines(text)
    field, n = _parse_header(lines)
    if len(lines) != 2 + n:
        raise ParseError(f"expected {n} entry lines, got {len(lines) - 2}")
    rows = tuple(_parse_entry_line(field, n, line) for line in lines[2:])
    return Matrix(field, rows)


def format_matrix(M: Matrix) -> str:
    return f"{M.field.describe()}\nn {M.n}\n{M.body_text()}\n"


def parse_vector(text: str) -> Vector:
    lines = _content_lines(text)
    field, n = _parse_header(lines)
    if len(lines) != 3:
        raise ParseError("vector file needs exactly one entry line")
    return Vector(field, _parse_entry_line(field, n, lines[2]))


def format_vector(X: Vector) -> str:
    return f"{X.field.describe()}\nn {len(X)}\n{X}\n"


def _format_linear(field: FieldSpec, coeffs) -> str:
    terms = []
    for j, c in enumerate(coeffs, start=1):
        if not c:
            continue
        negative = c < 0  # canonical residues are never negative
        a = -c if negative else c
        body = f"x{j}" if a == field.one else f"{field.format_scalar(a)}*x{j}"
        terms.append((negative, body))
    if not terms:
        return "0"
    first_neg, first = terms[0]
    pieces = [("-" if first_neg else "") + first]
    for negative, body in terms[1:]:
        pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)


def format_program(P: StraightLineProgram) -> str:
    lines = [
        f"x{step.target + 1} := {_format_linear(P.field, step.coeffs.entries)}"
        for step in P.steps
    ]
    return "\n".join(lines) + "\n" if lines else ""


def format_coding(coding: InSituCoding | PermCoding) -> str:
    head = format_matrix(coding.matrix)
    if isinstance(coding, InSituCoding):
        tail = " ".join(str(r) for r in coding.fixups_one_based)
        return f"{head}fixups: {tail}\n"
    tail = " ".join(str(s) for s in coding.perm_one_based)
    return f"{head}perm: {tail}\n"


def parse_coding(text: str) -> InSituCoding | PermCoding:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty coding")
    last = lines[-1]
    matrix = parse_matrix("\n".join(lines[:-1]))
    n = matrix.n
    kind, _, rest = last.partition(":")
    kind = kind.strip()
    values = rest.split()
    if kind not in ("fixups", "perm"):
        raise ParseError(f"expected a fixups/perm line, got {last!r}")
    if len(values) != n or not all(v.lstrip("-").isdigit() for v in values):
        raise ParseError(f"bad {kind} line: {last!r}")
    nums = [int(v) for v in values]
    if kind == "fixups":
        return InSituCoding.from_one_based(matrix, nums)
    return PermCoding.from_one_based(matrix, nums)
