# app/normalizers/ideal_normalizer.py

"""
Ideal files, in either of two forms.

Symbolic:
    # comment
    vars: 6
    field: rational          (optional)
    label: ex-no             (optional)
    x1*x4^3
    x2*x5^3
    x3*x4*x5*x6

One monomial per line; `1` is the unit monomial, `0` (or no monomial lines)
gives the zero ideal.

Structured: a JSON object {"nvars": 6, "gens": [[1,0,0,3,0,0], ...]} with the
optional keys "field" and "label".
"""

import json
import re

from pydantic import ValidationError

from app.algebra.monomials import format_monomial
from app.errors import IdealSyntaxError, InvalidInputError
from app.schemas.ideal import IdealDocument

HEADER_RE = re.compile(r"(vars|field|label)\s*:\s*(.*)$", re.IGNORECASE)
FACTOR_RE = re.compile(r"x(\d+)(?:\^(-?\d+))?")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _parse_monomial(body: str, line_no: int, offset: int, nvars: int) -> list[int]:
    exps = [0] * nvars
    i = 0
    while True:
        while i < len(body) and body[i] in " \t":
            i += 1
        m = FACTOR_RE.match(body, i)
        if not m:
            found = repr(body[i]) if i < len(body) else "end of line"
            raise IdealSyntaxError(f"expected a variable like x1, found {found}", line_no, offset + i + 1)
        index = int(m.group(1))
        if not 1 <= index <= nvars:
            raise IdealSyntaxError(f"x{index} is outside x1..x{nvars}", line_no, offset + i + 1)
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp < 0:
            raise IdealSyntaxError(f"negative exponent {exp}", line_no, offset + m.start(2) + 1)
        exps[index - 1] += exp
        i = m.end()
        while i < len(body) and body[i] in " \t":
            i += 1
        if i == len(body):
            return exps
        if body[i] != "*":
            raise IdealSyntaxError(f"unexpected {body[i]!r}", line_no, offset + i + 1)
        i += 1


def _parse_symbolic(text: str) -> IdealDocument:
    nvars = None
    field = "rational"
    label = None
    gens: list[list[int]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        body = line.lstrip()
        if not body:
            continue
        offset = len(line) - len(body)

        header = HEADER_RE.match(body)
        if header:
            key, value = header.group(1).lower(), header.group(2).strip()
            if key == "vars":
                if nvars is not None:
                    raise IdealSyntaxError("duplicate 'vars:' header", line_no, offset + 1)
                if not value.isdigit() or int(value) < 1:
                    raise IdealSyntaxError(f"bad variable count {value!r}", line_no, offset + header.start(2) + 1)
                nvars = int(value)
            elif key == "field":
                field = value
            else:
                label = value or None
            continue

        if nvars is None:
            raise IdealSyntaxError("monomial before the 'vars:' header", line_no, offset + 1)
        if body == "0":
            continue
        if body == "1":
            gens.append([0] * nvars)
            continue
        gens.append(_parse_monomial(body, line_no, offset, nvars))

    if nvars is None:
        raise IdealSyntaxError("missing 'vars:' header", 1, 1)
    try:
        return IdealDocument(nvars=nvars, field=field, gens=gens, label=label)
    except ValidationError as exc:
        raise InvalidInputError(_first_error(exc))


def _parse_structured(text: str) -> IdealDocument:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise IdealSyntaxError(exc.msg, exc.lineno, exc.colno)
    if not isinstance(payload, dict):
        raise IdealSyntaxError("expected a JSON object", 1, 1)
    try:
        return IdealDocument.model_validate(payload)
    except ValidationError as exc:
        raise InvalidInputError(_first_error(exc))


def _first_error(exc: ValidationError) -> str:
    err = exc.errors()[0]
    where = ".".join(str(p) for p in err.get("loc", ()))
    return f"{where}: {err['msg']}" if where else err["msg"]


def parse_ideal(text: str) -> IdealDocument:
    if text.lstrip().startswith("{"):
        return _parse_structured(text)
    return _parse_symbolic(text)


def serialize_ideal(doc: IdealDocument, form: str = "symbolic") -> str:
    if form == "json":
        return json.dumps(doc.model_dump(), indent=2) + "\n"
    if form != "symbolic":
        raise InvalidInputError(f"unknown ideal format {form!r}")

    lines = []
    if doc.label:
        lines.append(f"label: {doc.label}")
    lines.append(f"vars: {doc.nvars}")
    lines.append(f"field: {doc.field}")
    if not doc.gens:
        lines.append("0")
    lines.extend(format_monomial(tuple(g)) for g in doc.gens)
    return "\n".join(lines) + "\n"
