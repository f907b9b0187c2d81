#!/usr/bin/env python3
"""
Reading and writing monomials, ideal files and f-vectors.

Ideal files look like

    # comment
    n=8 t=2
    x1x3x5
    1,4,6

Monomials are accepted as "x1x3x5" or "1,3,5" and always written compactly.
"""

import re
from pathlib import Path

import yaml

from tspread.errors import DomainError, FormatError
from tspread.ideal import TSpreadIdeal
from tspread.monomial import Monomial, MonomialSet

COMPACT_PATTERN = re.compile(r"^(?:x\d+)+$")
INDEX_LIST_PATTERN = re.compile(r"^\d+(?:\s*,\s*\d+)*$")
HEADER_PATTERN = re.compile(r"^n\s*=\s*(\d+)[\s,]+t\s*=\s*(\d+)$")

# Largest integer a JSON consumer can hold exactly in a double
JSON_SAFE_MAX = 2**53


def parse_monomial(text):
    text = text.strip()
    if COMPACT_PATTERN.match(text):
        indices = [int(i) for i in re.findall(r"\d+", text)]
    elif INDEX_LIST_PATTERN.match(text):
        indices = [int(i) for i in text.split(",")]
    else:
        raise FormatError(f"not a monomial: {text!r}")
    try:
        return Monomial(tuple(indices))
    except DomainError as e:
        raise FormatError(f"not a square-free monomial: {text!r} ({e})") from e


def format_monomial(u):
    return str(u)


def _header_and_monomials(text, source):
    header = None
    monomials = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            match = HEADER_PATTERN.match(line)
            if not match:
                raise FormatError(f"{source}:{number}: expected 'n=<int> t=<int>', got {line!r}")
            header = (int(match.group(1)), int(match.group(2)))
            continue
        try:
            monomials.append(parse_monomial(line))
        except FormatError as e:
            raise FormatError(f"{source}:{number}: {e}") from e
    if header is None:
        raise FormatError(f"{source}: missing 'n=<int> t=<int>' header")
    return header, monomials


def parse_ideal_text(text, source="<text>"):
    """Parse ideal-file text; generators are minimalized."""
    (n, t), monomials = _header_and_monomials(text, source)
    return TSpreadIdeal.generated_by(n, t, monomials)


def read_ideal_file(path):
    path = Path(path)
    return parse_ideal_text(path.read_text(encoding="utf-8"), source=str(path))


def format_ideal(ideal):
    lines = [f"n={ideal.n} t={ideal.t}"]
    lines.extend(format_monomial(u) for u in ideal.generators)
    return "\n".join(lines) + "\n"


def write_ideal_file(ideal, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_ideal(ideal), encoding="utf-8")
    return path


def read_monomial_set_file(path):
    """A file in the ideal format read as a set L of one common degree."""
    path = Path(path)
    (n, t), monomials = _header_and_monomials(path.read_text(encoding="utf-8"), str(path))
    if not monomials:
        raise FormatError(f"{path}: no monomials, cannot tell the degree")
    degrees = {u.degree for u in monomials}
    if len(degrees) != 1:
        raise FormatError(f"{path}: monomials of mixed degrees {sorted(degrees)}")
    return MonomialSet(n, degrees.pop(), t, tuple(monomials))


def format_monomial_set(L):
    lines = [f"n={L.n} t={L.t}"]
    lines.extend(format_monomial(u) for u in L)
    return "\n".join(lines) + "\n"


def parse_f_vector(text):
    """'1,12,50,20,15' -> (1, 12, 50, 20, 15)."""
    parts = [part.strip() for part in text.split(",")]
    if not parts or any(not part.isdigit() for part in parts):
        raise FormatError(f"not a comma-separated list of nonnegative integers: {text!r}")
    return tuple(int(part) for part in parts)


def json_int(value):
    """Integers beyond 2^53 become decimal strings."""
    return value if abs(value) <= JSON_SAFE_MAX else str(value)


def report_to_json(report):
    return {
        "feasible": report.feasible,
        "t": report.t,
        "n": json_int(report.n),
        "reason": report.reason,
        "violations": [
            {"degree": v.degree, "bound": json_int(v.bound), "value": json_int(v.value)}
            for v in report.violations
        ],
        "bounds": [
            {
                "degree": row.degree,
                "value": json_int(row.value),
                "next_value": json_int(row.next_value),
                "bound": json_int(row.bound),
            }
            for row in report.bounds
        ],
    }


def trace_to_yaml(trace):
    data = {
        "n": trace.n,
        "t": trace.t,
        "succeeded": trace.succeeded,
        "failure_degree": trace.failure_degree,
        "steps": [
            {
                "degree": step.degree,
                "lex_set_size": step.segment.size,
                "shadow_size": step.shadow_size,
                "generators": [format_monomial(u) for u in step.generators],
            }
            for step in trace.steps
        ],
    }
    if not trace.succeeded:
        data["required"] = trace.required
        data["available"] = trace.available
    return yaml.safe_dump(data, sort_keys=False)
