"""Polynomial text parsing and knot-table ingestion."""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass

from .laurent import LaurentPoly

__all__ = ["PolyParseError", "KnotRecord", "parse_poly", "read_pd_file", "read_csv"]


class PolyParseError(ValueError):
    """Malformed polynomial text."""


@dataclass(frozen=True)
class KnotRecord:
    name: str
    pd_text: str | None = None
    jones_text: str | None = None

    def __post_init__(self):
        if self.pd_text is None and self.jones_text is None:
            raise ValueError(f"record {self.name!r} has neither a PD code nor a polynomial")


_TERM_RE = re.compile(
    r"""(?P<sign>[+-]?)
        (?:(?P<coef>\d+)\*?)?
        (?P<var>t)?
        (?:\^(?:\{(?P<bexp>-?\d+(?:/\d+)?)\}|(?P<exp>-?\d+(?:/\d+)?)))?
    """,
    re.VERBOSE,
)


def _half_exponent(frac: str) -> int:
    if "/" in frac:
        num, den = frac.split("/")
        num, den = int(num), int(den)
    else:
        num, den = int(frac), 1
    if den == 0 or (2 * num) % den:
        raise PolyParseError(f"exponent {frac!r} is not a half-integer")
    return 2 * num // den


def parse_poly(text: str) -> LaurentPoly:
    """Parse signed-monomial polynomial text into a t_half LaurentPoly.

    Accepts ``t^{k}``, ``t^k``, half-integer exponents like ``t^{1/2}``,
    bare ``t`` (exponent 1) and bare integers (exponent 0).  Coefficients
    at repeated exponents are summed.
    """
    s = re.sub(r"\s+", "", text)
    # collapse sign pairs so serializer output like "+ -1*t^2" reads back
    while True:
        t = s.replace("+-", "-").replace("-+", "-").replace("--", "+").replace("++", "+")
        if t == s:
            break
        s = t
    if not s:
        raise PolyParseError("empty polynomial text")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise PolyParseError(f"malformed polynomial near {s[pos:pos+12]!r}")
        sign, coef, var = m.group("sign"), m.group("coef"), m.group("var")
        exp = m.group("bexp") or m.group("exp")
        if coef is None and var is None:
            raise PolyParseError(f"malformed polynomial near {s[pos:pos+12]!r}")
        if exp is not None and var is None:
            raise PolyParseError(f"exponent without variable near {s[pos:pos+12]!r}")
        if not first and not sign:
            raise PolyParseError(f"missing sign between terms near {s[pos:pos+12]!r}")
        c = int(coef) if coef is not None else 1
        if sign == "-":
            c = -c
        if var is None:
            h = 0
        elif exp is None:
            h = 2
        else:
            h = _half_exponent(exp)
        coeffs[h] = coeffs.get(h, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly("t_half", coeffs)


def read_pd_file(path: str) -> list[KnotRecord]:
    """One PD per line, optionally prefixed ``name: pd``; blank lines and
    ``#`` comments are skipped."""
    records = []
    with open(path, encoding="utf-8") as fh:
        for i, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if ":" in line:
                name, pd_text = line.split(":", 1)
                name = name.strip()
                pd_text = pd_text.strip()
            else:
                name, pd_text = f"line{i}", line
            records.append(KnotRecord(name=name, pd_text=pd_text))
    return records


def read_csv(path: str) -> list[KnotRecord]:
    """CSV with header columns ``name``, ``jones`` and optionally ``pd``."""
    records = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        cols = set(reader.fieldnames or ())
        if "name" not in cols or "jones" not in cols:
            raise ValueError(f"{path}: CSV needs 'name' and 'jones' columns, got {sorted(cols)}")
        for row in reader:
            records.append(
                KnotRecord(
                    name=row["name"].strip(),
                    pd_text=(row.get("pd") or "").strip() or None,
                    jones_text=row["jones"].strip(),
                )
            )
    return records
