"""Plain-text knot record files.

One record per block, blocks separated by blank lines, ``key: value`` lines::

    name: trefoil
    a2: 1
    v: 1/12

Keys are ``name, lambda_w, lambda2, a2, a4, v, framing``; missing numeric
keys default to 0 and the framing to ``0/1``.  ``#`` starts a comment line.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .dedekind import ValidationError
from .splice import FramingFraction, KnotRecord

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")
_FIELDS = {"lambda_w": "ambient_lambda_w", "lambda2": "ambient_lambda2", "a2": "a2", "a4": "a4", "v": "v_coeff"}
KEYS = frozenset(_FIELDS) | {"name", "framing"}


def parse_rational(text: str) -> Fraction:
    """Strict ``num`` or ``num/den``; no decimals, no spaces inside."""
    text = text.strip()
    if not _RATIONAL.fullmatch(text):
        raise ValidationError(f"not an exact rational: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValidationError(f"zero denominator in {text!r}") from None


def parse_framing(text: str) -> FramingFraction:
    """``u/v`` (or ``u``) with v > 0 and gcd(u, v) = 1; a slope is not reduced for you."""
    parse_rational(text)
    u, _, v = text.strip().partition("/")
    return FramingFraction.checked(int(u), int(v or 1))


def _record(lines: list[tuple[int, str]]) -> KnotRecord:
    seen: dict[str, str] = {}
    for lineno, line in lines:
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep:
            raise ValidationError(f"line {lineno}: expected 'key: value'")
        if key not in KEYS:
            raise ValidationError(f"line {lineno}: unknown key {key!r}")
        if key in seen:
            raise ValidationError(f"line {lineno}: repeated key {key!r}")
        seen[key] = value.strip()
    name = seen.pop("name", "")
    if not name:
        raise ValidationError(f"record ending at line {lines[-1][0]} has no name")
    kwargs = {_FIELDS[k]: parse_rational(v) for k, v in seen.items() if k in _FIELDS}
    if "framing" in seen:
        kwargs["framing"] = parse_framing(seen["framing"])
    return KnotRecord(name=name, **kwargs)


def parse_records(text: str) -> dict[str, KnotRecord]:
    blocks: list[list[tuple[int, str]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append((lineno, line))
    out: dict[str, KnotRecord] = {}
    for block in filter(None, blocks):
        rec = _record(block)
        if rec.name in out:
            raise ValidationError(f"duplicate record name {rec.name!r}")
        out[rec.name] = rec
    return out


def load_records(path: str) -> dict[str, KnotRecord]:
    with open(path, encoding="utf-8") as fh:
        return parse_records(fh.read())


def format_record(k: KnotRecord) -> str:
    lines = [f"name: {k.name}"]
    for key, attr in _FIELDS.items():
        lines.append(f"{key}: {getattr(k, attr)}")
    lines.append(f"framing: {k.framing}")
    return "\n".join(lines)
