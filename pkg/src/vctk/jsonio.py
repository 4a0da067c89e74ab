"""Canonical JSON encoding and strict integer parsing.

Canonical form: object keys sorted, no whitespace, and integers of magnitude
beyond 2^63-1 rendered as decimal strings so consumers without big-integer
support can round-trip them. Parsing accepts either representation. There
are no floats anywhere on the wire.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import InputError
from .intmat import IntMatrix, freeze

INT64_MAX = 2**63 - 1


def as_int(x: Any) -> int:
    if isinstance(x, bool):
        raise InputError("expected an integer, got a boolean")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        stripped = x.strip()
        sign_body = stripped[1:] if stripped[:1] in "+-" else stripped
        if sign_body.isdigit():
            return int(stripped, 10)
        raise InputError(f"not a decimal integer: {x!r}")
    raise InputError(f"expected an integer, got {type(x).__name__}")


def int_rows(rows: Any) -> IntMatrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("expected a list of rows of integers")
    return freeze([[as_int(x) for x in row] for row in rows])


def int_list(xs: Any) -> tuple[int, ...]:
    if not isinstance(xs, list):
        raise InputError("expected a list of integers")
    return tuple(as_int(x) for x in xs)


def jsonable(value: Any) -> Any:
    """Recursively make a structure JSON-safe: big ints become strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > INT64_MAX else value
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(jsonable(v) for v in value)
    raise InputError(f"value of type {type(value).__name__} is not JSON-encodable")


def canonical_dumps(value: Any) -> str:
    """Deterministic JSON: sorted keys, compact separators, big ints quoted."""
    return json.dumps(jsonable(value), sort_keys=True, separators=(",", ":"))


def loads(text: str) -> Any:
    try:
        return json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def _reject_float(token: str):
    raise InputError(f"floating point is not accepted on the wire: {token!r}")
