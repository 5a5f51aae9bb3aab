"""Report serialization helpers.

All numbers are emitted with 17 significant digits so that reports are
bit-reproducible and round-trip exactly through text.
"""

from __future__ import annotations

import json

_MARK = "\x00f17\x00"


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def _wrap(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return f"{_MARK}{format_float(obj)}{_MARK}"
    if isinstance(obj, complex):
        return {"re": _wrap(obj.real), "im": _wrap(obj.imag)}
    if isinstance(obj, dict):
        return {str(k): _wrap(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_wrap(v) for v in obj]
    return str(obj)


def dumps(obj, indent: int = 2) -> str:
    """json.dumps with floats rendered at 17 significant digits."""
    text = json.dumps(_wrap(obj), indent=indent)
    # unquote the marked float tokens (the marker is escaped inside strings)
    mark = "\\u0000f17\\u0000"
    return text.replace(f'"{mark}', "").replace(f'{mark}"', "")


def csv_row(values) -> str:
    parts = []
    for v in values:
        if isinstance(v, float):
            parts.append(format_float(v))
        else:
            parts.append(str(v))
    return ",".join(parts)
