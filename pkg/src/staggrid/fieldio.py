"""Plain-text serialization for FieldND values.

Format, one item per line:

    staggrid-field 1
    ndim 2
    shape 4 3
    staggered-axis none
    count 12
    1.0
    -2.5
    ...

Values are written with ``repr(float(v))``, which round-trips float64
exactly, and stored in C (row-major) order.  ``staggered-axis`` is either
``none`` or the axis index.  Parsing is strict: any malformed header,
count mismatch, or unreadable value raises FieldFormatError.
"""

from __future__ import annotations

import os
from typing import Union

import numpy as np

from .errors import FieldFormatError
from .ndfield import FieldND

_MAGIC = "staggrid-field 1"


def write_field(path: Union[str, os.PathLike], field: FieldND) -> None:
    """Write a field to ``path`` in the plain-text format."""
    values = field.values
    lines = [_MAGIC,
             f"ndim {values.ndim}",
             "shape " + " ".join(str(n) for n in values.shape),
             "staggered-axis " + ("none" if field.staggered_axis is None
                                  else str(field.staggered_axis)),
             f"count {values.size}"]
    lines.extend(repr(float(v)) for v in values.ravel(order="C"))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_field(path: Union[str, os.PathLike]) -> FieldND:
    """Read a field written by :func:`write_field`.

    Raises FieldFormatError on any deviation from the format, including
    values the field type itself rejects (non-finite entries, axis out of
    range).
    """
    try:
        with open(path, "r", encoding="ascii") as fh:
            raw = fh.read()
    except OSError as exc:
        raise FieldFormatError(f"cannot read field file {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise FieldFormatError(f"field file {path} is not ASCII text") from exc

    lines = raw.splitlines()
    if len(lines) < 5:
        raise FieldFormatError(f"field file {path} is truncated: header incomplete")
    if lines[0] != _MAGIC:
        raise FieldFormatError(
            f"field file {path} has bad magic line {lines[0]!r}; expected {_MAGIC!r}"
        )
    ndim = _header_int(path, lines[1], "ndim")
    if ndim < 1:
        raise FieldFormatError(f"field file {path}: ndim must be >= 1, got {ndim}")
    shape = _header_shape(path, lines[2], ndim)
    axis_token = _header_token(path, lines[3], "staggered-axis")
    if axis_token == "none":
        staggered_axis = None
    else:
        try:
            staggered_axis = int(axis_token)
        except ValueError:
            raise FieldFormatError(
                f"field file {path}: staggered-axis must be 'none' or an integer, "
                f"got {axis_token!r}"
            ) from None
    count = _header_int(path, lines[4], "count")
    expected = 1
    for n in shape:
        expected *= n
    if count != expected:
        raise FieldFormatError(
            f"field file {path}: count {count} does not match shape "
            f"{'x'.join(str(n) for n in shape)} = {expected}"
        )

    body = lines[5:]
    # A trailing newline produces no extra entry; splitlines already drops it.
    if len(body) != count:
        raise FieldFormatError(
            f"field file {path}: expected {count} values, found {len(body)}"
        )
    values = np.empty(count, dtype=np.float64)
    for k, token in enumerate(body):
        try:
            values[k] = float(token)
        except ValueError:
            raise FieldFormatError(
                f"field file {path}: bad value on line {6 + k}: {token!r}"
            ) from None
    try:
        return FieldND(values.reshape(shape), staggered_axis=staggered_axis)
    except ValueError as exc:
        raise FieldFormatError(f"field file {path}: {exc}") from exc


def _header_token(path, line: str, key: str) -> str:
    parts = line.split()
    if len(parts) != 2 or parts[0] != key:
        raise FieldFormatError(
            f"field file {path}: expected '{key} <value>', got {line!r}"
        )
    return parts[1]


def _header_int(path, line: str, key: str) -> int:
    token = _header_token(path, line, key)
    try:
        return int(token)
    except ValueError:
        raise FieldFormatError(
            f"field file {path}: {key} must be an integer, got {token!r}"
        ) from None


def _header_shape(path, line: str, ndim: int):
    parts = line.split()
    if not parts or parts[0] != "shape":
        raise FieldFormatError(f"field file {path}: expected 'shape ...', got {line!r}")
    if len(parts) != 1 + ndim:
        raise FieldFormatError(
            f"field file {path}: shape lists {len(parts) - 1} extents but ndim is {ndim}"
        )
    try:
        shape = tuple(int(p) for p in parts[1:])
    except ValueError:
        raise FieldFormatError(
            f"field file {path}: shape entries must be integers, got {line!r}"
        ) from None
    if any(n < 1 for n in shape):
        raise FieldFormatError(f"field file {path}: shape extents must be >= 1")
    return shape
