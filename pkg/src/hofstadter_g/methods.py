"""G(1..N) by each of the four independent routes."""

from __future__ import annotations

from . import fibzeck, recurrence, tree
from .errors import RangeError, ValidationError

METHODS = ("recursion", "zeck", "floor", "tree")


def sequence(method: str, horizon: int) -> list[int]:
    if horizon < 1:
        raise ValidationError(f"horizon must be >= 1, got {horizon}")
    if method == "recursion":
        return recurrence.eval_g(horizon).terms()
    if method == "zeck":
        return [fibzeck.g_zeck(n) for n in range(1, horizon + 1)]
    if method == "floor":
        return [fibzeck.g_floor(n) for n in range(1, horizon + 1)]
    if method == "tree":
        if horizon + 1 > tree.MAX_LABEL:
            raise RangeError(f"tree method needs label {horizon + 1} <= {tree.MAX_LABEL}")
        return [tree.parent_label(n + 1) for n in range(1, horizon + 1)]
    raise ValidationError(f"unknown method {method!r}; pick one of {', '.join(METHODS)}")


def first_disagreement(columns: dict[str, list[int]]) -> int | None:
    """1-based n of the first row where the columns differ, else None."""
    rows = zip(*columns.values())
    for n, row in enumerate(rows, start=1):
        if len(set(row)) > 1:
            return n
    return None
