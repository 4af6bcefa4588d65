"""Table evaluation of G(n) = n - G(G^k(n-1)) with G(1) = 1.

Tables are filled bottom-up in ascending n, so every inner lookup is a
plain bounds check against what has already been computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import EvaluationError, ValidationError


@dataclass(frozen=True)
class KFoldSpec:
    k: int
    horizon: int

    def __post_init__(self):
        if self.k < 1:
            raise ValidationError(f"k must be >= 1, got {self.k}")
        if self.horizon < 1:
            raise ValidationError(f"horizon must be >= 1, got {self.horizon}")


@dataclass(frozen=True)
class SequenceTable:
    """Values G(1..horizon), 1-indexed: ``table[n]`` is G(n).

    ``values[0]`` is a zero pad so that list positions equal n.
    ``slow`` and ``first_jump`` record the slow-growth observation made
    while filling.
    """

    values: tuple[int, ...]
    k: int = 1
    slow: bool = True
    first_jump: int | None = None

    @classmethod
    def from_values(cls, terms: Sequence[int], k: int = 1) -> "SequenceTable":
        padded = (0, *terms)
        ok, jump = _scan_slow(padded)
        return cls(padded, k, ok, jump)

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.horizon:
            raise IndexError(f"n = {n} outside 1..{self.horizon}")
        return self.values[n]

    def __len__(self) -> int:
        return self.horizon

    def terms(self) -> list[int]:
        return list(self.values[1:])


@dataclass(frozen=True)
class FrequencyTable:
    """``counts[m]`` = #{n <= horizon : G(n) = m}; ``counts[0]`` is a pad.

    Only ``counts[1..complete_upto]`` are final; the last value attained
    may still gain preimages beyond the horizon.
    """

    counts: tuple[int, ...]
    complete_upto: int
    horizon: int = field(default=0)

    def __getitem__(self, m: int) -> int:
        return self.counts[m]

    def complete(self) -> list[int]:
        return list(self.counts[1 : self.complete_upto + 1])


def _scan_slow(values: Sequence[int]) -> tuple[bool, int | None]:
    for n in range(2, len(values)):
        if values[n] - values[n - 1] not in (0, 1):
            return False, n
    return True, None


def _fill(values: list[int], k: int, horizon: int) -> None:
    """Append terms to ``values`` (already holding G(0..len-1)) up to horizon."""
    if k == 1:
        # hot path for the classical sequence; values[n-1] < n always holds here
        for n in range(len(values), horizon + 1):
            inner = values[n - 1]
            if inner >= n:
                raise EvaluationError(n, [n - 1, inner])
            g = n - values[inner]
            if g - values[n - 1] not in (0, 1):
                raise EvaluationError(n, [n - 1, inner], f"G({n}) = {g} breaks slow growth")
            values.append(g)
        return
    for n in range(len(values), horizon + 1):
        chain = [n - 1]
        c = n - 1
        for _ in range(k):
            c = values[c]
            chain.append(c)
            if not 1 <= c < n:
                raise EvaluationError(n, chain)
        values.append(n - values[c])
        if values[-1] < 1:
            raise EvaluationError(n, chain, f"G({n}) = {values[-1]} is not positive")


def eval_kfold(spec: KFoldSpec, base: SequenceTable | None = None) -> SequenceTable:
    """Evaluate the k-fold recursion to ``spec.horizon``.

    If ``base`` is given (same k), its prefix is reused and only the
    missing terms are computed.
    """
    if base is not None:
        if base.k != spec.k:
            raise ValidationError(f"base table has k = {base.k}, spec has k = {spec.k}")
        if base.horizon >= spec.horizon:
            return SequenceTable.from_values(base.values[1 : spec.horizon + 1], spec.k)
        values = list(base.values)
    else:
        values = [0, 1]
    _fill(values, spec.k, spec.horizon)
    ok, jump = (True, None) if spec.k == 1 else _scan_slow(values)
    return SequenceTable(tuple(values), spec.k, ok, jump)


def eval_g(horizon: int) -> SequenceTable:
    return eval_kfold(KFoldSpec(1, horizon))


def extend(table: SequenceTable, horizon: int) -> SequenceTable:
    return eval_kfold(KFoldSpec(table.k, horizon), base=table)


def frequency(table: SequenceTable) -> FrequencyTable:
    values = table.values
    counts = [0] * (max(values) + 1)
    for v in values[1:]:
        counts[v] += 1
    return FrequencyTable(tuple(counts), max(values[-1] - 1, 0), table.horizon)


def is_slow(table: SequenceTable | Sequence[int]) -> tuple[bool, int | None]:
    """Check that consecutive differences are 0 or 1.

    Returns ``(True, None)`` or ``(False, n)`` with the first n where
    G(n) - G(n-1) falls outside {0, 1}. Plain sequences are read 1-indexed.
    """
    if isinstance(table, SequenceTable):
        return _scan_slow(table.values)
    return _scan_slow((0, *table))


def table_for_frequencies(length: int, k: int = 1) -> SequenceTable:
    """Evaluate a table whose frequency counts are complete through ``length``."""
    horizon = max(4, 2 * length + 4)
    table = eval_kfold(KFoldSpec(k, horizon))
    while table[table.horizon] - 1 < length:
        table = extend(table, 2 * table.horizon)
    return table
