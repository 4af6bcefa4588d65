"""Fibonacci numbers, the Zeckendorf codec, and two closed forms for G.

All arithmetic is checked against the unsigned 64-bit range; Python ints
never wrap, so anything past ``U64_MAX`` raises :class:`RangeError` instead.
Fibonacci indices follow ``F(1) = F(2) = 1``.
"""

from __future__ import annotations

import math
from bisect import bisect_right

from .errors import RangeError, ValidationError

U64_MAX = 2**64 - 1


def _build_table() -> list[int]:
    table = [0, 1]
    while table[-1] + table[-2] <= U64_MAX:
        table.append(table[-1] + table[-2])
    return table


# FIB[i] is F(i); FIB[0] = 0 is a bisection sentinel, not part of the API.
FIB: list[int] = _build_table()
MAX_FIB_INDEX = len(FIB) - 1  # 93 for 64-bit unsigned


def checked(value: int, what: str = "value") -> int:
    if value < 0 or value > U64_MAX:
        raise RangeError(f"{what} = {value} does not fit in 64-bit unsigned")
    return value


def fib(n: int) -> int:
    """Return F(n) for 1 <= n <= MAX_FIB_INDEX."""
    if n < 1:
        raise ValidationError(f"Fibonacci index must be >= 1, got {n}")
    if n > MAX_FIB_INDEX:
        raise RangeError(
            f"F({n}) overflows 64-bit unsigned (largest index is {MAX_FIB_INDEX})"
        )
    return FIB[n]


def zeck_encode(n: int) -> list[int]:
    """Greedy Zeckendorf decomposition of ``n`` as descending indices >= 2.

    >>> zeck_encode(20)
    [7, 5, 3]
    """
    if n < 0:
        raise ValidationError(f"cannot encode negative integer {n}")
    checked(n, "n")
    indices = []
    hi = len(FIB)
    while n:
        # FIB[1] == FIB[2], so bisect_right always lands past index 1
        r = bisect_right(FIB, n, 0, hi) - 1
        indices.append(r)
        n -= FIB[r]
        hi = r - 1
    return indices


def validate_zeck(indices: list[int]) -> None:
    for pos, r in enumerate(indices):
        if r < 2:
            raise ValidationError(f"index {r} at position {pos} is below 2")
        if r > MAX_FIB_INDEX:
            raise RangeError(f"index {r} at position {pos} exceeds {MAX_FIB_INDEX}")
        if pos and indices[pos - 1] < r + 2:
            raise ValidationError(
                f"indices {indices[pos - 1]}, {r} at positions {pos - 1}, {pos} "
                "break the gap condition"
            )


def zeck_decode(indices: list[int]) -> int:
    validate_zeck(indices)
    return checked(sum(FIB[r] for r in indices), "decoded value")


def g_zeck(n: int) -> int:
    """G(n) by shifting every index of the Zeckendorf form of n down by one."""
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    return sum(FIB[r - 1] for r in zeck_encode(n))


def isqrt(m: int) -> int:
    """Largest s with s*s <= m."""
    if m < 0:
        raise ValidationError(f"isqrt of negative {m}")
    return math.isqrt(m)


def g_floor(n: int) -> int:
    """G(n) = floor((n+1)/phi), in integer arithmetic only.

    With m = n+1, (n+1)/phi = m(sqrt5 - 1)/2. Put s = floor(m sqrt5) =
    isqrt(5 m^2). Then m sqrt5 - m = (s - m) + t with 0 <= t < 1, and
    halving that can only reach the next integer when s - m is odd, where
    (1 + t)/2 < 1 still falls short. So the floor is (s - m) // 2.
    """
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    m = n + 1
    square = checked(5 * m * m, "5*(n+1)^2")
    return (isqrt(square) - m) // 2
