"""Arbitrary-precision Fibonacci kernel.

Convention: F(0) = 0, F(1) = F(2) = 1, F(k) = F(k-1) + F(k-2).  Index 0 is
included so that expressions like F(k-2) at k = 2 never index negatively; a
F(0) term simply contributes nothing to a sum.
"""

from __future__ import annotations

import threading


class FibCache:
    """Append-only memo of Fibonacci numbers.

    Safe under concurrent use: growth is serialized by a lock, and already
    cached prefixes are never mutated, so readers see stable values.
    """

    def __init__(self) -> None:
        self._values: list[int] = [0, 1, 1]
        self._lock = threading.Lock()

    def __call__(self, k: int) -> int:
        if k < 0:
            raise ValueError(f"Fibonacci index must be non-negative, got {k}")
        values = self._values
        if k < len(values):
            return values[k]
        with self._lock:
            while len(self._values) <= k:
                self._values.append(self._values[-1] + self._values[-2])
            return self._values[k]

    def __len__(self) -> int:
        return len(self._values)


_CACHE = FibCache()


def fib(k: int) -> int:
    """Return F(k) under the convention F(1) = F(2) = 1, F(0) = 0."""
    return _CACHE(k)


def even_sum_identity_check(n: int) -> bool:
    """Check 1 + sum(F(2i), i=1..n) == F(2n+1) and sum(F(2i-1)) == F(2n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    even_total = 1 + sum(fib(2 * i) for i in range(1, n + 1))
    odd_total = sum(fib(2 * i - 1) for i in range(1, n + 1))
    return even_total == fib(2 * n + 1) and odd_total == fib(2 * n)
