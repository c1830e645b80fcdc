"""Exact values of ``t_k = (+-1)^k ((alpha)_k/k!)^r``, partial sums, and Euler numbers."""

from __future__ import annotations

import functools
import threading
from dataclasses import dataclass
from fractions import Fraction

from .polycore import Poly
from .symred import TermSpec


class TermValueStream:
    """Lazily grown cache ``t_0, t_1, ...`` for one :class:`TermSpec`.

    Growth is serialised by a lock; :meth:`snapshot` hands readers an
    immutable copy.
    """

    def __init__(self, spec: TermSpec):
        self.spec = spec
        self._cache = [Fraction(1)]
        self._lock = threading.Lock()

    def _ratio(self, k: int) -> Fraction:
        s = self.spec
        return s.sign * ((k + s.alpha) / (k + 1)) ** s.r

    def _grow(self, k: int) -> None:
        with self._lock:
            while len(self._cache) <= k:
                j = len(self._cache) - 1
                self._cache.append(self._cache[j] * self._ratio(j))

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("negative index")
        if k >= len(self._cache):
            self._grow(k)
        return self._cache[k]

    def values(self, n: int) -> list[Fraction]:
        """``[t_0, ..., t_n]``."""
        self[n]
        return self._cache[: n + 1]

    def snapshot(self) -> tuple:
        with self._lock:
            return tuple(self._cache)


@functools.lru_cache(maxsize=None)
def stream(spec: TermSpec) -> TermValueStream:
    return TermValueStream(spec)


def term_eval(spec: TermSpec, k: int) -> Fraction:
    return stream(spec)[k]


def partial_sum(spec: TermSpec, f: Poly, K: int) -> Fraction:
    """``sum_{k=0}^{K} f(k) t_k``."""
    ts = stream(spec).values(K)
    return sum((f(k) * ts[k] for k in range(K + 1)), Fraction(0))


@dataclass(frozen=True)
class EulerTable:
    values: tuple

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self):
        return len(self.values)


def pascal_row(n: int) -> list[int]:
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


@functools.lru_cache(maxsize=8)
def euler_numbers(n_max: int) -> EulerTable:
    """``E_0..E_{n_max}`` from ``sum_j binom(2n, 2j) E_{2j} = 0`` (``n >= 1``)."""
    vals = [0] * (n_max + 1)
    vals[0] = 1
    row = [1]
    for n in range(1, n_max + 1):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
        if n % 2:
            continue
        # row is now binom(n, .) with n = 2h even
        vals[n] = -sum(row[j] * vals[j] for j in range(0, n, 2))
    return EulerTable(tuple(vals))
