"""Phase-and-shift (generalized Pauli) unitaries on one qudit.

``U(n, m)`` sends ``|j>`` to ``exp(2 pi i j n / d) |j + m mod d>``: ``n`` ramps
the phase, ``m`` cyclically shifts the level.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .bell import BellLabel
from .core import LocalMatrix, root_of_unity
from .errors import LabelError, PlanError


class WeylLabel(NamedTuple):
    n: int
    m: int

    def validate(self, d: int) -> None:
        if not (0 <= self.n < d and 0 <= self.m < d):
            raise LabelError(f"operator label U_{{{self.n}{self.m}}} out of range for d={d}")

    def tag(self, d: int | None = None) -> str:
        if d is not None and d > 10:
            return f"U_{{{self.n},{self.m}}}"
        return f"U_{{{self.n}{self.m}}}"


def table_order(label: WeylLabel) -> tuple[int, int]:
    """Sort key putting shift first: U00, U10, U20, U01, ..."""
    return (label.m, label.n)


def weyl_labels(d: int) -> list[WeylLabel]:
    return [WeylLabel(n, m) for m in range(d) for n in range(d)]


@lru_cache(maxsize=None)
def _cached_unitary(d: int, n: int, m: int) -> LocalMatrix:
    u = np.zeros((d, d), dtype=np.complex128)
    for j in range(d):
        u[(j + m) % d, j] = root_of_unity(j * n, d)
    return LocalMatrix(u)


def weyl_unitary(d: int, label: WeylLabel) -> LocalMatrix:
    if d < 1:
        raise LabelError(f"dimension must be >= 1, got {d}")
    label = WeylLabel(*label)
    label.validate(d)
    return _cached_unitary(d, label.n, label.m)


def weyl_action_label(d: int, labels_per_sender: Sequence[WeylLabel]) -> BellLabel:
    """Bell label reached when sender ``k`` applies ``labels_per_sender[k]``
    to particle ``k + 2`` of the shared all-zero state.

    Phase indices add mod ``d``; each sender's shift lands in its own slot.
    """
    if len(labels_per_sender) == 0:
        raise PlanError("at least one sender is required")
    total = 0
    shifts = []
    for raw in labels_per_sender:
        label = WeylLabel(*raw)
        label.validate(d)
        total += label.n
        shifts.append(label.m)
    return BellLabel(total % d, tuple(shifts))


def shift_coset(d: int, m: int) -> frozenset[WeylLabel]:
    if not 0 <= m < d:
        raise LabelError(f"shift index {m} out of range [0, {d})")
    return frozenset(WeylLabel(n, m) for n in range(d))


def shift_cosets(d: int) -> list[frozenset[WeylLabel]]:
    return [shift_coset(d, m) for m in range(d)]


def sorted_labels(labels: Iterable[WeylLabel]) -> list[WeylLabel]:
    return sorted((WeylLabel(*x) for x in labels), key=table_order)
