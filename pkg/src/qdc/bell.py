"""Generalized Bell (GHZ-type) basis for ``parties`` qudits of dimension ``d``.

The state with label ``(n, (i1, ..., iN))`` is::

    sum_j exp(2 pi i j n / d) |j> |j+i1> ... |j+iN> / sqrt(d)

with all kets taken mod ``d``. Two parties is just ``N = 1``.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .core import PureState, RegisterShape, root_of_unity
from .errors import LabelError


class BellLabel(NamedTuple):
    n: int
    shifts: tuple[int, ...]

    def validate(self, shape: RegisterShape) -> None:
        d = shape.d
        if not 0 <= self.n < d:
            raise LabelError(f"phase index {self.n} out of range [0, {d})")
        if len(self.shifts) != shape.senders:
            raise LabelError(
                f"expected {shape.senders} shift indices, got {len(self.shifts)}"
            )
        for s in self.shifts:
            if not 0 <= s < d:
                raise LabelError(f"shift index {s} out of range [0, {d})")


def bell_state(shape: RegisterShape, label: BellLabel) -> PureState:
    label = BellLabel(label[0], tuple(label[1]))
    label.validate(shape)
    d = shape.d
    amps = np.zeros(shape.dim, dtype=np.complex128)
    scale = 1.0 / math.sqrt(d)
    for j in range(d):
        digits = (j,) + tuple((j + s) % d for s in label.shifts)
        amps[shape.index(digits)] = root_of_unity(j * label.n, d) * scale
    return PureState(shape, amps)


def shared_initial_state(shape: RegisterShape) -> PureState:
    """Equal superposition of ``|jj...j>``: the resource shared before encoding."""
    return bell_state(shape, BellLabel(0, (0,) * shape.senders))


def basis_labels(shape: RegisterShape) -> list[BellLabel]:
    """All labels, ordered by shift vector first and phase index second."""
    return [
        BellLabel(n, shifts)
        for shifts in itertools.product(range(shape.d), repeat=shape.senders)
        for n in range(shape.d)
    ]


def enumerate_basis(shape: RegisterShape) -> list[tuple[BellLabel, PureState]]:
    return [(label, bell_state(shape, label)) for label in basis_labels(shape)]


@lru_cache(maxsize=32)
def _basis_rows(shape: RegisterShape) -> np.ndarray:
    rows = np.array([state.amps for _, state in enumerate_basis(shape)])
    rows.flags.writeable = False
    return rows


def basis_matrix(shape: RegisterShape) -> np.ndarray:
    """Read-only ``(dim, dim)`` array; row ``k`` is the ``k``-th basis state.

    ``basis_matrix(shape).conj() @ psi.amps`` gives every overlap at once.
    """
    return _basis_rows(shape)


def gram_matrix(shape: RegisterShape) -> np.ndarray:
    rows = basis_matrix(shape)
    return rows.conj() @ rows.T
