"""Dense state vectors over registers of d-level systems.

Amplitudes are stored as a flat ``complex128`` array of length ``d**parties``.
Flat index ``k`` is read as the base-``d`` digit string ``(j1, j2, ...)`` with
``j1`` (party 1, the receiver) the most significant digit, so the flat order
matches ``np.reshape(amps, (d,) * parties)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import CapExceeded, LabelError, NonUnitaryError, ShapeError

DEFAULT_CAP = 2**20
ATOL = 1e-10


def root_of_unity(k: int, d: int) -> complex:
    """Return ``exp(2*pi*i*k/d)`` with the exponent reduced mod ``d`` first.

    Quarter turns come out exact (so ``d=2`` gives exactly ``-1``), and
    ``root_of_unity(d - r, d)`` is the exact conjugate of ``root_of_unity(r, d)``.
    """
    r = k % d
    if (4 * r) % d == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[(4 * r) // d]
    if 2 * r > d:
        return root_of_unity(d - r, d).conjugate()
    theta = 2.0 * math.pi * r / d
    return complex(math.cos(theta), math.sin(theta))


@dataclass(frozen=True)
class RegisterShape:
    """``parties`` qudits of local dimension ``d``."""

    d: int
    parties: int
    cap: int = field(default=DEFAULT_CAP, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise ShapeError(f"local dimension must be an integer >= 1, got {self.d!r}")
        if not isinstance(self.parties, int) or self.parties < 2:
            raise ShapeError(f"need at least 2 parties, got {self.parties!r}")
        if self.d ** self.parties > self.cap:
            raise CapExceeded(
                f"register dimension {self.d}^{self.parties} = {self.d ** self.parties} "
                f"exceeds cap {self.cap}"
            )

    @property
    def dim(self) -> int:
        return self.d**self.parties

    @property
    def senders(self) -> int:
        return self.parties - 1

    def index(self, digits: Sequence[int]) -> int:
        if len(digits) != self.parties:
            raise LabelError(f"expected {self.parties} digits, got {len(digits)}")
        k = 0
        for j in digits:
            if not 0 <= j < self.d:
                raise LabelError(f"digit {j} out of range [0, {self.d})")
            k = k * self.d + j
        return k

    def digits(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.dim:
            raise LabelError(f"index {index} out of range [0, {self.dim})")
        out = []
        for _ in range(self.parties):
            index, j = divmod(index, self.d)
            out.append(j)
        return tuple(reversed(out))


def ket_string(digits: Sequence[int], d: int) -> str:
    """``(0, 1, 2) -> "012"``; digits are comma-separated once ``d > 10``."""
    if d <= 10:
        return "".join(str(j) for j in digits)
    return ",".join(str(j) for j in digits)


class PureState:
    """Normalized, immutable state vector on a :class:`RegisterShape`."""

    __slots__ = ("shape", "amps")

    def __init__(self, shape: RegisterShape, amps, *, atol: float = ATOL):
        arr = np.array(amps, dtype=np.complex128)
        if arr.shape != (shape.dim,):
            raise ShapeError(f"expected {shape.dim} amplitudes, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("amplitudes must be finite")
        norm2 = float(np.vdot(arr, arr).real)
        if abs(norm2 - 1.0) > atol:
            raise ValueError(f"state is not normalized (squared norm {norm2!r})")
        arr.flags.writeable = False
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "amps", arr)

    def __setattr__(self, name, value):
        raise AttributeError("PureState is immutable")

    def __repr__(self):
        return f"PureState(d={self.shape.d}, parties={self.shape.parties})"

    def tensor(self) -> np.ndarray:
        return self.amps.reshape((self.shape.d,) * self.shape.parties)

    def nonzero(self, tol: float = 1e-15) -> list[tuple[tuple[int, ...], complex]]:
        """(digits, amplitude) for each amplitude with modulus above ``tol``."""
        idx = np.flatnonzero(np.abs(self.amps) > tol)
        return [(self.shape.digits(int(k)), complex(self.amps[k])) for k in idx]

    def allclose(self, other: PureState, atol: float = ATOL) -> bool:
        """Entrywise comparison; global phase counts."""
        return self.shape == other.shape and bool(
            np.all(np.abs(self.amps - other.amps) <= atol)
        )

    def equal_up_to_phase(self, other: PureState, atol: float = ATOL) -> bool:
        if self.shape != other.shape:
            return False
        return abs(abs(inner_product(self, other)) - 1.0) <= atol


class LocalMatrix:
    """Unitary acting on a single d-level system.

    ``entries[j_out, j_in]`` is the amplitude sending ``|j_in>`` to ``|j_out>``.
    """

    __slots__ = ("entries",)

    def __init__(self, entries, *, atol: float = ATOL):
        arr = np.array(entries, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ShapeError(f"local matrix must be square, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("matrix entries must be finite")
        gram = arr.conj().T @ arr
        if np.max(np.abs(gram - np.eye(arr.shape[0]))) > atol:
            raise NonUnitaryError("matrix is not unitary")
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    def __setattr__(self, name, value):
        raise AttributeError("LocalMatrix is immutable")

    @property
    def d(self) -> int:
        return self.entries.shape[0]

    def __repr__(self):
        return f"LocalMatrix(d={self.d})"


def basis_ket(shape: RegisterShape, digits: Sequence[int]) -> PureState:
    amps = np.zeros(shape.dim, dtype=np.complex128)
    amps[shape.index(digits)] = 1.0
    return PureState(shape, amps)


def inner_product(a: PureState, b: PureState) -> complex:
    """<a|b>, antilinear in ``a``."""
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a.amps, b.amps))


def apply_local(state: PureState, particle: int, u: LocalMatrix) -> PureState:
    """Apply ``u`` to one tensor factor; ``particle`` is 1-based (1 = receiver)."""
    shape = state.shape
    if not 1 <= particle <= shape.parties:
        raise LabelError(f"particle {particle} out of range [1, {shape.parties}]")
    if not isinstance(u, LocalMatrix):
        u = LocalMatrix(u)
    if u.d != shape.d:
        raise ShapeError(f"matrix dimension {u.d} does not match qudit dimension {shape.d}")
    axis = particle - 1
    t = np.tensordot(u.entries, state.tensor(), axes=([1], [axis]))
    t = np.moveaxis(t, 0, axis)
    return PureState(shape, t.reshape(-1))
