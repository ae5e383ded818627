"""Multi-party dense coding: encode with local Weyl operations, decode with
one collective measurement in the generalized Bell basis.

Sender ``k`` (1-based) owns particle ``k + 1``; particle 1 stays with the
receiver.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .bell import BellLabel, basis_labels, basis_matrix, shared_initial_state
from .core import PureState, RegisterShape, apply_local
from .errors import AmbiguousState, DecodeCollision, PlanError
from .weyl import WeylLabel, sorted_labels, weyl_action_label, weyl_labels, weyl_unitary

AMBIGUITY_THRESHOLD = 1.0 - 1e-6

Message = tuple[WeylLabel, ...]


@dataclass(frozen=True)
class SenderPlan:
    """The operation sets the senders agreed on before any message is sent."""

    shape: RegisterShape
    allowed: tuple[frozenset[WeylLabel], ...]

    def __post_init__(self):
        allowed = tuple(frozenset(WeylLabel(*x) for x in s) for s in self.allowed)
        object.__setattr__(self, "allowed", allowed)
        if len(allowed) != self.shape.senders:
            raise PlanError(
                f"plan has {len(allowed)} senders, shape needs {self.shape.senders}"
            )
        for k, labels in enumerate(allowed, start=1):
            if not labels:
                raise PlanError(f"sender {k} has an empty allowed set")
            for label in labels:
                if not (0 <= label.n < self.shape.d and 0 <= label.m < self.shape.d):
                    raise PlanError(
                        f"sender {k}: label {label.tag()} out of range for d={self.shape.d}"
                    )

    @property
    def total_messages(self) -> int:
        return math.prod(len(s) for s in self.allowed)

    def ordered(self) -> list[list[WeylLabel]]:
        return [sorted_labels(s) for s in self.allowed]

    def messages(self) -> Iterator[Message]:
        """Every allowed message, in a fixed (table-order) sequence."""
        return itertools.product(*self.ordered())

    def check(self, message: Sequence[WeylLabel]) -> Message:
        if len(message) != len(self.allowed):
            raise PlanError(
                f"message has {len(message)} symbols, plan has {len(self.allowed)} senders"
            )
        out = []
        for k, (raw, labels) in enumerate(zip(message, self.allowed), start=1):
            label = WeylLabel(*raw)
            if label not in labels:
                allowed = ", ".join(x.tag() for x in sorted_labels(labels))
                raise PlanError(
                    f"sender {k} may not use {label.tag()}; allowed: {{{allowed}}}"
                )
            out.append(label)
        return tuple(out)


@dataclass(frozen=True)
class ProtocolTranscript:
    plan: SenderPlan
    message: Message
    encoded_state: PureState
    decoded_label: BellLabel
    fidelity: float
    decoded_message: Message

    @property
    def match(self) -> bool:
        return self.decoded_message == self.message


def canonical_plan(shape: RegisterShape) -> SenderPlan:
    """First sender may use all ``d**2`` operators; the others only ``U(0, m)``."""
    d = shape.d
    full = frozenset(weyl_labels(d))
    shift_only = frozenset(WeylLabel(0, m) for m in range(d))
    return SenderPlan(shape, (full,) + (shift_only,) * (shape.senders - 1))


def make_plan(shape: RegisterShape, allowed: Iterable[Iterable[WeylLabel]]) -> SenderPlan:
    return SenderPlan(shape, tuple(frozenset(WeylLabel(*x) for x in s) for s in allowed))


def encode(plan: SenderPlan, message: Sequence[WeylLabel]) -> PureState:
    message = plan.check(message)
    d = plan.shape.d
    state = shared_initial_state(plan.shape)
    for k, label in enumerate(message, start=1):
        state = apply_local(state, k + 1, weyl_unitary(d, label))
    return state


def born_probabilities(state: PureState) -> np.ndarray:
    """Outcome probabilities, aligned with :func:`qdc.bell.basis_labels`."""
    overlaps = basis_matrix(state.shape).conj() @ state.amps
    return np.abs(overlaps) ** 2


def measure_decode(state: PureState) -> tuple[BellLabel, float]:
    """Identify which Bell basis state ``state`` is (global phase ignored).

    Raises AmbiguousState when the best squared overlap is below
    ``AMBIGUITY_THRESHOLD``.
    """
    probs = born_probabilities(state)
    k = int(np.argmax(probs))
    fidelity = float(probs[k])
    if fidelity < AMBIGUITY_THRESHOLD:
        raise AmbiguousState(
            f"state is not a Bell basis state (largest squared overlap {fidelity:.6g})",
            fidelity,
        )
    return basis_labels(state.shape)[k], fidelity


def born_samples(state: PureState, seed: int, shots: int) -> list[BellLabel]:
    """Draw ``shots`` Bell-basis outcomes.

    The stream is fixed by ``seed`` alone: numpy's PCG64 bit generator
    (``np.random.default_rng(seed)``) yields ``shots`` uniforms ``u`` from
    ``Generator.random``; each outcome is the first label whose cumulative
    probability, in :func:`qdc.bell.basis_labels` order, exceeds ``u * total``.
    """
    probs = born_probabilities(state)
    cdf = np.cumsum(probs)
    rng = np.random.default_rng(seed)
    u = rng.random(shots)
    idx = np.searchsorted(cdf, u * cdf[-1], side="right")
    idx = np.minimum(idx, len(cdf) - 1)
    labels = basis_labels(state.shape)
    return [labels[int(i)] for i in idx]


def born_sample(state: PureState, seed: int) -> BellLabel:
    return born_samples(state, seed, 1)[0]


def decoding_table(plan: SenderPlan) -> dict[BellLabel, Message]:
    """Map each reachable Bell label back to the unique message producing it."""
    table: dict[BellLabel, Message] = {}
    for message in plan.messages():
        label = weyl_action_label(plan.shape.d, message)
        if label in table:
            raise DecodeCollision(
                f"messages {_fmt(table[label])} and {_fmt(message)} both encode to {label}"
            )
        table[label] = message
    return table


def roundtrip(plan: SenderPlan, message: Sequence[WeylLabel]) -> ProtocolTranscript:
    message = plan.check(message)
    lookup = decoding_table(plan)
    state = encode(plan, message)
    label, fidelity = measure_decode(state)
    return ProtocolTranscript(
        plan=plan,
        message=message,
        encoded_state=state,
        decoded_label=label,
        fidelity=fidelity,
        decoded_message=lookup[label],
    )


def capacity_bits(d: int, parties: int) -> float:
    """Bits carried by one round of the canonical scheme: ``log2(d**parties)``."""
    if d < 1 or parties < 2:
        raise ValueError(f"need d >= 1 and parties >= 2, got d={d}, parties={parties}")
    return math.log2(d**parties)


def _fmt(message: Message) -> str:
    return "(" + ", ".join(x.tag() for x in message) + ")"
