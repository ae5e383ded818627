"""Brute-force certification of sender plans.

A plan is decodable when every allowed message lands on a different Bell
basis state. ``verify_plan`` enumerates all messages; by default it uses the
closed-form label rule from :func:`qdc.weyl.weyl_action_label`, and with
``numeric=True`` it instead encodes each message as a state vector and
measures it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .bell import BellLabel
from .core import RegisterShape
from .errors import BudgetExceeded, LabelError, ShapeError
from .protocol import Message, SenderPlan, encode, make_plan, measure_decode
from .weyl import WeylLabel, weyl_action_label, weyl_labels

DEFAULT_MESSAGE_BUDGET = 10**6
MAX_WITNESSES = 32


@dataclass
class DecodabilityReport:
    plan: SenderPlan
    total_messages: int
    distinct_labels: int
    collisions: list[tuple[Message, Message, BellLabel]] = field(default_factory=list)
    collision_count: int = 0
    numeric: bool = False

    @property
    def decodable(self) -> bool:
        return self.distinct_labels == self.total_messages

    @property
    def witnesses_truncated(self) -> int:
        """Collisions counted but not listed as witnesses."""
        return self.collision_count - len(self.collisions)


def verify_plan(
    plan: SenderPlan,
    *,
    numeric: bool = False,
    budget: int = DEFAULT_MESSAGE_BUDGET,
    max_witnesses: int = MAX_WITNESSES,
) -> DecodabilityReport:
    total = plan.total_messages
    if total > budget:
        raise BudgetExceeded(f"plan has {total} messages, budget is {budget}")
    d = plan.shape.d
    first: dict[BellLabel, Message] = {}
    collisions = []
    count = 0
    for message in plan.messages():
        if numeric:
            label, _ = measure_decode(encode(plan, message))
        else:
            label = weyl_action_label(d, message)
        if label in first:
            count += 1
            if len(collisions) < max_witnesses:
                collisions.append((first[label], message, label))
        else:
            first[label] = message
    return DecodabilityReport(
        plan=plan,
        total_messages=total,
        distinct_labels=len(first),
        collisions=collisions,
        collision_count=count,
        numeric=numeric,
    )


def one_per_coset_plans(d: int) -> list[SenderPlan]:
    """Three-party plans: first sender unrestricted, second sender picks one
    operator from each shift coset (``d**d`` plans)."""
    if d < 2:
        raise ShapeError(f"need d >= 2, got {d}")
    shape = RegisterShape(d, 3)
    full = weyl_labels(d)
    plans = []
    for phases in itertools.product(range(d), repeat=d):
        chosen = [WeylLabel(n, m) for m, n in enumerate(phases)]
        plans.append(make_plan(shape, [full, chosen]))
    return plans


@dataclass(frozen=True)
class TransformationTable:
    """Bell label reached by every (first sender, second sender) operator pair,
    three parties, rows and columns in table order."""

    d: int
    labels: tuple[WeylLabel, ...]
    cells: tuple[tuple[BellLabel, ...], ...]

    def __getitem__(self, key: tuple[WeylLabel, WeylLabel]) -> BellLabel:
        row, col = key
        return self.cells[self.labels.index(WeylLabel(*row))][self.labels.index(WeylLabel(*col))]


def transformation_table(d: int) -> TransformationTable:
    if d < 1:
        raise ShapeError(f"need d >= 1, got {d}")
    labels = tuple(weyl_labels(d))
    cells = tuple(tuple(weyl_action_label(d, (r, c)) for c in labels) for r in labels)
    return TransformationTable(d, labels, cells)


@dataclass
class PlanSearch:
    shape: RegisterShape
    subset_size: int
    reports: list[DecodabilityReport]
    candidates: int
    examined: int

    @property
    def truncated(self) -> bool:
        return self.examined < self.candidates

    @property
    def decodable(self) -> list[DecodabilityReport]:
        return [r for r in self.reports if r.decodable]


def search_restricted_plans(
    shape: RegisterShape, subset_size: int, budget: int = 10_000, *, numeric: bool = False
) -> PlanSearch:
    """Try every way of giving each restricted sender ``subset_size`` operators.

    The first sender keeps all ``d**2`` operators. Reports come back decodable
    first, each group in enumeration order. Enumeration stops after ``budget``
    plans; the result is then marked truncated.
    """
    d = shape.d
    if not 1 <= subset_size <= d * d:
        raise LabelError(f"subset size {subset_size} out of range [1, {d * d}]")
    full = weyl_labels(d)
    restricted = shape.senders - 1
    candidates = math.comb(d * d, subset_size) ** restricted
    subsets = list(itertools.combinations(full, subset_size))
    choices = itertools.product(subsets, repeat=restricted)
    reports = []
    for combo in itertools.islice(choices, budget):
        plan = make_plan(shape, [full, *combo])
        reports.append(verify_plan(plan, numeric=numeric))
    ordered = [r for r in reports if r.decodable] + [r for r in reports if not r.decodable]
    return PlanSearch(shape, subset_size, ordered, candidates, len(reports))
