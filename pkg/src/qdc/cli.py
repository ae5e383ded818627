"""Command-line front end: ``qdc <command> [--dim D] [--parties P] ...``.

Exit codes: 0 success (for ``verify``: plan decodable), 1 usage or parse
error, 2 dimension cap or budget exceeded, 3 ``verify`` found collisions.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from .bell import BellLabel, enumerate_basis
from .core import DEFAULT_CAP, PureState, RegisterShape, ket_string
from .decodability import (
    DEFAULT_MESSAGE_BUDGET,
    DecodabilityReport,
    search_restricted_plans,
    transformation_table,
    verify_plan,
)
from .errors import BudgetExceeded, CapExceeded, QdcError
from .protocol import (
    ProtocolTranscript,
    SenderPlan,
    born_sample,
    canonical_plan,
    capacity_bits,
    make_plan,
    roundtrip,
)
from .weyl import WeylLabel, weyl_labels, weyl_unitary

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_NOT_DECODABLE = 3

DEFAULT_SEARCH_BUDGET = 10_000
FORMATS = ("json", "csv", "markdown")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    dim: int
    parties: int
    seed: int | None = None
    output_format: str = "json"
    dimension_cap: int = DEFAULT_CAP
    budget: int | None = None
    numeric_oracle: bool = False

    def shape(self) -> RegisterShape:
        return RegisterShape(self.dim, self.parties, cap=self.dimension_cap)


def default_cap() -> int:
    raw = os.environ.get("QDC_DIM_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"QDC_DIM_CAP must be an integer, got {raw!r}") from None


# -- number and label formatting ---------------------------------------------


def num(x: float) -> float:
    """Round to 12 decimals; never emit ``-0.0``."""
    v = round(float(x), 12)
    return 0.0 if v == 0 else v


def amplitude_rows(state: PureState) -> list[list]:
    d = state.shape.d
    return [[ket_string(digits, d), num(a.real), num(a.imag)] for digits, a in state.nonzero(1e-13)]


def psi_name(label: BellLabel, d: int) -> str:
    return f"Psi^{label.n}_{{{ket_string(label.shifts, d)}}}"


def label_json(label: BellLabel) -> dict:
    return {"n": label.n, "shifts": list(label.shifts)}


def message_json(message: Sequence[WeylLabel]) -> list[list[int]]:
    return [[x.n, x.m] for x in message]


def plan_json(plan: SenderPlan) -> dict:
    return {
        "dim": plan.shape.d,
        "parties": plan.shape.parties,
        "total_messages": plan.total_messages,
        "senders": [
            {"sender": k, "particle": k + 1, "allowed": message_json(labels)}
            for k, labels in enumerate(plan.ordered(), start=1)
        ],
    }


def dump_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True) + "\n"


def dump_csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\r\n")
    writer.writerows(rows)
    return buf.getvalue()


def dump_markdown(header: Sequence, rows: Sequence[Sequence]) -> str:
    lines = ["| " + " | ".join(str(h) for h in header) + " |"]
    lines.append("|" + "|".join("---" for _ in header) + "|")
    for row in rows:
        lines.append("| " + " | ".join(str(c) for c in row) + " |")
    return "\n".join(lines) + "\n"


# -- plan and message parsing --------------------------------------------------


def parse_label(token: str, d: int, where: int = 0) -> WeylLabel:
    """``"12" -> U(1, 2)``; ``"n.m"`` is also accepted (required when d > 10)."""
    tok = token.strip()
    if "." in tok:
        parts = tok.split(".")
    elif len(tok) == 2 and tok.isdigit():
        parts = [tok[0], tok[1]]
    else:
        raise UsageError(f"bad operator label {token!r} at position {where}")
    try:
        n, m = (int(p) for p in parts)
    except ValueError:
        raise UsageError(f"bad operator label {token!r} at position {where}") from None
    if not (0 <= n < d and 0 <= m < d):
        raise UsageError(f"operator label {token!r} at position {where} out of range for d={d}")
    return WeylLabel(n, m)


def parse_plan(text: str, shape: RegisterShape) -> SenderPlan:
    """Parse ``"B:all;C:00,01,02"``: one ``NAME:all`` or ``NAME:nm,nm,...``
    clause per sender, separated by ``;``."""
    senders = []
    pos = 0
    for clause in text.split(";"):
        start = pos
        pos += len(clause) + 1
        if ":" not in clause:
            raise UsageError(f"plan clause {clause!r} at position {start} lacks ':'")
        name, body = clause.split(":", 1)
        if not name.strip():
            raise UsageError(f"plan clause at position {start} has no sender name")
        body_pos = start + len(name) + 1
        if body.strip() == "all":
            senders.append(weyl_labels(shape.d))
            continue
        labels = []
        offset = body_pos
        for token in body.split(","):
            if not token.strip():
                raise UsageError(f"empty operator label at position {offset}")
            labels.append(parse_label(token, shape.d, offset))
            offset += len(token) + 1
        senders.append(labels)
    if len(senders) != shape.senders:
        raise UsageError(
            f"plan names {len(senders)} senders but {shape.parties} parties need {shape.senders}"
        )
    try:
        return make_plan(shape, senders)
    except QdcError as exc:
        raise UsageError(str(exc)) from None


def parse_message(text: str, d: int) -> list[WeylLabel]:
    """Either JSON (``[[1,1],[0,2]]``) or comma-separated labels (``11,02``)."""
    text = text.strip()
    if text.startswith("["):
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"message is not valid JSON: {exc}") from None
        if not isinstance(raw, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p)
            for p in raw
        ):
            raise UsageError("message must be a list of [n, m] integer pairs")
        return [WeylLabel(n, m) for n, m in raw]
    out = []
    offset = 0
    for token in text.split(","):
        out.append(parse_label(token, d, offset))
        offset += len(token) + 1
    return out


# -- commands -------------------------------------------------------------------


def cmd_basis(config: RunConfig) -> str:
    shape = config.shape()
    d = shape.d
    basis = enumerate_basis(shape)
    if config.output_format == "json":
        return dump_json(
            {
                "dim": d,
                "parties": shape.parties,
                "states": [
                    {"label": label_json(label), "name": psi_name(label, d), "amplitudes": amplitude_rows(state)}
                    for label, state in basis
                ],
            }
        )
    rows = [
        [psi_name(label, d), ket, re, im]
        for label, state in basis
        for ket, re, im in amplitude_rows(state)
    ]
    header = ["state", "ket", "re", "im"]
    if config.output_format == "csv":
        return dump_csv([header, *rows])
    return dump_markdown(header, rows)


def cmd_ops(config: RunConfig) -> str:
    d = config.dim
    ops = []
    for label in weyl_labels(d):
        u = weyl_unitary(d, label).entries
        entries = [
            [r, c, num(u[r, c].real), num(u[r, c].imag)]
            for r in range(d)
            for c in range(d)
            if abs(u[r, c]) > 1e-13
        ]
        ops.append((label, entries))
    if config.output_format == "json":
        return dump_json(
            {
                "dim": d,
                "operators": [
                    {"label": [x.n, x.m], "name": x.tag(d), "entries": entries} for x, entries in ops
                ],
            }
        )
    header = ["operator", "row", "col", "re", "im"]
    rows = [[x.tag(d), *e] for x, entries in ops for e in entries]
    if config.output_format == "csv":
        return dump_csv([header, *rows])
    return dump_markdown(header, rows)


def cmd_table(config: RunConfig) -> str:
    if config.parties != 3:
        raise UsageError("the transformation table is defined for --parties 3 only")
    config.shape()
    d = config.dim
    table = transformation_table(d)
    heads = [x.tag(d) for x in table.labels]
    body = [[psi_name(cell, d) for cell in row] for row in table.cells]
    if config.output_format == "json":
        return dump_json(
            {
                "dim": d,
                "columns": heads,
                "rows": [{"label": h, "cells": cells} for h, cells in zip(heads, body)],
            }
        )
    rows = [[h, *cells] for h, cells in zip(heads, body)]
    if config.output_format == "csv":
        return dump_csv([["", *heads], *rows])
    return dump_markdown(["", *heads], rows)


def transcript_json(t: ProtocolTranscript, sample: BellLabel | None = None) -> dict:
    out = {
        "plan": plan_json(t.plan),
        "message": message_json(t.message),
        "encoded_state": amplitude_rows(t.encoded_state),
        "decoded_label": label_json(t.decoded_label),
        "decoded_name": psi_name(t.decoded_label, t.plan.shape.d),
        "fidelity": num(t.fidelity),
        "decoded_message": message_json(t.decoded_message),
        "match": t.match,
    }
    if sample is not None:
        out["born_sample"] = label_json(sample)
    return out


def cmd_roundtrip(config: RunConfig, message: Sequence[WeylLabel]) -> str:
    plan = canonical_plan(config.shape())
    try:
        plan.check(message)
    except QdcError as exc:
        raise UsageError(str(exc)) from None
    t = roundtrip(plan, message)
    sample = born_sample(t.encoded_state, config.seed) if config.seed is not None else None
    return dump_json(transcript_json(t, sample))


def report_json(report: DecodabilityReport) -> dict:
    return {
        "plan": plan_json(report.plan),
        "path": "numeric" if report.numeric else "analytic",
        "total_messages": report.total_messages,
        "distinct_labels": report.distinct_labels,
        "decodable": report.decodable,
        "collision_count": report.collision_count,
        "witnesses_truncated": report.witnesses_truncated,
        "collisions": [
            {"first": message_json(a), "second": message_json(b), "label": label_json(lab)}
            for a, b, lab in report.collisions
        ],
    }


def cmd_verify(config: RunConfig, plan_spec: str) -> tuple[str, int]:
    plan = parse_plan(plan_spec, config.shape())
    budget = config.budget if config.budget is not None else DEFAULT_MESSAGE_BUDGET
    try:
        report = verify_plan(plan, numeric=config.numeric_oracle, budget=budget)
    except BudgetExceeded as exc:
        body = {"plan": plan_json(plan), "budget_exceeded": True, "error": str(exc)}
        return dump_json(body), EXIT_RESOURCE
    code = EXIT_OK if report.decodable else EXIT_NOT_DECODABLE
    return dump_json(report_json(report)), code


def cmd_search(config: RunConfig, subset_size: int | None) -> tuple[str, int]:
    shape = config.shape()
    size = subset_size if subset_size is not None else shape.d
    budget = config.budget if config.budget is not None else DEFAULT_SEARCH_BUDGET
    try:
        result = search_restricted_plans(shape, size, budget, numeric=config.numeric_oracle)
    except QdcError as exc:
        raise UsageError(str(exc)) from None
    body = {
        "dim": shape.d,
        "parties": shape.parties,
        "subset_size": size,
        "candidates": result.candidates,
        "examined": result.examined,
        "truncated": result.truncated,
        "decodable_count": len(result.decodable),
        "plans": [
            {
                "restricted": [message_json(s) for s in r.plan.ordered()[1:]],
                "decodable": r.decodable,
                "total_messages": r.total_messages,
                "distinct_labels": r.distinct_labels,
            }
            for r in result.reports
        ],
    }
    return dump_json(body), EXIT_RESOURCE if result.truncated else EXIT_OK


def cmd_capacity(config: RunConfig) -> str:
    bits = capacity_bits(config.dim, config.parties)
    messages = canonical_plan(config.shape()).total_messages
    if config.output_format == "json":
        return dump_json({"dim": config.dim, "parties": config.parties, "bits": bits, "messages": messages})
    header = ["dim", "parties", "bits", "messages"]
    row = [config.dim, config.parties, repr(bits), messages]
    if config.output_format == "csv":
        return dump_csv([header, row])
    return dump_markdown(header, [row])


# -- argument handling ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--dim", "-d", type=int, default=3, help="local dimension d (default 3)")
    common.add_argument(
        "--parties", "-p", type=int, default=None, help="number of qudits N+1 (default 2; 3 for table)"
    )
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--format", dest="output_format", choices=FORMATS, default=None)
    common.add_argument("--cap", type=int, default=None, help="max total dimension d**parties")
    common.add_argument("--budget", type=int, default=None, help="enumeration budget for verify/search")
    common.add_argument("--numeric-oracle", action="store_true", help="decode by state-vector simulation")

    parser = _Parser(prog="qdc", description="Multi-party qudit dense coding toolkit.")
    parser.add_argument("--version", action="version", version=f"qdc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("basis", parents=[common], help="list the generalized Bell basis")
    sub.add_parser("ops", parents=[common], help="list the d*d phase-and-shift operators")
    sub.add_parser("table", parents=[common], help="operator-pair transformation table (3 parties)")
    rt = sub.add_parser("roundtrip", parents=[common], help="encode and decode one message")
    rt.add_argument("--message", "-m", required=True, help='e.g. "[[1,1],[0,2]]" or "11,02"')
    vf = sub.add_parser("verify", parents=[common], help="check a sender plan for decodability")
    vf.add_argument("--plan", required=True, help='e.g. "B:all;C:00,01,02"')
    sr = sub.add_parser("search", parents=[common], help="search restricted sender subsets")
    sr.add_argument("--size", type=int, default=None, help="subset size per restricted sender (default d)")
    sub.add_parser("capacity", parents=[common], help="bits per round of the canonical scheme")
    return parser


def config_from_args(args) -> RunConfig:
    parties = args.parties
    if parties is None:
        parties = 3 if args.command == "table" else 2
    return RunConfig(
        dim=args.dim,
        parties=parties,
        seed=args.seed,
        output_format=args.output_format or ("markdown" if args.command == "table" else "json"),
        dimension_cap=args.cap if args.cap is not None else default_cap(),
        budget=args.budget,
        numeric_oracle=args.numeric_oracle,
    )


def run(argv: Sequence[str] | None = None) -> tuple[str, int]:
    """Execute one command; return ``(stdout_text, exit_code)``.

    Errors that map to exit codes 1 and 2 propagate as UsageError /
    CapExceeded / BudgetExceeded for :func:`main` to report.
    """
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    if config.dim < 1 or config.parties < 2:
        raise UsageError("need --dim >= 1 and --parties >= 2")
    if args.command == "basis":
        return cmd_basis(config), EXIT_OK
    if args.command == "ops":
        return cmd_ops(config), EXIT_OK
    if args.command == "table":
        return cmd_table(config), EXIT_OK
    if args.command == "roundtrip":
        return cmd_roundtrip(config, parse_message(args.message, config.dim)), EXIT_OK
    if args.command == "verify":
        return cmd_verify(config, args.plan)
    if args.command == "search":
        return cmd_search(config, args.size)
    return cmd_capacity(config), EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    try:
        text, code = run(argv)
    except UsageError as exc:
        print(f"qdc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, BudgetExceeded) as exc:
        print(f"qdc: error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except QdcError as exc:
        print(f"qdc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
