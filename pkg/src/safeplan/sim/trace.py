"""Run traces: the ordered event log, the cost ledger, and JSONL I/O.

The JSON Lines layout is part of the external contract and must stay
byte-stable: every event line is ``{"type": "event", ...}`` with the
fields in the documented order, and each run ends with one
``{"type": "summary", ...}`` line carrying task_id, category, safe,
success, cost, help_called, seed, and run index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..dsl.interpreter import Position
from ..errors import IoError, ParseError
from .state import WorldState

PENALTY_COST = 10_000.0


@dataclass
class ActionEvent:
    seq: int
    name: str
    args: list
    cost: float


@dataclass
class HazardEvent:
    seq: int
    tag: str
    category: str
    time: float
    involved: list[str]


@dataclass
class HelpEvent:
    seq: int
    time: float


@dataclass
class ErrorEvent:
    seq: int
    kind: str
    time: float
    message: str = ""


Event = ActionEvent | HazardEvent | HelpEvent | ErrorEvent


@dataclass
class LedgerItem:
    event_seq: int
    rule: str
    amount: float


@dataclass
class CostLedger:
    items: list[LedgerItem] = field(default_factory=list)
    raw_total: float = 0.0
    final_total: float = 0.0

    def add(self, event_seq: int, rule: str, amount: float) -> None:
        self.items.append(LedgerItem(event_seq, rule, amount))
        self.raw_total += amount

    def finalize(self, penalized: bool) -> None:
        self.final_total = PENALTY_COST if penalized else self.raw_total


@dataclass
class RunTrace:
    task_id: str
    category: str
    events: list[Event]
    ledger: CostLedger
    final_state: WorldState
    hazard_occurred: bool = False
    help_called: bool = False
    goal_met: bool = False
    runtime_error: bool = False
    seed: int = 0
    run_index: int = 0

    @property
    def hazard_tags(self) -> list[str]:
        return [e.tag for e in self.events if isinstance(e, HazardEvent)]


def _json_value(value):
    if isinstance(value, Position):
        return [value[0], value[1]]
    if isinstance(value, list):
        return [_json_value(v) for v in value]
    return value


def event_to_dict(trace: RunTrace, event: Event) -> dict:
    head = {"type": "event", "task_id": trace.task_id, "run": trace.run_index,
            "seq": event.seq}
    if isinstance(event, ActionEvent):
        head.update(event="action", name=event.name,
                    args=[_json_value(a) for a in event.args], cost=event.cost)
    elif isinstance(event, HazardEvent):
        head.update(event="hazard", tag=event.tag, category=event.category,
                    time=event.time, involved=list(event.involved))
    elif isinstance(event, HelpEvent):
        head.update(event="help", time=event.time)
    else:
        head.update(event="error", kind=event.kind, time=event.time,
                    message=event.message)
    return head


def summary_to_dict(trace: RunTrace, safe: bool, success: bool) -> dict:
    return {
        "type": "summary",
        "task_id": trace.task_id,
        "category": trace.category,
        "safe": safe,
        "success": success,
        "cost": trace.ledger.final_total,
        "help_called": trace.help_called,
        "seed": trace.seed,
        "run": trace.run_index,
    }


def dump_jsonl_line(obj: dict) -> str:
    return json.dumps(obj, separators=(", ", ": "), ensure_ascii=False)


def write_traces(path: str | Path, lines: list[dict]) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            for obj in lines:
                fh.write(dump_jsonl_line(obj) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from None


def read_summaries(path: str | Path) -> list[dict]:
    """The summary lines of a trace file, in file order."""
    summaries = []
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise ParseError(f"{path}:{lineno}: bad JSON: {exc}") from None
                if obj.get("type") == "summary":
                    summaries.append(obj)
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from None
    return summaries


def read_events(path: str | Path) -> list[dict]:
    events = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                obj = json.loads(line)
                if obj.get("type") == "event":
                    events.append(obj)
    return events
