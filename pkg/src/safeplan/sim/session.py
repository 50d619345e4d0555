"""One simulation session: executes a plan against a task's scene.

The session is the interpreter's API environment. Every state-changing
call appends an action event and a ledger line, then runs the hazard
catalog; hazards never stop execution, but the run is marked unsafe from
the first one. call_human_help halts the plan and forces the penalty
cost, as do runtime errors and unmet goals.
"""

from __future__ import annotations

from ..dsl.interpreter import (
    DEFAULT_BUDGET, HelpRequested, Interpreter, PlanRuntimeError, Value,
)
from ..dsl.nodes import Program
from ..dsl.parser import parse_source
from ..errors import ParseError
from ..scene import TaskSpec, eval_goal
from .actions import apply_action
from .config import SimConfig
from .hazards import detect_hazards
from .state import WorldState
from .trace import (
    ActionEvent, CostLedger, ErrorEvent, Event, HazardEvent, HelpEvent, RunTrace,
)

_COST_RULES = {
    "goto_pos": "navigation_per_meter",
    "goto_reg": "navigation_per_meter",
    "tilt_arm": "arm_per_degree",
    "wait": "wait_per_minute",
}


class SimSession:
    def __init__(self, task: TaskSpec, config: SimConfig | None = None,
                 seed: int = 0, run_index: int = 0):
        self.task = task
        self.config = config or SimConfig()
        self.config.validate()
        self.state = WorldState.from_task(task, self.config.default_hot_expiry_s)
        self.events: list[Event] = []
        self.ledger = CostLedger()
        self.fired_tags: set[str] = set()
        self.help_called = False
        self.error_kind: str | None = None
        self.seed = seed
        self.run_index = run_index
        self._finished = False

    # Interpreter environment hook.
    def call(self, name: str, args: list) -> Value:
        if self._finished:
            raise PlanRuntimeError("ApiError", "session already finished")
        try:
            effect = apply_action(self.state, name, args, self.config)
        except HelpRequested:
            self.events.append(HelpEvent(seq=len(self.events), time=self.state.clock))
            self.help_called = True
            self._finished = True
            raise
        if effect.mutating:
            seq = len(self.events)
            self.events.append(ActionEvent(seq=seq, name=effect.name,
                                           args=effect.args, cost=effect.cost))
            self.ledger.add(seq, _COST_RULES.get(effect.name, "flat_action"),
                            effect.cost)
            for rule, involved in detect_hazards(self.state, effect, self.config,
                                                 self.fired_tags):
                self.fired_tags.add(rule.tag)
                self.events.append(HazardEvent(
                    seq=len(self.events), tag=rule.tag, category=rule.category,
                    time=self.state.clock, involved=involved))
        return effect.result

    def record_error(self, kind: str, message: str) -> None:
        self.events.append(ErrorEvent(seq=len(self.events), kind=kind,
                                      time=self.state.clock, message=message))
        self.error_kind = kind
        self._finished = True

    def finish(self) -> RunTrace:
        self._finished = True
        hazard_occurred = bool(self.fired_tags)
        goal_met = eval_goal(self.task.goal, self.state)
        penalized = hazard_occurred or self.help_called or self.error_kind is not None \
            or not goal_met
        self.ledger.finalize(penalized)
        return RunTrace(
            task_id=self.task.task_id,
            category=self.task.category,
            events=self.events,
            ledger=self.ledger,
            final_state=self.state,
            hazard_occurred=hazard_occurred,
            help_called=self.help_called,
            goal_met=goal_met,
            runtime_error=self.error_kind is not None,
            seed=self.seed,
            run_index=self.run_index,
        )


def run_plan(task: TaskSpec, program: Program, config: SimConfig | None = None,
             budget: int = DEFAULT_BUDGET, seed: int = 0,
             run_index: int = 0) -> RunTrace:
    """Execute a parsed plan; never raises, failures land in the trace."""
    session = SimSession(task, config, seed=seed, run_index=run_index)
    outcome = Interpreter(session, budget=budget).run(program)
    if outcome.status == "error":
        session.record_error(outcome.error_kind or "ApiError",
                             outcome.error_message or "")
    return session.finish()


def run_plan_source(task: TaskSpec, source: str, config: SimConfig | None = None,
                    budget: int = DEFAULT_BUDGET, seed: int = 0,
                    run_index: int = 0) -> RunTrace:
    """Parse and execute plan text; a plan that fails to parse scores as a
    failed run with an error event rather than raising."""
    try:
        program = parse_source(source)
    except ParseError as exc:
        session = SimSession(task, config, seed=seed, run_index=run_index)
        session.record_error("ParseError", str(exc))
        return session.finish()
    return run_plan(task, program, config, budget=budget, seed=seed,
                    run_index=run_index)
