"""World simulator: action semantics, hazard detection, cost accounting."""

from .config import SimConfig
from .state import WorldState, RobotState
from .trace import ActionEvent, HazardEvent, HelpEvent, ErrorEvent, CostLedger, RunTrace
from .session import SimSession, run_plan, run_plan_source

__all__ = [
    "SimConfig", "WorldState", "RobotState",
    "ActionEvent", "HazardEvent", "HelpEvent", "ErrorEvent",
    "CostLedger", "RunTrace",
    "SimSession", "run_plan", "run_plan_source",
]
