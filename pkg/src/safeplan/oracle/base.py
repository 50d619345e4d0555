"""Request/response types shared by every oracle backend."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import TemplateError

ROLES = ("generate_scenario", "generate_plan", "inspect", "reflect")

# Slots each role must carry.
REQUIRED_SLOTS = {
    "generate_scenario": ("history",),
    "generate_plan": ("scene", "instruction", "cognition"),
    "inspect": ("scene", "instruction", "plan"),
    "reflect": ("cognition", "consequence"),
}

# Returned by generate_scenario when nothing new can be produced.
NO_SCENARIO_SENTINEL = "NO NOVEL SCENARIO"


@dataclass(frozen=True)
class OracleRequest:
    role: str
    template_id: str
    slots: dict[str, str] = field(default_factory=dict)
    seed: int = 0

    def require_slots(self) -> None:
        missing = [name for name in REQUIRED_SLOTS.get(self.role, ())
                   if name not in self.slots]
        if missing:
            raise TemplateError(
                f"role {self.role!r} is missing slot(s) {', '.join(missing)}")


@dataclass
class OracleResponse:
    text: str
    provider: str  # "http" | "mock" | "cache"
    latency_ms: int = 0
