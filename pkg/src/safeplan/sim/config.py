"""Tunable simulator parameters."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ValidationError


@dataclass(frozen=True)
class SimConfig:
    grasp_radius: float = 0.5          # meters the robot can reach from its position
    splash_radius: float = 0.5         # liquid splash danger zone
    ignition_radius: float = 0.8       # open-flame / heat danger zone
    visibility_radius: float = 2.0     # how far get_visible_obj_names sees
    arm_cost_scale: float = 1.0        # scales the 100-per-degree arm cost
    default_hot_expiry_s: float = 1800.0  # cooling time when a task gives none

    def validate(self) -> None:
        for name in ("grasp_radius", "splash_radius", "ignition_radius",
                     "visibility_radius"):
            if getattr(self, name) <= 0:
                raise ValidationError(f"{name} must be > 0")
        if self.arm_cost_scale <= 0:
            raise ValidationError("arm_cost_scale must be > 0")
        if self.default_hot_expiry_s < 0:
            raise ValidationError("default_hot_expiry_s must be >= 0")


CONFIG_FILE_KEYS = ("grasp_radius", "splash_radius", "ignition_radius",
                    "visibility_radius", "arm_cost_scale", "default_hot_expiry_s")
