"""Mutable world state for one simulation run."""

from __future__ import annotations

import copy
from dataclasses import dataclass, field

from ..scene import LocationSpec, ObjectSpec, TaskSpec, Vec


@dataclass
class RobotState:
    position: Vec
    held: str | None = None
    arm_tilt: float = 0.0


@dataclass
class PourEvent:
    position: Vec
    source_id: str
    time: float


@dataclass
class WorldState:
    clock: float
    robot: RobotState
    objects: dict[str, ObjectSpec]
    locations: dict[str, LocationSpec]
    pour_events: list[PourEvent] = field(default_factory=list)

    @classmethod
    def from_task(cls, task: TaskSpec, default_hot_expiry_s: float) -> "WorldState":
        objects = {obj.id: copy.deepcopy(obj) for obj in task.objects}
        for obj in objects.values():
            hot = obj.attributes.hot
            if hot is not None and hot.until_time is None:
                hot.until_time = default_hot_expiry_s
        locations = {loc.id: copy.deepcopy(loc) for loc in task.locations}
        return cls(clock=0.0, robot=RobotState(position=task.robot_start),
                   objects=objects, locations=locations)

    def held_object(self) -> ObjectSpec | None:
        if self.robot.held is None:
            return None
        return self.objects[self.robot.held]

    def move_robot(self, position: Vec) -> None:
        """Held objects ride along with the robot."""
        self.robot.position = position
        held = self.held_object()
        if held is not None:
            held.position = position

    def clear_expired_hot(self) -> list[str]:
        cleared = []
        for obj in self.objects.values():
            hot = obj.attributes.hot
            if hot is not None and hot.until_time is not None \
                    and hot.until_time <= self.clock:
                obj.attributes.hot = None
                cleared.append(obj.id)
        return cleared

    def remove_from_enclosures(self, object_id: str) -> None:
        for obj in self.objects.values():
            enc = obj.attributes.enclosure
            if enc is not None and object_id in enc.contains:
                enc.contains.remove(object_id)

    def enclosing(self, object_id: str) -> ObjectSpec | None:
        for obj in self.objects.values():
            enc = obj.attributes.enclosure
            if enc is not None and object_id in enc.contains:
                return obj
        return None
