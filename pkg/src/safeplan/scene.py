"""Scene and task data model.

A task file describes one household scene (objects with physical
attributes, named locations, a robot start pose), a natural-language
instruction, a goal predicate, and ground-truth hazard annotations.
Tasks are immutable after loading; the simulator works on copies.
"""

from __future__ import annotations

import copy
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, ValidationError

CATEGORIES = ("Electrical", "FireChemical", "Human")

Vec = tuple[float, float]


def dist(a: Vec, b: Vec) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


# --- object attributes ----------------------------------------------------

@dataclass
class LiquidContainer:
    filled: bool = False


@dataclass
class Powered:
    on: bool = False


@dataclass
class Flame:
    lit: bool = False


@dataclass
class Hot:
    # Absolute expiry in simulation seconds; None means "use the
    # configured default cooling time".
    until_time: float | None = None


@dataclass
class Human:
    child: bool = False


@dataclass
class Enclosure:
    open: bool = False
    contains: list[str] = field(default_factory=list)


@dataclass
class Chemical:
    hazardous: bool = False
    sealed: bool = False


@dataclass
class Heater:
    on: bool = False


@dataclass
class Microwave:
    on: bool = False


@dataclass
class AttributeSet:
    liquid_container: LiquidContainer | None = None
    powered: Powered | None = None
    electronic: bool = False
    flame: Flame | None = None
    flammable: bool = False
    hot: Hot | None = None
    sharp: bool = False
    human: Human | None = None
    enclosure: Enclosure | None = None
    metal: bool = False
    chemical: Chemical | None = None
    heater: Heater | None = None
    microwave: Microwave | None = None
    ignitable: bool = False

    def is_hot(self, clock: float) -> bool:
        """Hot only until the expiry time; expiry None is resolved by the simulator."""
        if self.hot is None:
            return False
        return self.hot.until_time is None or self.hot.until_time > clock

    def is_lit(self) -> bool:
        return self.flame is not None and self.flame.lit


_FLAG_ATTRS = ("electronic", "flammable", "sharp", "metal", "ignitable")
_STRUCT_ATTRS = {
    "liquid_container": (LiquidContainer, {"filled": bool}),
    "powered": (Powered, {"on": bool}),
    "flame": (Flame, {"lit": bool}),
    "hot": (Hot, {"until_time": (int, float, type(None))}),
    "human": (Human, {"child": bool}),
    "enclosure": (Enclosure, {"open": bool, "contains": list}),
    "chemical": (Chemical, {"hazardous": bool, "sealed": bool}),
    "heater": (Heater, {"on": bool}),
    "microwave": (Microwave, {"on": bool}),
}
ATTRIBUTE_NAMES = set(_FLAG_ATTRS) | set(_STRUCT_ATTRS)


def attrs_from_dict(raw: dict) -> AttributeSet:
    """Parse the ``attrs`` object of a task file. Unknown names are rejected,
    not ignored: a typo here would silently disable hazard detection."""
    attrs = AttributeSet()
    for name, value in raw.items():
        if name in _FLAG_ATTRS:
            if not isinstance(value, bool):
                raise ValidationError(f"attribute {name!r} must be a boolean")
            setattr(attrs, name, value)
        elif name in _STRUCT_ATTRS:
            cls, fields = _STRUCT_ATTRS[name]
            if not isinstance(value, dict):
                raise ValidationError(f"attribute {name!r} must be an object")
            unknown = set(value) - set(fields)
            if unknown:
                raise ValidationError(f"attribute {name!r} has unknown keys {sorted(unknown)}")
            kwargs = {}
            for key, val in value.items():
                expected = fields[key]
                if expected is bool and not isinstance(val, bool):
                    raise ValidationError(f"attribute {name}.{key} must be a boolean")
                if not isinstance(val, expected):
                    raise ValidationError(f"attribute {name}.{key} has the wrong type")
                if expected is list and not all(isinstance(item, str) for item in val):
                    raise ValidationError(f"attribute {name}.{key} must list object ids")
                if isinstance(val, (int, float)) and not isinstance(val, bool):
                    val = float(val)
                kwargs[key] = val
            setattr(attrs, name, cls(**kwargs))
        else:
            raise ValidationError(f"unknown attribute {name!r}")
    return attrs


def attrs_to_dict(attrs: AttributeSet) -> dict:
    out: dict = {}
    for name in _FLAG_ATTRS:
        if getattr(attrs, name):
            out[name] = True
    for name, (cls, fields) in _STRUCT_ATTRS.items():
        sub = getattr(attrs, name)
        if sub is None:
            continue
        out[name] = {key: getattr(sub, key) for key in fields if getattr(sub, key) is not None}
    return out


# --- scene entities -------------------------------------------------------

@dataclass
class ObjectSpec:
    id: str
    display_name: str
    position: Vec
    attributes: AttributeSet = field(default_factory=AttributeSet)
    reach_radius: float | None = None


@dataclass
class LocationSpec:
    id: str
    position: Vec
    region_tag: str | None = None


# --- goal predicates ------------------------------------------------------

@dataclass
class ObjectAt:
    object_id: str
    location_id: str
    tolerance: float


@dataclass
class PouredAt:
    location_id: str
    tolerance: float


@dataclass
class AttrIs:
    object_id: str
    attr: str
    value: bool


@dataclass
class Held:
    object_id: str


@dataclass
class AllOf:
    items: list


@dataclass
class AnyOf:
    items: list


GoalPredicate = ObjectAt | PouredAt | AttrIs | Held | AllOf | AnyOf

# Attribute names that attr_is goals and the plan APIs may query.
QUERYABLE_ATTRS = ("filled", "on", "lit", "open", "sealed", "hot")


def goal_from_dict(raw: dict) -> GoalPredicate:
    kind = raw.get("kind")
    if kind == "object_at":
        return ObjectAt(raw["object"], raw["location"], float(raw["tolerance"]))
    if kind == "poured_at":
        return PouredAt(raw["location"], float(raw["tolerance"]))
    if kind == "attr_is":
        if raw["attr"] not in QUERYABLE_ATTRS:
            raise ValidationError(f"goal attr {raw['attr']!r} is not queryable")
        return AttrIs(raw["object"], raw["attr"], bool(raw["value"]))
    if kind == "held":
        return Held(raw["object"])
    if kind == "all_of":
        return AllOf([goal_from_dict(item) for item in raw["items"]])
    if kind == "any_of":
        return AnyOf([goal_from_dict(item) for item in raw["items"]])
    raise ValidationError(f"unknown goal kind {kind!r}")


def goal_to_dict(goal: GoalPredicate) -> dict:
    if isinstance(goal, ObjectAt):
        return {"kind": "object_at", "object": goal.object_id,
                "location": goal.location_id, "tolerance": goal.tolerance}
    if isinstance(goal, PouredAt):
        return {"kind": "poured_at", "location": goal.location_id, "tolerance": goal.tolerance}
    if isinstance(goal, AttrIs):
        return {"kind": "attr_is", "object": goal.object_id, "attr": goal.attr, "value": goal.value}
    if isinstance(goal, Held):
        return {"kind": "held", "object": goal.object_id}
    if isinstance(goal, AllOf):
        return {"kind": "all_of", "items": [goal_to_dict(g) for g in goal.items]}
    if isinstance(goal, AnyOf):
        return {"kind": "any_of", "items": [goal_to_dict(g) for g in goal.items]}
    raise TypeError(f"not a goal: {goal!r}")


def _goal_ids(goal: GoalPredicate) -> tuple[set[str], set[str]]:
    """(object ids, location ids) referenced by a goal tree."""
    objs: set[str] = set()
    locs: set[str] = set()
    stack = [goal]
    while stack:
        g = stack.pop()
        if isinstance(g, ObjectAt):
            objs.add(g.object_id)
            locs.add(g.location_id)
        elif isinstance(g, PouredAt):
            locs.add(g.location_id)
        elif isinstance(g, (AttrIs, Held)):
            objs.add(g.object_id)
        elif isinstance(g, (AllOf, AnyOf)):
            stack.extend(g.items)
    return objs, locs


# --- task -----------------------------------------------------------------

@dataclass
class TaskSpec:
    task_id: str
    category: str
    instruction: str
    robot_start: Vec
    objects: list[ObjectSpec]
    locations: list[LocationSpec]
    goal: GoalPredicate
    hazard_tags: list[str] = field(default_factory=list)

    def object_by_id(self, object_id: str) -> ObjectSpec | None:
        for obj in self.objects:
            if obj.id == object_id:
                return obj
        return None

    def location_by_id(self, location_id: str) -> LocationSpec | None:
        for loc in self.locations:
            if loc.id == location_id:
                return loc
        return None

    def copy(self) -> "TaskSpec":
        return copy.deepcopy(self)


def _parse_vec(raw, what: str) -> Vec:
    if not (isinstance(raw, list) and len(raw) == 2):
        raise ValidationError(f"{what} must be a [x, y] pair")
    x, y = float(raw[0]), float(raw[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValidationError(f"{what} must be finite")
    return (x, y)


def task_from_dict(raw: dict) -> TaskSpec:
    try:
        task_id = raw["task_id"]
        category = raw["category"]
        instruction = raw["instruction"]
        robot_start = _parse_vec(raw["robot_start"], "robot_start")
        raw_objects = raw["objects"]
        raw_locations = raw["locations"]
        goal = goal_from_dict(raw["goal"])
        hazard_tags = list(raw.get("hazard_tags", []))
    except KeyError as exc:
        raise ValidationError(f"task file missing key {exc}") from None

    if category not in CATEGORIES:
        raise ValidationError(f"unknown category {category!r}")

    objects = []
    for entry in raw_objects:
        obj = ObjectSpec(
            id=entry["id"],
            display_name=entry.get("name", entry["id"]),
            position=_parse_vec(entry["pos"], f"object {entry['id']!r} pos"),
            attributes=attrs_from_dict(entry.get("attrs", {})),
            reach_radius=float(entry["reach_radius"]) if "reach_radius" in entry else None,
        )
        objects.append(obj)
    locations = [
        LocationSpec(
            id=entry["id"],
            position=_parse_vec(entry["pos"], f"location {entry['id']!r} pos"),
            region_tag=entry.get("region"),
        )
        for entry in raw_locations
    ]

    task = TaskSpec(task_id, category, instruction, robot_start,
                    objects, locations, goal, hazard_tags)
    validate_task(task)
    return task


def validate_task(task: TaskSpec) -> None:
    object_ids = [o.id for o in task.objects]
    location_ids = [l.id for l in task.locations]
    if len(set(object_ids)) != len(object_ids):
        raise ValidationError(f"duplicate object ids in {task.task_id!r}")
    if len(set(location_ids)) != len(location_ids):
        raise ValidationError(f"duplicate location ids in {task.task_id!r}")
    overlap = set(object_ids) & set(location_ids)
    if overlap:
        raise ValidationError(f"ids used for both objects and locations: {sorted(overlap)}")

    for obj in task.objects:
        if obj.attributes.human is not None:
            if obj.reach_radius is None or obj.reach_radius <= 0:
                raise ValidationError(f"human object {obj.id!r} needs reach_radius > 0")
        elif obj.reach_radius is not None:
            raise ValidationError(f"object {obj.id!r} has reach_radius but is not human")
        if obj.attributes.enclosure is not None:
            for contained in obj.attributes.enclosure.contains:
                if contained not in object_ids:
                    raise ValidationError(
                        f"enclosure {obj.id!r} contains unknown object {contained!r}")

    goal_objs, goal_locs = _goal_ids(task.goal)
    for object_id in goal_objs:
        if object_id not in object_ids:
            raise ValidationError(f"goal references unknown object {object_id!r}")
    for location_id in goal_locs:
        if location_id not in location_ids:
            raise ValidationError(f"goal references unknown location {location_id!r}")

    def check_tolerances(goal: GoalPredicate) -> None:
        if isinstance(goal, (ObjectAt, PouredAt)) and goal.tolerance <= 0:
            raise ValidationError("goal tolerance must be > 0")
        if isinstance(goal, (AllOf, AnyOf)):
            for item in goal.items:
                check_tolerances(item)

    check_tolerances(task.goal)

    # Imported here so the hazard catalog (which uses these scene types)
    # does not create an import cycle.
    from .sim.hazards import RULE_TAGS

    for tag in task.hazard_tags:
        if tag not in RULE_TAGS:
            raise ValidationError(f"unknown hazard tag {tag!r} in {task.task_id!r}")


def task_to_dict(task: TaskSpec) -> dict:
    objects = []
    for obj in task.objects:
        entry: dict = {"id": obj.id, "name": obj.display_name,
                       "pos": [obj.position[0], obj.position[1]],
                       "attrs": attrs_to_dict(obj.attributes)}
        if obj.reach_radius is not None:
            entry["reach_radius"] = obj.reach_radius
        objects.append(entry)
    locations = []
    for loc in task.locations:
        entry = {"id": loc.id, "pos": [loc.position[0], loc.position[1]]}
        if loc.region_tag is not None:
            entry["region"] = loc.region_tag
        locations.append(entry)
    return {
        "task_id": task.task_id,
        "category": task.category,
        "instruction": task.instruction,
        "robot_start": [task.robot_start[0], task.robot_start[1]],
        "objects": objects,
        "locations": locations,
        "goal": goal_to_dict(task.goal),
        "hazard_tags": list(task.hazard_tags),
    }


def load_task(path: str | Path) -> TaskSpec:
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read task file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed task file {path}: {exc}") from None
    if not isinstance(raw, dict):
        raise ParseError(f"task file {path} must contain a JSON object")
    return task_from_dict(raw)


def save_task(task: TaskSpec, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(task_to_dict(task), indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def load_task_dir(path: str | Path) -> list[TaskSpec]:
    """Every ``*.task.json`` in a directory, ordered by task_id."""
    path = Path(path)
    tasks = [load_task(p) for p in sorted(path.glob("*.task.json"))]
    if not tasks:
        raise ValidationError(f"no *.task.json files under {path}")
    tasks.sort(key=lambda t: t.task_id)
    seen: set[str] = set()
    for task in tasks:
        if task.task_id in seen:
            raise ValidationError(f"duplicate task_id {task.task_id!r} in suite")
        seen.add(task.task_id)
    return tasks


def eval_goal(goal: GoalPredicate, state) -> bool:
    """True iff the predicate holds in a terminal world state.

    ``state`` is a simulator WorldState; dangling ids were excluded by
    load-time validation, so lookups here never fail.
    """
    if isinstance(goal, AllOf):
        return all(eval_goal(item, state) for item in goal.items)
    if isinstance(goal, AnyOf):
        return any(eval_goal(item, state) for item in goal.items)
    if isinstance(goal, ObjectAt):
        obj = state.objects[goal.object_id]
        loc = state.locations[goal.location_id]
        return dist(obj.position, loc.position) <= goal.tolerance
    if isinstance(goal, PouredAt):
        loc = state.locations[goal.location_id]
        return any(dist(p.position, loc.position) <= goal.tolerance
                   for p in state.pour_events)
    if isinstance(goal, Held):
        return state.robot.held == goal.object_id
    if isinstance(goal, AttrIs):
        obj = state.objects[goal.object_id]
        return query_attr(obj.attributes, goal.attr, state.clock) == goal.value
    raise TypeError(f"not a goal: {goal!r}")


def query_attr(attrs: AttributeSet, name: str, clock: float = 0.0) -> bool:
    """Resolve a queryable attribute name against an attribute set."""
    if name == "filled":
        return attrs.liquid_container is not None and attrs.liquid_container.filled
    if name == "on":
        for sub in (attrs.powered, attrs.heater, attrs.microwave):
            if sub is not None:
                return sub.on
        return False
    if name == "lit":
        return attrs.is_lit()
    if name == "open":
        return attrs.enclosure is not None and attrs.enclosure.open
    if name == "sealed":
        return attrs.chemical is not None and attrs.chemical.sealed
    if name == "hot":
        return attrs.is_hot(clock)
    raise ValidationError(f"unknown queryable attribute {name!r}")
