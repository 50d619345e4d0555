"""Action semantics: argument checking, state mutation, cost.

Every action returns an ActionEffect describing what just changed; the
hazard catalog pattern-matches on these effects. Costs follow a fixed
tariff: navigation 100 per meter, arm motion 100 per degree, waiting 100
per minute, other state-changing actions a flat 100 per call, queries
free.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..dsl.interpreter import HelpRequested, PlanRuntimeError, Position, Value
from ..scene import ObjectSpec, Vec, dist
from .config import SimConfig
from .state import PourEvent, WorldState

COST_PER_METER = 100.0
COST_PER_DEGREE = 100.0
COST_PER_MINUTE = 100.0
COST_FLAT = 100.0


@dataclass
class ActionEffect:
    name: str
    args: list
    cost: float = 0.0
    result: Value = None
    mutating: bool = False
    moved_to: Vec | None = None       # robot ended a goto here
    placed_id: str | None = None      # object released by place_at_pos
    pour: PourEvent | None = None
    ignited_id: str | None = None
    closed_id: str | None = None
    turned_on_id: str | None = None
    waited: bool = False
    tilted: bool = False
    unsealed_id: str | None = None    # open_obj released this sealed hazardous chemical
    cleared_hot_ids: list[str] = field(default_factory=list)


def api_error(message: str) -> PlanRuntimeError:
    return PlanRuntimeError("ApiError", message)


def type_error(message: str) -> PlanRuntimeError:
    return PlanRuntimeError("TypeMismatch", message)


def _want_text(args: list, action: str) -> str:
    if len(args) != 1 or not isinstance(args[0], str):
        raise type_error(f"{action} takes one text name")
    return args[0]


def _want_number(args: list, action: str) -> float:
    if len(args) != 1 or not isinstance(args[0], float) or isinstance(args[0], bool):
        raise type_error(f"{action} takes one number")
    return args[0]


def _want_position(args: list, action: str) -> Vec:
    if len(args) != 1 or not isinstance(args[0], Position):
        raise type_error(f"{action} takes one position")
    return (args[0][0], args[0][1])


def resolve_object(state: WorldState, name: str) -> ObjectSpec | None:
    """Accepts an object id or its display name, case-insensitively."""
    lowered = name.lower()
    for obj in state.objects.values():
        if obj.id.lower() == lowered or obj.display_name.lower() == lowered:
            return obj
    return None


def _require_object(state: WorldState, name: str, action: str) -> ObjectSpec:
    obj = resolve_object(state, name)
    if obj is None:
        raise api_error(f"{action}: no object named {name!r}")
    return obj


def _require_reach(state: WorldState, obj: ObjectSpec, cfg: SimConfig, action: str) -> None:
    if dist(state.robot.position, obj.position) > cfg.grasp_radius:
        raise api_error(f"{action}: {obj.id!r} is out of reach")


def apply_action(state: WorldState, name: str, args: list,
                 cfg: SimConfig) -> ActionEffect:
    handler = _HANDLERS.get(name)
    if handler is None:
        raise api_error(f"unknown API {name!r}")
    return handler(state, args, cfg)


# --- queries (cost 0, never mutate) ----------------------------------------

def _get_obj_names(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    names = [obj.display_name for obj in state.objects.values()]
    return ActionEffect("get_obj_names", [], result=names)


def _get_loc_names(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    names = [loc.id for loc in state.locations.values()]
    return ActionEffect("get_loc_names", [], result=names)


def _parse_obj(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    if len(args) != 2 or not isinstance(args[0], str) or not isinstance(args[1], list):
        raise type_error("parse_obj takes a text needle and a list of names")
    needle = args[0].lower()
    for candidate in args[1]:
        if isinstance(candidate, str) and needle in candidate.lower():
            return ActionEffect("parse_obj", list(args), result=candidate)
    raise api_error(f"parse_obj: nothing matches {args[0]!r}")


def _get_obj_pos(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    obj = _require_object(state, _want_text(args, "get_obj_pos"), "get_obj_pos")
    return ActionEffect("get_obj_pos", list(args), result=Position(*obj.position))


def _get_loc_pos(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    name = _want_text(args, "get_loc_pos")
    lowered = name.lower()
    for loc in state.locations.values():
        if loc.id.lower() == lowered:
            return ActionEffect("get_loc_pos", list(args), result=Position(*loc.position))
    raise api_error(f"get_loc_pos: no location named {name!r}")


def _visible_objects(state: WorldState, cfg: SimConfig) -> list[ObjectSpec]:
    return [obj for obj in state.objects.values()
            if dist(state.robot.position, obj.position) <= cfg.visibility_radius]


def _get_visible_obj_names(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    names = [obj.display_name for obj in _visible_objects(state, cfg)]
    return ActionEffect("get_visible_obj_names", [], result=names)


def _is_obj_visible(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    # Unknown names are simply not visible; plans probe speculatively.
    name = _want_text(args, "is_obj_visible")
    obj = resolve_object(state, name)
    visible = obj is not None and \
        dist(state.robot.position, obj.position) <= cfg.visibility_radius
    return ActionEffect("is_obj_visible", list(args), result=visible)


# --- movement ---------------------------------------------------------------

def _goto(state: WorldState, target: Vec, name: str, args: list) -> ActionEffect:
    cost = COST_PER_METER * dist(state.robot.position, target)
    state.move_robot(target)
    return ActionEffect(name, args, cost=cost, mutating=True, moved_to=target)


def _goto_pos(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    return _goto(state, _want_position(args, "goto_pos"), "goto_pos", list(args))


def _goto_reg(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    region = _want_text(args, "goto_reg")
    lowered = region.lower()
    for loc in state.locations.values():
        if loc.region_tag is not None and loc.region_tag.lower() == lowered:
            return _goto(state, loc.position, "goto_reg", list(args))
    raise api_error(f"goto_reg: no location in region {region!r}")


# --- manipulation -----------------------------------------------------------

def _pick_obj(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    obj = _require_object(state, _want_text(args, "pick_obj"), "pick_obj")
    if state.robot.held is not None:
        raise api_error(f"pick_obj: already holding {state.robot.held!r}")
    if obj.attributes.human is not None:
        raise api_error("pick_obj: cannot pick up a person")
    _require_reach(state, obj, cfg, "pick_obj")
    container = state.enclosing(obj.id)
    if container is not None and not container.attributes.enclosure.open:
        raise api_error(f"pick_obj: {obj.id!r} is inside the closed {container.id!r}")
    state.remove_from_enclosures(obj.id)
    state.robot.held = obj.id
    obj.position = state.robot.position
    return ActionEffect("pick_obj", list(args), cost=COST_FLAT, mutating=True)


def _place_at_pos(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    target = _want_position(args, "place_at_pos")
    held = state.held_object()
    if held is None:
        raise api_error("place_at_pos: not holding anything")
    held.position = target
    state.robot.held = None
    return ActionEffect("place_at_pos", list(args), cost=COST_FLAT, mutating=True,
                        placed_id=held.id)


def _tilt_arm(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    degrees = _want_number(args, "tilt_arm")
    if not 0.0 <= degrees <= 180.0:
        raise api_error(f"tilt_arm: {degrees} is outside [0, 180]")
    state.robot.arm_tilt = degrees
    effect = ActionEffect("tilt_arm", list(args),
                          cost=COST_PER_DEGREE * degrees * cfg.arm_cost_scale,
                          mutating=True, tilted=True)
    held = state.held_object()
    if degrees > 0 and held is not None:
        container = held.attributes.liquid_container
        if container is not None and container.filled:
            container.filled = False
            pour = PourEvent(position=state.robot.position,
                             source_id=held.id, time=state.clock)
            state.pour_events.append(pour)
            effect.pour = pour
    return effect


def _reset_arm(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    state.robot.arm_tilt = 0.0
    return ActionEffect("reset_arm", [], cost=COST_FLAT, mutating=True)


def _wait(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    seconds = _want_number(args, "wait")
    if seconds < 0:
        raise api_error("wait: seconds must be >= 0")
    state.clock += seconds
    cleared = state.clear_expired_hot()
    return ActionEffect("wait", list(args), cost=COST_PER_MINUTE * seconds / 60.0,
                        mutating=True, waited=True, cleared_hot_ids=cleared)


# --- attribute toggles ------------------------------------------------------

def _ignite_obj(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    obj = _require_object(state, _want_text(args, "ignite_obj"), "ignite_obj")
    _require_reach(state, obj, cfg, "ignite_obj")
    attrs = obj.attributes
    if attrs.flame is None and not attrs.ignitable:
        raise api_error(f"ignite_obj: {obj.id!r} cannot burn")
    if attrs.flame is None:
        from ..scene import Flame
        attrs.flame = Flame(lit=True)
    else:
        attrs.flame.lit = True
    return ActionEffect("ignite_obj", list(args), cost=COST_FLAT, mutating=True,
                        ignited_id=obj.id)


def _extinguish_obj(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    obj = _require_object(state, _want_text(args, "extinguish_obj"), "extinguish_obj")
    _require_reach(state, obj, cfg, "extinguish_obj")
    if obj.attributes.flame is None:
        raise api_error(f"extinguish_obj: {obj.id!r} has no flame")
    obj.attributes.flame.lit = False
    return ActionEffect("extinguish_obj", list(args), cost=COST_FLAT, mutating=True)


def _set_power(state: WorldState, args: list, cfg: SimConfig, on: bool,
               action: str) -> ActionEffect:
    obj = _require_object(state, _want_text(args, action), action)
    _require_reach(state, obj, cfg, action)
    attrs = obj.attributes
    toggled = False
    for sub in (attrs.powered, attrs.heater, attrs.microwave):
        if sub is not None:
            sub.on = on
            toggled = True
    if not toggled:
        raise api_error(f"{action}: {obj.id!r} has no power switch")
    return ActionEffect(action, list(args), cost=COST_FLAT, mutating=True,
                        turned_on_id=obj.id if on else None)


def _turn_on(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    return _set_power(state, args, cfg, True, "turn_on")


def _turn_off(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    return _set_power(state, args, cfg, False, "turn_off")


def _open_obj(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    obj = _require_object(state, _want_text(args, "open_obj"), "open_obj")
    _require_reach(state, obj, cfg, "open_obj")
    attrs = obj.attributes
    unsealed_id = None
    if attrs.enclosure is not None:
        attrs.enclosure.open = True
    elif attrs.chemical is not None:
        if attrs.chemical.sealed and attrs.chemical.hazardous:
            unsealed_id = obj.id
        attrs.chemical.sealed = False
    else:
        raise api_error(f"open_obj: {obj.id!r} cannot be opened")
    return ActionEffect("open_obj", list(args), cost=COST_FLAT, mutating=True,
                        unsealed_id=unsealed_id)


def _close_obj(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    obj = _require_object(state, _want_text(args, "close_obj"), "close_obj")
    _require_reach(state, obj, cfg, "close_obj")
    if obj.attributes.enclosure is None:
        raise api_error(f"close_obj: {obj.id!r} cannot be closed")
    obj.attributes.enclosure.open = False
    return ActionEffect("close_obj", list(args), cost=COST_FLAT, mutating=True,
                        closed_id=obj.id)


def _call_human_help(state: WorldState, args: list, cfg: SimConfig) -> ActionEffect:
    raise HelpRequested()


_HANDLERS = {
    "get_obj_names": _get_obj_names,
    "get_loc_names": _get_loc_names,
    "parse_obj": _parse_obj,
    "get_obj_pos": _get_obj_pos,
    "get_loc_pos": _get_loc_pos,
    "get_visible_obj_names": _get_visible_obj_names,
    "is_obj_visible": _is_obj_visible,
    "goto_pos": _goto_pos,
    "goto_reg": _goto_reg,
    "pick_obj": _pick_obj,
    "place_at_pos": _place_at_pos,
    "tilt_arm": _tilt_arm,
    "reset_arm": _reset_arm,
    "wait": _wait,
    "ignite_obj": _ignite_obj,
    "extinguish_obj": _extinguish_obj,
    "turn_on": _turn_on,
    "turn_off": _turn_off,
    "open_obj": _open_obj,
    "close_obj": _close_obj,
    "call_human_help": _call_human_help,
}
