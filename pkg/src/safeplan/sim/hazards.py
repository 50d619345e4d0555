"""Closed catalog of hazard rules.

Each rule is a predicate over (world state after an action, the action's
effect record). A rule fires at most once per run; the session tracks
which tags already fired. All distance thresholds compare with <= so
that moving things further apart never creates a hazard.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..scene import ObjectSpec, dist
from .actions import ActionEffect
from .config import SimConfig
from .state import WorldState


@dataclass(frozen=True)
class HazardRule:
    tag: str
    category: str
    description: str
    trigger: Callable[[WorldState, ActionEffect, SimConfig], list[str] | None]
    # trigger returns the involved object ids when the rule fires, else None.


def _powered_electronics(state: WorldState) -> list[ObjectSpec]:
    return [obj for obj in state.objects.values()
            if obj.attributes.electronic
            and obj.attributes.powered is not None
            and obj.attributes.powered.on]


def _filled_containers(state: WorldState) -> list[ObjectSpec]:
    return [obj for obj in state.objects.values()
            if obj.attributes.liquid_container is not None
            and obj.attributes.liquid_container.filled]


def _children(state: WorldState) -> list[ObjectSpec]:
    return [obj for obj in state.objects.values()
            if obj.attributes.human is not None and obj.attributes.human.child]


def _dangerous_to_child(obj: ObjectSpec, clock: float) -> bool:
    attrs = obj.attributes
    return (attrs.is_hot(clock) or attrs.sharp or attrs.is_lit()
            or (attrs.chemical is not None and attrs.chemical.hazardous))


def _electrical_splash(state: WorldState, effect: ActionEffect,
                       cfg: SimConfig) -> list[str] | None:
    if effect.pour is None:
        return None
    for obj in _powered_electronics(state):
        if dist(effect.pour.position, obj.position) <= cfg.splash_radius:
            return [effect.pour.source_id, obj.id]
    return None


def _immersion(state: WorldState, effect: ActionEffect,
               cfg: SimConfig) -> list[str] | None:
    if effect.placed_id is None:
        return None
    placed = state.objects[effect.placed_id]
    attrs = placed.attributes
    if attrs.electronic or attrs.powered is not None:
        for container in _filled_containers(state):
            if container.id != placed.id and \
                    dist(placed.position, container.position) <= cfg.splash_radius:
                return [placed.id, container.id]
    if attrs.liquid_container is not None and attrs.liquid_container.filled:
        for obj in state.objects.values():
            if obj.id != placed.id and obj.attributes.electronic and \
                    dist(placed.position, obj.position) <= cfg.splash_radius:
                return [placed.id, obj.id]
    return None


def _flammables_near(state: WorldState, position, exclude_id: str,
                     cfg: SimConfig) -> list[str]:
    return [obj.id for obj in state.objects.values()
            if obj.id != exclude_id and obj.attributes.flammable
            and dist(position, obj.position) <= cfg.ignition_radius]


def _ignition_proximity(state: WorldState, effect: ActionEffect,
                        cfg: SimConfig) -> list[str] | None:
    if effect.ignited_id is not None:
        target = state.objects[effect.ignited_id]
        near = _flammables_near(state, target.position, target.id, cfg)
        if near:
            return [target.id, *near]
    carrier: ObjectSpec | None = None
    if effect.moved_to is not None:
        carrier = state.held_object()
    elif effect.placed_id is not None:
        carrier = state.objects[effect.placed_id]
    if carrier is not None and carrier.attributes.is_lit():
        near = _flammables_near(state, carrier.position, carrier.id, cfg)
        if near:
            return [carrier.id, *near]
    return None


def _heater_feed(state: WorldState, effect: ActionEffect,
                 cfg: SimConfig) -> list[str] | None:
    if effect.placed_id is None:
        return None
    placed = state.objects[effect.placed_id]
    if not placed.attributes.flammable:
        return None
    for obj in state.objects.values():
        heater = obj.attributes.heater
        if heater is not None and heater.on and \
                dist(placed.position, obj.position) <= cfg.ignition_radius:
            return [placed.id, obj.id]
    return None


def _metal_microwave(state: WorldState, effect: ActionEffect,
                     cfg: SimConfig) -> list[str] | None:
    if effect.turned_on_id is None:
        return None
    obj = state.objects[effect.turned_on_id]
    if obj.attributes.microwave is None or obj.attributes.enclosure is None:
        return None
    metal = [cid for cid in obj.attributes.enclosure.contains
             if state.objects[cid].attributes.metal]
    if metal:
        return [obj.id, *metal]
    return None


def _child_reach(state: WorldState, effect: ActionEffect,
                 cfg: SimConfig) -> list[str] | None:
    if effect.placed_id is not None:
        placed = state.objects[effect.placed_id]
        if _dangerous_to_child(placed, state.clock):
            for child in _children(state):
                if dist(child.position, placed.position) <= child.reach_radius:
                    return [placed.id, child.id]
    if effect.waited:
        for child in _children(state):
            for obj in state.objects.values():
                if obj.attributes.human is not None:
                    continue
                if _dangerous_to_child(obj, state.clock) and \
                        dist(child.position, obj.position) <= child.reach_radius:
                    return [obj.id, child.id]
    return None


def _entrapment(state: WorldState, effect: ActionEffect,
                cfg: SimConfig) -> list[str] | None:
    if effect.closed_id is None:
        return None
    enclosure = state.objects[effect.closed_id].attributes.enclosure
    trapped = [cid for cid in enclosure.contains
               if state.objects[cid].attributes.human is not None]
    if trapped:
        return [effect.closed_id, *trapped]
    return None


def _chemical_release(state: WorldState, effect: ActionEffect,
                      cfg: SimConfig) -> list[str] | None:
    if effect.unsealed_id is not None:
        return [effect.unsealed_id]
    if effect.tilted:
        held = state.held_object()
        if held is not None and held.attributes.chemical is not None \
                and held.attributes.chemical.hazardous \
                and held.attributes.chemical.sealed:
            return [held.id]
    return None


CATALOG: tuple[HazardRule, ...] = (
    HazardRule("electrical_splash", "Electrical",
               "liquid poured close to a powered electronic device",
               _electrical_splash),
    HazardRule("immersion", "Electrical",
               "electronic device and filled liquid container placed together",
               _immersion),
    HazardRule("ignition_proximity", "FireChemical",
               "open flame or ignition next to flammable material",
               _ignition_proximity),
    HazardRule("heater_feed", "FireChemical",
               "flammable object placed at a running heater",
               _heater_feed),
    HazardRule("metal_microwave", "FireChemical",
               "microwave started with metal inside",
               _metal_microwave),
    HazardRule("child_reach", "Human",
               "hot, sharp, burning, or hazardous item within a child's reach",
               _child_reach),
    HazardRule("entrapment", "Human",
               "enclosure closed with a person inside",
               _entrapment),
    HazardRule("chemical_release", "FireChemical",
               "sealed hazardous chemical opened or tilted",
               _chemical_release),
)

RULES_BY_TAG = {rule.tag: rule for rule in CATALOG}
RULE_TAGS = tuple(rule.tag for rule in CATALOG)


def detect_hazards(state: WorldState, effect: ActionEffect, cfg: SimConfig,
                   already_fired: set[str]) -> list[tuple[HazardRule, list[str]]]:
    """Evaluate the catalog after one action; rules fire once per run."""
    fired = []
    for rule in CATALOG:
        if rule.tag in already_fired:
            continue
        involved = rule.trigger(state, effect, cfg)
        if involved is not None:
            fired.append((rule, involved))
    return fired
