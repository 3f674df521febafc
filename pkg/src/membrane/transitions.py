"""The labelled, maximally parallel transition relation."""

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .configuration import Configuration
from .system import MembraneTree, Mode, PSystem, Region
from ..arrays.grid import ArrayObject, reading_order
from ..arrays.rewrite import (
    Match, OccurrencePolicy, TargetKind, ThetaRule, apply_rule, is_applicable, successful_applications,
)
from ..utils.logger import get_logger


logger = get_logger(__name__)

Applications = Dict[str, List[Tuple[Match, ArrayObject]]]


@dataclass(frozen=True)
class Assignment:
    """One array instance rewritten by one rule at one match."""

    membrane: str
    index: int
    rule: ThetaRule
    match: Match
    destination: Optional[str]

    def __str__(self) -> str:
        x, y = self.match.anchor
        return f"{self.membrane}#{self.index}:{self.rule.id}@({x},{y})->{self.destination or '-'}"


@dataclass(frozen=True)
class ChoiceSet:
    """All assignments of one transition step and the label the step emits."""

    assignments: Tuple[Assignment, ...]
    step_label: Optional[str]


def destinations(rule: ThetaRule, membrane: str, tree: MembraneTree) -> List[Optional[str]]:
    """Membranes a rewritten array may be sent to; None means it leaves the system."""
    kind = rule.target.kind
    if kind is TargetKind.HERE:
        return [membrane]
    if kind is TargetKind.OUT:
        return [tree.parent.get(membrane)]
    if kind is TargetKind.IN_CHILD:
        return [rule.target.child]
    return list(tree.children(membrane))


def _applications(array: ArrayObject, region: Region) -> Applications:
    found = {}
    for rule in region.rules:
        apps = successful_applications(array, rule)
        if apps:
            found[rule.id] = apps
    return found


def choice_signature(c: Configuration, assignments: Sequence[Assignment]) -> tuple:
    """Identity of a step up to permutation of identical array instances."""
    return tuple(sorted(
        (asg.membrane, c.arrays_in(asg.membrane)[asg.index].key, asg.rule.id,
         tuple(asg.match.anchor), asg.destination or "")
        for asg in assignments
    ))


def _enabled(region: Region, per_array: Sequence[Applications]) -> Set[str]:
    applicable = set().union(*(apps.keys() for apps in per_array)) if per_array else set()
    return {rid for rid in applicable if not (region.dominators(rid) & applicable)}


def enabled_rules(c: Configuration, region: str, s: PSystem) -> Set[str]:
    """
    Rules usable in ``region`` under its priority order.

    A rule is enabled iff it applies to some array of the region and no rule
    of strictly higher priority applies to any array of the region.
    """
    reg = s.region(region)
    return _enabled(reg, [_applications(a, reg) for a in c.arrays_in(region)])


def _options(c: Configuration, s: PSystem) -> List[List[Tuple[Assignment, ArrayObject]]]:
    """Per rewritable array instance, every (assignment, result) it may take."""
    all_options = []
    for membrane, arrays in c.contents:
        region = s.region(membrane)
        per_array = [_applications(a, region) for a in arrays]
        enabled = _enabled(region, per_array)
        if not enabled:
            continue
        for index, apps in enumerate(per_array):
            options = []
            for rule in region.rules:
                if rule.id not in enabled:
                    continue
                for match, result in apps.get(rule.id, ()):
                    for dest in destinations(rule, membrane, s.tree):
                        options.append((Assignment(membrane, index, rule, match, dest), result))
            if options and s.policy is OccurrencePolicy.LEFTMOST:
                best = min(reading_order(asg.match.anchor) for asg, _ in options)
                options = [(asg, res) for asg, res in options if reading_order(asg.match.anchor) == best]
            if options:
                all_options.append(options)
    return all_options


def successors(c: Configuration, s: PSystem) -> List[Tuple[ChoiceSet, Configuration]]:
    """Every legal step from ``c`` together with the configuration it produces."""
    options = _options(c, s)
    if not options:
        return []

    candidates = sorted({asg.rule.label for opts in options for asg, _ in opts if asg.rule.label is not None})
    step_labels: List[Optional[str]] = list(candidates)
    if s.mode is Mode.UNRESTRICTED:
        step_labels.append(None)

    steps = []
    seen = set()
    for label in step_labels:
        filtered = [[o for o in opts if o[0].rule.label in (label, None)] for opts in options]
        if any(not opts for opts in filtered):
            continue
        for combo in product(*filtered):
            if label is not None and not any(asg.rule.label == label for asg, _ in combo):
                continue
            signature = choice_signature(c, [asg for asg, _ in combo])
            if signature in seen:
                continue
            seen.add(signature)
            choice = ChoiceSet(tuple(asg for asg, _ in combo), label)
            steps.append((choice, _assemble(c, combo)))
    return steps


def _assemble(c: Configuration, combo: Sequence[Tuple[Assignment, ArrayObject]]) -> Configuration:
    rewritten = {(asg.membrane, asg.index): (asg, result) for asg, result in combo}
    contents: Dict[str, List[ArrayObject]] = {}
    for membrane, arrays in c.contents:
        for index, array in enumerate(arrays):
            hit = rewritten.get((membrane, index))
            if hit is None:
                contents.setdefault(membrane, []).append(array)
                continue
            asg, result = hit
            if asg.destination is not None:
                contents.setdefault(asg.destination, []).append(result)
    return Configuration.of(contents)


def legal_steps(c: Configuration, s: PSystem) -> List[Tuple[ChoiceSet, Optional[str]]]:
    """
    Enumerate every legal transition step from ``c``.

    Each array with an applicable enabled rule receives exactly one
    (rule, match, destination); all non-empty labels used agree with the step
    label; restricted systems never take a step of empty-labelled rules only.
    An empty result means the configuration is halting or a dead end.
    """
    return [(choice, choice.step_label) for choice, _ in successors(c, s)]


def apply_step(c: Configuration, ch: ChoiceSet) -> Configuration:
    """Apply every assignment of ``ch`` simultaneously."""
    combo = []
    for asg in ch.assignments:
        array = c.arrays_in(asg.membrane)[asg.index]
        combo.append((asg, apply_rule(array, asg.rule, asg.match)))
    return _assemble(c, combo)


def is_halting(c: Configuration, s: PSystem) -> bool:
    """True iff no rule of any region applies to any array in that region."""
    for membrane, arrays in c.contents:
        region = s.region(membrane)
        for array in arrays:
            if any(is_applicable(array, rule) for rule in region.rules):
                return False
    return True
