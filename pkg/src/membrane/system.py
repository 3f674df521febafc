"""Membrane trees, regions and complete labelled array P systems."""

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from .configuration import Configuration
from ..arrays.grid import ArrayObject, Symbol
from ..arrays.rewrite import OccurrencePolicy, TargetKind, ThetaRule
from ..shapes.final import FinalSpec
from ..utils.exceptions import ValidationError
from ..utils.logger import get_logger


logger = get_logger(__name__)


class Mode(Enum):
    """Whether steps using only empty-labelled rules are allowed."""

    RESTRICTED = "restricted"
    UNRESTRICTED = "unrestricted"


@dataclass(frozen=True)
class MembraneTree:
    """Rooted tree of membranes; the root is the skin."""

    nodes: Tuple[str, ...]
    parent: Mapping[str, str]
    output: str

    @property
    def skin(self) -> Optional[str]:
        roots = [n for n in self.nodes if n not in self.parent]
        return roots[0] if len(roots) == 1 else None

    def children(self, node: str) -> List[str]:
        return [n for n in self.nodes if self.parent.get(n) == node]

    def problems(self) -> List[str]:
        found = []
        node_set = set(self.nodes)
        if len(node_set) != len(self.nodes):
            found.append("membrane ids are not unique")
        roots = [n for n in self.nodes if n not in self.parent]
        if len(roots) != 1:
            found.append(f"membrane structure must have exactly one skin, found {len(roots)}")
        for child, parent in self.parent.items():
            if child not in node_set or parent not in node_set:
                found.append(f"membrane edge {parent}->{child} names an unknown membrane")
        for node in self.nodes:
            seen = set()
            current = node
            while current in self.parent:
                if current in seen:
                    found.append(f"membrane {node} lies on a cycle")
                    break
                seen.add(current)
                current = self.parent[current]
        if self.output not in node_set:
            found.append(f"output membrane {self.output} does not exist")
        return found

    def __str__(self) -> str:
        def render(node: str) -> str:
            inner = "".join(f" {render(c)}" for c in self.children(node))
            return f"({node}{inner})"
        return render(self.skin) if self.skin else "()"


def transitive_closure(pairs: Iterable[Tuple[str, str]]) -> FrozenSet[Tuple[str, str]]:
    """Smallest transitive relation containing ``pairs``."""
    above: Dict[str, Set[str]] = defaultdict(set)
    for hi, lo in pairs:
        above[hi].add(lo)
    closed = set()
    for start in list(above):
        stack = list(above[start])
        reached = set()
        while stack:
            node = stack.pop()
            if node in reached:
                continue
            reached.add(node)
            stack.extend(above.get(node, ()))
        closed.update((start, lo) for lo in reached)
    return frozenset(closed)


@dataclass(frozen=True)
class Region:
    """Rules of one membrane with their (transitively closed) priority order."""

    id: str
    rules: Tuple[ThetaRule, ...] = ()
    priority: FrozenSet[Tuple[str, str]] = frozenset()

    @classmethod
    def build(cls, id: str, rules: Iterable[ThetaRule], pairs: Iterable[Tuple[str, str]] = ()) -> 'Region':
        return cls(id, tuple(rules), transitive_closure(pairs))

    def rule(self, rule_id: str) -> Optional[ThetaRule]:
        for r in self.rules:
            if r.id == rule_id:
                return r
        return None

    def dominators(self, rule_id: str) -> Set[str]:
        """Ids of rules with strictly higher priority than ``rule_id``."""
        return {hi for hi, lo in self.priority if lo == rule_id}


@dataclass(frozen=True)
class PSystem:
    """A labelled 8-directional array P system with its final specification."""

    name: str
    alphabet: FrozenSet[Symbol]
    terminals: FrozenSet[Symbol]
    tree: MembraneTree
    init: Mapping[str, Tuple[ArrayObject, ...]]
    regions: Mapping[str, Region]
    labels: FrozenSet[Symbol]
    mode: Mode = Mode.RESTRICTED
    policy: OccurrencePolicy = OccurrencePolicy.ANY
    final: FinalSpec = field(default_factory=FinalSpec)

    @property
    def nonterminals(self) -> FrozenSet[Symbol]:
        return self.alphabet - self.terminals

    def region(self, membrane: str) -> Region:
        return self.regions.get(membrane) or Region(membrane)

    def all_rules(self) -> List[ThetaRule]:
        return [r for region in self.regions.values() for r in region.rules]

    def initial_configuration(self) -> Configuration:
        return Configuration.of(self.init)


def validate_system(s: PSystem) -> List[str]:
    """
    Check every well-formedness condition of a system.

    Returns:
        List of problems, each prefixed with its location; empty when valid
    """
    problems = list(s.tree.problems())
    nodes = set(s.tree.nodes)

    if not s.terminals <= s.alphabet:
        problems.append(f"terminals not in alphabet: {sorted(s.terminals - s.alphabet)}")

    for membrane, arrays in s.init.items():
        if membrane not in nodes:
            problems.append(f"init {membrane}: unknown membrane")
        for a in arrays:
            unknown = a.symbols() - s.alphabet
            if unknown:
                problems.append(f"init {membrane}: symbols outside the alphabet {sorted(unknown)}")

    labels_by_rule: Dict[str, Set[Optional[str]]] = defaultdict(set)
    for membrane, region in s.regions.items():
        where = f"region {membrane}"
        if membrane not in nodes:
            problems.append(f"{where}: unknown membrane")
        ids = [r.id for r in region.rules]
        for dup in sorted({i for i in ids if ids.count(i) > 1}):
            problems.append(f"{where}: duplicate rule id {dup}")
        children = s.tree.children(membrane)
        for rule in region.rules:
            labels_by_rule[rule.id].add(rule.label)
            problems.extend(f"{where}: {p}" for p in rule.problems(s.terminals))
            unknown = rule.symbols() - s.alphabet
            if unknown:
                problems.append(f"{where}: rule {rule.id} uses symbols outside the alphabet {sorted(unknown)}")
            if rule.label is not None and rule.label not in s.labels:
                problems.append(f"{where}: rule {rule.id} label {rule.label} is not declared")
            if rule.target.kind is TargetKind.IN_CHILD and rule.target.child not in children:
                problems.append(f"{where}: rule {rule.id} targets in.{rule.target.child}, not a child membrane")
            if rule.target.kind is TargetKind.IN_ANY and not children:
                problems.append(f"{where}: rule {rule.id} targets in, but the membrane has no children")
        for hi, lo in sorted(region.priority):
            if hi == lo:
                problems.append(f"{where}: priority cycle through rule {hi}")
            for rid in (hi, lo):
                if rid not in ids:
                    problems.append(f"{where}: priority names unknown rule {rid}")

    for rule_id, labels in sorted(labels_by_rule.items()):
        if len(labels) > 1:
            shown = sorted(lab if lab is not None else "_" for lab in labels)
            problems.append(f"label conflict: rule {rule_id} carries labels {shown}")

    for membrane in s.final.predicates:
        if membrane not in nodes:
            problems.append(f"final {membrane}: unknown membrane")
    problems.extend(s.final.problems())

    # Deduplicate while keeping first-seen order
    unique = list(dict.fromkeys(problems))
    if unique:
        logger.debug(f"System {s.name} has {len(unique)} problem(s)")
    return unique


def ensure_valid(s: PSystem) -> PSystem:
    """Return ``s`` unchanged or raise ValidationError with every problem."""
    problems = validate_system(s)
    if problems:
        raise ValidationError(problems)
    return s
