"""Theta-rotation rules: representation, matching and ray-shift application."""

from dataclasses import dataclass
from enum import Enum
from typing import AbstractSet, List, NamedTuple, Optional, Tuple

from .grid import ArrayObject, Direction, Pixel, Symbol, dir_offset, reading_order
from ..utils.exceptions import CollisionError


class TargetKind(Enum):
    """Where a rewritten array goes."""

    HERE = "here"
    OUT = "out"
    IN_ANY = "in"
    IN_CHILD = "in_child"


@dataclass(frozen=True)
class TargetSpec:
    """Target designation of a rule; ``child`` is set only for IN_CHILD."""

    kind: TargetKind = TargetKind.HERE
    child: Optional[str] = None

    @classmethod
    def parse(cls, text: str) -> 'TargetSpec':
        """Read ``here``, ``out``, ``in`` or ``in.<id>``."""
        if text.startswith("in."):
            return cls(TargetKind.IN_CHILD, text[3:])
        return cls(TargetKind(text))

    def __str__(self) -> str:
        if self.kind is TargetKind.IN_CHILD:
            return f"in.{self.child}"
        return self.kind.value


HERE = TargetSpec(TargetKind.HERE)


class OccurrencePolicy(Enum):
    """Which occurrences of a left-hand side may be rewritten."""

    ANY = "any"
    LEFTMOST = "leftmost"


@dataclass(frozen=True)
class ThetaRule:
    """
    A labelled directional rewrite rule.

    ``lhs`` is matched along ``direction`` starting at the anchor, and ``rhs``
    is written along the same direction from the same anchor. A label of None
    stands for the empty label.
    """

    id: str
    label: Optional[Symbol]
    lhs: Tuple[Symbol, ...]
    rhs: Tuple[Symbol, ...]
    direction: Direction
    target: TargetSpec = HERE

    @property
    def growth(self) -> int:
        return len(self.rhs) - len(self.lhs)

    def symbols(self) -> frozenset:
        return frozenset(self.lhs) | frozenset(self.rhs)

    def problems(self, terminals: AbstractSet[Symbol]) -> List[str]:
        """Shape violations of this rule given the terminal alphabet."""
        found = []
        if not self.lhs:
            found.append(f"rule {self.id}: empty left-hand side")
        if not self.rhs:
            found.append(f"rule {self.id}: empty right-hand side")
        if len(self.rhs) < len(self.lhs):
            found.append(f"rule {self.id}: right-hand side shorter than left-hand side")
        if len(self.lhs) == 1 and self.lhs[0] in terminals:
            found.append(f"rule {self.id}: single-symbol left-hand side {self.lhs[0]} is a terminal")
        if len(self.lhs) >= 2:
            nonterminals = [s for s in self.lhs if s not in terminals]
            if len(nonterminals) != 1:
                found.append(
                    f"rule {self.id}: left-hand side must hold exactly one nonterminal, "
                    f"found {len(nonterminals)}"
                )
        return found

    def __str__(self) -> str:
        label = self.label if self.label is not None else "_"
        return (f"{self.id} {label} : {' '.join(self.lhs)} -> {' '.join(self.rhs)} "
                f"@ {self.direction.value} tar {self.target}")


class Match(NamedTuple):
    """An occurrence of a rule's left-hand side; ``anchor`` holds lhs[0]."""

    anchor: Pixel


def find_matches(
    a: ArrayObject,
    r: ThetaRule,
    policy: OccurrencePolicy = OccurrencePolicy.ANY
) -> List[Match]:
    """
    Find every occurrence of ``r.lhs`` laid out along ``r.direction``.

    Args:
        a: Array to search
        r: Rule whose left-hand side is matched
        policy: ANY returns all matches sorted by (y descending, x ascending);
            LEFTMOST returns only the match first in reading order

    Returns:
        Ordered list of matches (empty when the rule does not occur)
    """
    step = dir_offset(r.direction)
    first = r.lhs[0]
    rest = r.lhs[1:]
    matches = []
    for pixel, symbol in a.items():
        if symbol != first:
            continue
        if all(a.get(pixel.shifted(step, k)) == sym for k, sym in enumerate(rest, start=1)):
            matches.append(Match(pixel))

    if policy is OccurrencePolicy.LEFTMOST:
        return [min(matches, key=lambda m: reading_order(m.anchor))] if matches else []
    matches.sort(key=lambda m: (-m.anchor.y, m.anchor.x))
    return matches


def apply_rule(a: ArrayObject, r: ThetaRule, m: Match) -> ArrayObject:
    """
    Rewrite one occurrence with ray-shift semantics.

    Occupied cells on the forward ray beyond the occurrence move outward by
    ``|rhs| - |lhs|`` steps, then the right-hand side is written from the
    anchor. Cells off the forward ray never move.

    Raises:
        CollisionError: If a written or moved symbol lands on an occupied off-ray cell
    """
    step = dir_offset(r.direction)
    anchor = m.anchor
    n_lhs = len(r.lhs)
    shift = r.growth

    cells = dict(a.items())
    moved = []
    for k in range(n_lhs):
        pixel = anchor.shifted(step, k)
        if cells.get(pixel) != r.lhs[k]:
            raise ValueError(f"rule {r.id} does not match at {tuple(anchor)}")
        del cells[pixel]

    if shift:
        for pixel in list(cells):
            k = _ray_index(anchor, pixel, step)
            if k is not None and k >= n_lhs:
                moved.append((k, cells.pop(pixel)))

    for k, symbol in enumerate(r.rhs):
        pixel = anchor.shifted(step, k)
        if pixel in cells:
            raise CollisionError(f"rule {r.id} at {tuple(anchor)} writes onto occupied {tuple(pixel)}")
        cells[pixel] = symbol

    for k, symbol in moved:
        pixel = anchor.shifted(step, k + shift)
        if pixel in cells:
            raise CollisionError(f"rule {r.id} at {tuple(anchor)} shifts onto occupied {tuple(pixel)}")
        cells[pixel] = symbol

    return ArrayObject._trusted(cells)


def _ray_index(anchor: Pixel, pixel: Pixel, step) -> Optional[int]:
    """k such that pixel == anchor + k*step with k >= 0, else None."""
    dx = pixel.x - anchor.x
    dy = pixel.y - anchor.y
    if step.dx:
        k = dx * step.dx
        if k < 0 or dx != k * step.dx:
            return None
    else:
        if dx != 0:
            return None
        k = dy * step.dy
    if k < 0 or dy != k * step.dy:
        return None
    return k


def successful_applications(a: ArrayObject, r: ThetaRule) -> List[Tuple[Match, ArrayObject]]:
    """Every match of ``r`` whose application does not collide, with its result."""
    results = []
    for m in find_matches(a, r, OccurrencePolicy.ANY):
        try:
            results.append((m, apply_rule(a, r, m)))
        except CollisionError:
            continue
    return results


def is_applicable(a: ArrayObject, r: ThetaRule) -> bool:
    """True iff some match of ``r`` in ``a`` rewrites without collision."""
    for m in find_matches(a, r, OccurrencePolicy.ANY):
        try:
            apply_rule(a, r, m)
        except CollisionError:
            continue
        return True
    return False
