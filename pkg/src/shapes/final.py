"""Final-configuration specifications and the shape predicate registry."""

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, AbstractSet, Callable, Dict, List, Mapping, Sequence, Tuple

from .generators import gen_run, gen_star, gen_swastika, gen_tape
from ..arrays.grid import ArrayObject, Direction, canonicalize, congruent
from ..utils.exceptions import UnknownShapeError
from ..utils.validators import DEGREES

if TYPE_CHECKING:
    from ..membrane.system import PSystem
    from ..membrane.transitions import Configuration


ShapeTest = Callable[[ArrayObject, Tuple[str, ...]], bool]


@dataclass(frozen=True)
class ShapeFamily:
    """A named, parametric picture family."""

    name: str
    arity: int
    member: ShapeTest
    check_params: Callable[[Tuple[str, ...]], List[str]] = lambda params: []


SHAPES: Dict[str, ShapeFamily] = {}


def register_shape(name: str, arity: int, check_params=None):
    """Decorator adding a membership test to the shape registry."""
    def decorator(func: ShapeTest) -> ShapeTest:
        SHAPES[name] = ShapeFamily(name, arity, func, check_params or (lambda params: []))
        return func
    return decorator


def resolve_shape(name: str) -> ShapeFamily:
    try:
        return SHAPES[name]
    except KeyError:
        raise UnknownShapeError(f"Unknown shape {name!r}; known shapes: {sorted(SHAPES)}")


def _check_degree(params: Tuple[str, ...]) -> List[str]:
    if not params[1].isdigit() or int(params[1]) not in DEGREES:
        return [f"run direction must be one of {list(DEGREES)}, got {params[1]!r}"]
    return []


@register_shape("star", 1)
def _is_star(a: ArrayObject, params: Tuple[str, ...]) -> bool:
    n = len(a)
    if n < 9 or (n - 1) % 8:
        return False
    return congruent(a, gen_star((n - 1) // 8, params[0]))


@register_shape("swastika", 1)
def _is_swastika(a: ArrayObject, params: Tuple[str, ...]) -> bool:
    n = len(a)
    if n < 17 or (n - 1) % 8:
        return False
    return congruent(a, gen_swastika((n - 1) // 8 + 1, params[0]))


@register_shape("run", 2, _check_degree)
def _is_run(a: ArrayObject, params: Tuple[str, ...]) -> bool:
    return congruent(a, gen_run(params[0], len(a), Direction.from_degrees(int(params[1]))))


@register_shape("tape", 1)
def _is_tape(a: ArrayObject, params: Tuple[str, ...]) -> bool:
    word = params[0]
    return len(a) == len(word) and congruent(a, gen_tape(word))


class PredicateKind(Enum):
    """Kinds of per-region final predicates."""

    EMPTY = "empty"
    ALL_TERMINAL = "all-terminal"
    SHAPE = "shape"
    EXACT_SET = "exact"


@dataclass(frozen=True)
class RegionPredicate:
    """What one region must hold in an accepted halting configuration."""

    kind: PredicateKind
    shape: str = ""
    params: Tuple[str, ...] = ()
    arrays: Tuple[ArrayObject, ...] = ()

    @classmethod
    def empty(cls) -> 'RegionPredicate':
        return cls(PredicateKind.EMPTY)

    @classmethod
    def all_terminal(cls) -> 'RegionPredicate':
        return cls(PredicateKind.ALL_TERMINAL)

    @classmethod
    def of_shape(cls, name: str, *params: str) -> 'RegionPredicate':
        return cls(PredicateKind.SHAPE, name, tuple(str(p) for p in params))

    @classmethod
    def exact(cls, arrays: Sequence[ArrayObject]) -> 'RegionPredicate':
        return cls(PredicateKind.EXACT_SET, arrays=tuple(canonicalize(a) for a in arrays))

    def problems(self) -> List[str]:
        if self.kind is not PredicateKind.SHAPE:
            return []
        if self.shape not in SHAPES:
            return [f"unknown shape {self.shape!r}"]
        family = SHAPES[self.shape]
        if len(self.params) != family.arity:
            return [f"shape {self.shape} takes {family.arity} parameter(s), got {len(self.params)}"]
        return family.check_params(self.params)

    def satisfied_by(self, arrays: Sequence[ArrayObject], terminals: AbstractSet[str]) -> bool:
        if self.kind is PredicateKind.EMPTY:
            return not arrays
        if self.kind is PredicateKind.ALL_TERMINAL:
            return all(a.symbols() <= terminals for a in arrays)
        if self.kind is PredicateKind.SHAPE:
            return len(arrays) == 1 and resolve_shape(self.shape).member(arrays[0], self.params)
        expected = sorted(a.key for a in self.arrays)
        return expected == sorted(canonicalize(a).key for a in arrays)

    def __str__(self) -> str:
        if self.kind is PredicateKind.SHAPE:
            return f"{self.shape}({','.join(self.params)})"
        return self.kind.value


@dataclass(frozen=True)
class FinalSpec:
    """Per-region predicates; regions not listed must end empty."""

    predicates: Mapping[str, RegionPredicate] = field(default_factory=dict)

    def predicate_for(self, region: str) -> RegionPredicate:
        return self.predicates.get(region, RegionPredicate.empty())

    def problems(self) -> List[str]:
        found = []
        for region, predicate in self.predicates.items():
            found.extend(f"final {region}: {p}" for p in predicate.problems())
        return found


def match_final(c: 'Configuration', s: 'PSystem') -> bool:
    """True iff every region of ``c`` satisfies its predicate in ``s.final``."""
    for region in s.tree.nodes:
        predicate = s.final.predicate_for(region)
        if not predicate.satisfied_by(c.arrays_in(region), s.terminals):
            return False
    return True
