"""Turing machines, the unary-block word encoding and their array P system simulation."""

from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Mapping, NamedTuple, Sequence, Tuple

from ..arrays.grid import ArrayObject, Direction
from ..arrays.rewrite import OccurrencePolicy, ThetaRule
from ..membrane.system import MembraneTree, Mode, PSystem, Region, ensure_valid
from ..shapes.final import FinalSpec, RegionPredicate
from ..utils.exceptions import SymbolNotInAlphabetError, TranslationError
from ..utils.logger import get_logger


logger = get_logger(__name__)

BLANK_SEPARATOR = "0"
UNARY = "1"
END_MARKER = "x"
REQUIRED_TAPE = frozenset({BLANK_SEPARATOR, UNARY, END_MARKER})
SKIN = "1"


class Move(Enum):
    L = "L"
    R = "R"


class Action(NamedTuple):
    """What a transition does: next state, symbol written, head move."""

    state: str
    write: str
    move: Move


@dataclass(frozen=True)
class TuringMachine:
    """
    Deterministic single-tape machine over a tape alphabet containing 0, 1 and x.

    ``transitions`` maps (state, read symbol) to an Action, so determinism is
    structural.
    """

    states: FrozenSet[str]
    tape_alphabet: FrozenSet[str]
    transitions: Mapping[Tuple[str, str], Action]
    start: str
    accepting: FrozenSet[str] = frozenset()
    name: str = field(default="machine", compare=False)

    def problems(self) -> List[str]:
        found = []
        missing = REQUIRED_TAPE - self.tape_alphabet
        if missing:
            found.append(f"tape alphabet lacks {sorted(missing)}")
        if self.states & self.tape_alphabet:
            found.append(f"states reused as tape symbols: {sorted(self.states & self.tape_alphabet)}")
        if self.start not in self.states:
            found.append(f"start state {self.start} is not a state")
        for q in sorted(self.accepting - self.states):
            found.append(f"accepting state {q} is not a state")
        for (q, a), act in sorted(self.transitions.items()):
            if q not in self.states or act.state not in self.states:
                found.append(f"transition {q},{a}: unknown state")
            if a not in self.tape_alphabet or act.write not in self.tape_alphabet:
                found.append(f"transition {q},{a}: symbol outside the tape alphabet")
        return found


def encode_word(w: Sequence[str], alphabet: Sequence[str]) -> Tuple[str, ...]:
    """
    Encode a word as 0-delimited unary blocks: the i-th letter of ``alphabet`` is 1^i.

    The empty word encodes to a single 0.

    Raises:
        SymbolNotInAlphabetError: If a letter of ``w`` is not in ``alphabet``
    """
    position = {sym: i for i, sym in enumerate(alphabet, start=1)}
    encoded = [BLANK_SEPARATOR]
    for sym in w:
        if sym not in position:
            raise SymbolNotInAlphabetError(f"Symbol {sym!r} is not in alphabet {list(alphabet)}")
        encoded.extend([UNARY] * position[sym])
        encoded.append(BLANK_SEPARATOR)
    return tuple(encoded)


def tm_rules(t: TuringMachine) -> List[ThetaRule]:
    """
    Empty-labelled horizontal rules simulating each transition in every tape context.

    A right move (q,a) -> (p,b,R) gives ``q a c -> b p c``; a left move gives
    ``c q a -> p c b``; c ranges over the tape alphabet.
    """
    rules = []
    context = sorted(t.tape_alphabet)
    for n, ((q, a), act) in enumerate(sorted(t.transitions.items(), key=lambda item: item[0]), start=1):
        for c in context:
            if act.move is Move.R:
                lhs, rhs = (q, a, c), (act.write, act.state, c)
            else:
                lhs, rhs = (c, q, a), (act.state, c, act.write)
            rules.append(ThetaRule(f"t{n}_{c}", None, lhs, rhs, Direction.E))
    return rules


def _write_head(t: TuringMachine) -> str:
    head = "W"
    while head in t.states or head in t.tape_alphabet:
        head += "'"
    return head


def tm_to_aps(t: TuringMachine, alphabet: Sequence[str]) -> PSystem:
    """
    Build a one-membrane unrestricted system whose label language is what ``t`` accepts.

    The initial array is ``q0 0 W``. Each labelled rule ``a_i: W -> 1^i 0 W``
    appends one encoded letter, the empty-labelled ``W -> x`` closes the tape,
    the machine runs through ``tm_rules`` and every accepting state may turn
    into ``x``. Only all-terminal halting arrays are accepted.
    """
    problems = t.problems()
    if problems:
        raise TranslationError(f"Machine {t.name} is malformed: {'; '.join(problems)}")
    if len(set(alphabet)) != len(alphabet) or not alphabet:
        raise TranslationError(f"Alphabet must be a non-empty list of distinct letters, got {list(alphabet)}")

    w = _write_head(t)
    rules: List[ThetaRule] = []
    for i, letter in enumerate(alphabet, start=1):
        rules.append(ThetaRule(f"g{i}", letter, (w,), (UNARY,) * i + (BLANK_SEPARATOR, w), Direction.E))
    rules.append(ThetaRule("close", None, (w,), (END_MARKER,), Direction.E))
    rules.extend(tm_rules(t))
    for q in sorted(t.accepting):
        rules.append(ThetaRule(f"acc_{q}", None, (q,), (END_MARKER,), Direction.E))

    tree = MembraneTree(nodes=(SKIN,), parent={}, output=SKIN)
    system = PSystem(
        name=f"tm_{t.name}",
        alphabet=frozenset(t.states) | frozenset(t.tape_alphabet) | {w},
        terminals=frozenset(t.tape_alphabet),
        tree=tree,
        init={SKIN: (ArrayObject.from_word([t.start, BLANK_SEPARATOR, w]),)},
        regions={SKIN: Region.build(SKIN, rules)},
        labels=frozenset(alphabet),
        mode=Mode.UNRESTRICTED,
        policy=OccurrencePolicy.ANY,
        final=FinalSpec({SKIN: RegionPredicate.all_terminal()}),
    )
    logger.debug(f"Machine {t.name} compiled to {len(rules)} rules")
    return ensure_valid(system)

