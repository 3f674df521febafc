"""Direct Turing-machine simulation, the oracle for the machine translation."""

from enum import Enum
from itertools import product
from typing import List, NamedTuple, Sequence, Set

from ..language.words import Word
from ..translate.turing import END_MARKER, Move, TuringMachine, encode_word
from ..utils.logger import get_logger


logger = get_logger(__name__)


class Outcome(Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    TIMEOUT = "timeout"


class TmRun(NamedTuple):
    outcome: Outcome
    steps: int
    tape: List[str]


def simulate_tm(t: TuringMachine, tape: Sequence[str], max_steps: int = 10_000) -> TmRun:
    """
    Run ``t`` on ``tape`` with the head on the first cell.

    The tape never grows: moving off either end, or reading a pair without a
    transition, rejects. Entering an accepting state accepts.
    """
    cells = list(tape)
    head = 0
    state = t.start
    for step in range(max_steps + 1):
        if state in t.accepting:
            return TmRun(Outcome.ACCEPT, step, cells)
        if step == max_steps:
            break
        action = t.transitions.get((state, cells[head]))
        if action is None:
            return TmRun(Outcome.REJECT, step, cells)
        target = head + (1 if action.move is Move.R else -1)
        if not 0 <= target < len(cells):
            return TmRun(Outcome.REJECT, step, cells)
        cells[head] = action.write
        head = target
        state = action.state
    return TmRun(Outcome.TIMEOUT, max_steps, cells)


def tm_language(t: TuringMachine, alphabet: Sequence[str], max_len: int, max_steps: int = 10_000) -> Set[Word]:
    """Words up to ``max_len`` whose tape ``e(w) x`` the machine accepts."""
    words: Set[Word] = set()
    for length in range(max_len + 1):
        for w in product(alphabet, repeat=length):
            run = simulate_tm(t, encode_word(w, alphabet) + (END_MARKER,), max_steps)
            if run.outcome is Outcome.ACCEPT:
                words.add(tuple(w))
            elif run.outcome is Outcome.TIMEOUT:
                logger.warning(f"Machine {t.name} did not stop on {''.join(w)} within {max_steps} steps")
    return words
