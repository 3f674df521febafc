"""Seeded random computations and trace replay."""

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from .configuration import Configuration
from .system import PSystem
from .transitions import ChoiceSet, apply_step, choice_signature, is_halting, successors
from ..shapes.final import match_final
from ..utils.exceptions import IllegalChoiceError
from ..utils.logger import get_logger


logger = get_logger(__name__)


class RunStatus(Enum):
    """How a computation ended."""

    HALTED = "halted"
    DEAD_END = "dead-end"
    BUDGET_EXHAUSTED = "budget-exhausted"
    REPLAYED = "replayed"


@dataclass
class Trace:
    """A recorded computation: start, every step taken, and where it ended."""

    initial: Configuration
    steps: List[ChoiceSet] = field(default_factory=list)
    final: Optional[Configuration] = None
    status: RunStatus = RunStatus.REPLAYED
    accepted: bool = False

    @property
    def word(self) -> Tuple[str, ...]:
        """Label string of the computation; empty labels contribute nothing."""
        return tuple(ch.step_label for ch in self.steps if ch.step_label is not None)


def run_random(s: PSystem, seed: int, max_steps: int) -> Trace:
    """
    Follow uniformly chosen legal steps until halting, a dead end or the step budget.

    Args:
        s: System to run
        seed: Seed of the private random generator
        max_steps: Largest number of steps to take

    Returns:
        Trace with outcome status; identical inputs give identical traces
    """
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")

    rng = random.Random(seed)
    current = s.initial_configuration()
    trace = Trace(initial=current)

    while True:
        if is_halting(current, s):
            trace.status = RunStatus.HALTED
            break
        if len(trace.steps) >= max_steps:
            trace.status = RunStatus.BUDGET_EXHAUSTED
            break
        options = successors(current, s)
        if not options:
            trace.status = RunStatus.DEAD_END
            break
        choice, current = options[rng.randrange(len(options))]
        trace.steps.append(choice)

    trace.final = current
    trace.accepted = trace.status is RunStatus.HALTED and match_final(current, s)
    logger.debug(f"Random run of {s.name} (seed {seed}): {trace.status.value} after {len(trace.steps)} steps")
    return trace


def replay(s: PSystem, t: Trace) -> Configuration:
    """
    Re-apply the steps of a trace, checking each one is legal where it is taken.

    Raises:
        IllegalChoiceError: With the index of the first step that is not legal
    """
    current = t.initial
    for index, choice in enumerate(t.steps):
        try:
            wanted = choice_signature(current, choice.assignments)
        except IndexError:
            raise IllegalChoiceError(index, "names an array instance that does not exist")
        legal = {
            choice_signature(current, option.assignments): option.step_label
            for option, _ in successors(current, s)
        }
        if wanted not in legal or legal[wanted] != choice.step_label:
            raise IllegalChoiceError(index, "not among the legal steps of the configuration")
        current = apply_step(current, choice)
    return current
