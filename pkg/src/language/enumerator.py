"""
Bounded label-language search over the configuration graph of a system.

The search is breadth first over (configuration, emitted prefix) pairs. Each
level is expanded configuration by configuration, optionally in worker
processes, and merged back in frontier order so the result does not depend on
the worker count.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Set, Tuple

from .bounds import Bounds
from .words import Word, format_word, is_prefix, sort_words
from ..arrays.grid import ArrayObject
from ..membrane.configuration import Configuration
from ..membrane.runner import RunStatus, Trace
from ..membrane.system import PSystem
from ..membrane.transitions import ChoiceSet, is_halting, successors
from ..shapes.final import match_final
from ..utils.deduplication import StateDeduplicator
from ..utils.logger import get_logger


logger = get_logger(__name__)

StateKey = Tuple[tuple, Word]


class Verdict(Enum):
    """Answer of a bounded membership query."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass
class EnumerationResult:
    """Label words found within bounds, with search statistics and witnesses."""

    words: Set[Word] = field(default_factory=set)
    exhaustive: bool = True
    states_visited: int = 0
    dead_ends: int = 0
    witnesses: Dict[Word, Trace] = field(default_factory=dict)
    outputs: Dict[Word, Set[ArrayObject]] = field(default_factory=dict)
    truncated_by: Set[str] = field(default_factory=set)

    def sorted_words(self) -> List[Word]:
        return sort_words(self.words)

    def footer(self) -> str:
        return (f"# exhaustive={str(self.exhaustive).lower()} "
                f"states={self.states_visited} dead_ends={self.dead_ends}")


class Expansion(NamedTuple):
    """Everything the search needs to know about one configuration."""

    halting: bool
    accepted: bool
    steps: List[Tuple[ChoiceSet, Configuration]]


def expand(s: PSystem, c: Configuration) -> Expansion:
    if is_halting(c, s):
        return Expansion(True, match_final(c, s), [])
    return Expansion(False, False, successors(c, s))


_worker_system: Optional[PSystem] = None


def _init_worker(s: PSystem) -> None:
    global _worker_system
    _worker_system = s


def _expand_in_worker(c: Configuration) -> Expansion:
    return expand(_worker_system, c)


class LabelSearch:
    """
    One bounded search; ``target`` restricts it to prefixes of a single word.

    Steps pruned only because their word would leave the length bound (or
    stop being a prefix of ``target``) do not make the result inexhaustive;
    every other bound does.
    """

    def __init__(self, s: PSystem, b: Bounds, jobs: int = 1, target: Optional[Word] = None):
        self.system = s
        self.bounds = b
        self.jobs = max(1, jobs)
        self.target = target
        self.max_len = len(target) if target is not None else b.max_label_len
        self.dedup = StateDeduplicator(b.max_states)
        self.parents: Dict[StateKey, Tuple[Optional[StateKey], Optional[ChoiceSet]]] = {}
        self.result = EnumerationResult()

    def run(self) -> EnumerationResult:
        s = self.system
        initial = s.initial_configuration()
        root: StateKey = (initial.key, ())
        self.dedup.add_if_absent(root)
        self.parents[root] = (None, None)
        frontier: List[Tuple[Configuration, Word]] = [(initial, ())]
        depth = 0

        pool = None
        if self.jobs > 1:
            pool = ProcessPoolExecutor(max_workers=self.jobs, initializer=_init_worker, initargs=(s,))
        try:
            while frontier:
                logger.debug(f"Level {depth}: {len(frontier)} state(s)")
                expansions = self._expand_level(frontier, pool)
                next_frontier = []
                for config, prefix in frontier:
                    exp = expansions[config.key]
                    self._visit(config, prefix, depth, exp, next_frontier)
                frontier = next_frontier
                depth += 1
        finally:
            if pool is not None:
                pool.shutdown()

        result = self.result
        result.states_visited = len(self.dedup.seen)
        result.exhaustive = not result.truncated_by
        if result.truncated_by:
            logger.warning(f"Search of {s.name} truncated by {sorted(result.truncated_by)}")
        logger.info(
            f"{s.name}: {len(result.words)} word(s), {result.states_visited} states, "
            f"{result.dead_ends} dead end(s), exhaustive={result.exhaustive}"
        )
        return result

    def _expand_level(self, frontier, pool) -> Dict[tuple, Expansion]:
        unique: Dict[tuple, Configuration] = {}
        for config, _ in frontier:
            unique.setdefault(config.key, config)
        configs = list(unique.values())
        if pool is None:
            expanded = [expand(self.system, c) for c in configs]
        else:
            chunk = max(1, len(configs) // (self.jobs * 4))
            expanded = list(pool.map(_expand_in_worker, configs, chunksize=chunk))
        return {c.key: e for c, e in zip(configs, expanded)}

    def _visit(self, config: Configuration, prefix: Word, depth: int, exp: Expansion, out: list) -> None:
        b = self.bounds
        result = self.result
        key = (config.key, prefix)

        if exp.halting:
            if exp.accepted:
                self._accept(config, prefix, key)
            return
        if not exp.steps:
            result.dead_ends += 1
            return
        if depth >= b.max_steps:
            result.truncated_by.add("max_steps")
            return

        for choice, nxt in exp.steps:
            word = prefix + (choice.step_label,) if choice.step_label is not None else prefix
            if len(word) > self.max_len:
                continue
            if self.target is not None and not is_prefix(word, self.target):
                continue
            if nxt.largest_array > b.max_cells_per_array:
                result.truncated_by.add("max_cells_per_array")
                continue
            if nxt.total_arrays > b.max_total_arrays:
                result.truncated_by.add("max_total_arrays")
                continue
            child: StateKey = (nxt.key, word)
            if self.dedup.is_duplicate(child):
                continue
            if not self.dedup.add_if_absent(child):
                result.truncated_by.add("max_states")
                continue
            self.parents[child] = (key, choice)
            out.append((nxt, word))

    def _accept(self, config: Configuration, word: Word, key: StateKey) -> None:
        result = self.result
        output = set(config.arrays_in(self.system.tree.output))
        result.outputs.setdefault(word, set()).update(output)
        if word in result.words:
            return
        result.words.add(word)
        result.witnesses[word] = self._witness(key, config)
        logger.debug(f"Accepted {format_word(word)}")

    def _witness(self, key: StateKey, final: Configuration) -> Trace:
        steps = []
        current = key
        while True:
            parent, choice = self.parents[current]
            if parent is None:
                break
            steps.append(choice)
            current = parent
        steps.reverse()
        return Trace(
            initial=self.system.initial_configuration(),
            steps=steps,
            final=final,
            status=RunStatus.HALTED,
            accepted=True,
        )


def enumerate_label_language(s: PSystem, b: Bounds, jobs: int = 1) -> EnumerationResult:
    """
    Label words of accepted halting computations with at most ``b.max_label_len`` labels.

    Args:
        s: System to explore
        b: Search bounds
        jobs: Worker processes used to expand each search level

    Returns:
        EnumerationResult; ``exhaustive`` is False when a bound other than the
        word length cut off a live branch
    """
    return LabelSearch(s, b, jobs).run()


def accepts(s: PSystem, w: Word, b: Bounds, jobs: int = 1) -> Verdict:
    """Decide within bounds whether some accepted computation emits exactly ``w``."""
    result = LabelSearch(s, b, jobs, target=tuple(w)).run()
    if tuple(w) in result.words:
        return Verdict.YES
    return Verdict.NO if result.exhaustive else Verdict.UNKNOWN


def collect_outputs(s: PSystem, b: Bounds, jobs: int = 1) -> Set[ArrayObject]:
    """Canonical arrays left in the output membrane by accepted halting computations."""
    result = enumerate_label_language(s, b, jobs)
    found: Set[ArrayObject] = set()
    for arrays in result.outputs.values():
        found.update(arrays)
    return found
