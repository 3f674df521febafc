"""Translator-versus-oracle comparisons."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Sequence, Set

from .closed_forms import example_language
from .grammar_oracle import grammar_language
from .tm_oracle import tm_language
from ..language.bounds import Bounds
from ..language.enumerator import EnumerationResult, enumerate_label_language
from ..language.words import Word, sort_words
from ..membrane.system import PSystem
from ..translate.grammars import Cfg, RegGrammar, cf_to_aps, eliminate_self_recursion, reg_to_aps
from ..translate.turing import TuringMachine, tm_to_aps
from ..utils.logger import get_logger


logger = get_logger(__name__)


class Verdict(Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class VerificationReport:
    """Outcome of comparing a system's label language with a reference language."""

    source: str
    translator: str
    k: int
    verdict: Verdict
    engine_words: Set[Word] = field(default_factory=set)
    oracle_words: Set[Word] = field(default_factory=set)
    exhaustive: bool = True
    states_visited: int = 0
    truncated_by: Set[str] = field(default_factory=set)

    @property
    def missing(self) -> list:
        """Reference words the system did not produce."""
        return sort_words(self.oracle_words - self.engine_words)

    @property
    def extra(self) -> list:
        """Words the system produced outside the reference language."""
        return sort_words(self.engine_words - self.oracle_words)

    def counts_by_length(self) -> Dict[int, tuple]:
        """length -> (engine count, oracle count)."""
        return {
            n: (sum(1 for w in self.engine_words if len(w) == n), sum(1 for w in self.oracle_words if len(w) == n))
            for n in range(self.k + 1)
        }


def _verdict(found: Set[Word], reference: Set[Word], exhaustive: bool) -> Verdict:
    if found - reference:
        return Verdict.MISMATCH
    if reference - found:
        return Verdict.MISMATCH if exhaustive else Verdict.INCONCLUSIVE
    return Verdict.MATCH if exhaustive else Verdict.INCONCLUSIVE


def compare(
    system: PSystem,
    reference: Set[Word],
    source: str,
    translator: str,
    k: int,
    bounds: Bounds,
    jobs: int = 1,
) -> VerificationReport:
    """
    Enumerate ``system`` up to length ``k`` and compare with ``reference``.

    Extra words give MISMATCH. Missing words give MISMATCH only when the
    search was exhaustive; otherwise a truncated search is INCONCLUSIVE.
    """
    search_bounds = Bounds(
        max_label_len=k,
        max_steps=bounds.max_steps,
        max_cells_per_array=bounds.max_cells_per_array,
        max_total_arrays=bounds.max_total_arrays,
        max_states=bounds.max_states,
    )
    result: EnumerationResult = enumerate_label_language(system, search_bounds, jobs)
    verdict = _verdict(result.words, reference, result.exhaustive)
    if verdict is Verdict.INCONCLUSIVE:
        logger.warning(f"{translator} {source}: search truncated by {sorted(result.truncated_by)}")
    logger.info(f"{translator} {source} up to length {k}: {verdict.value}")
    return VerificationReport(
        source=source,
        translator=translator,
        k=k,
        verdict=verdict,
        engine_words=set(result.words),
        oracle_words=set(reference),
        exhaustive=result.exhaustive,
        states_visited=result.states_visited,
        truncated_by=set(result.truncated_by),
    )


def verify_regular(g: RegGrammar, k: int, bounds: Bounds, jobs: int = 1) -> VerificationReport:
    system = reg_to_aps(eliminate_self_recursion(g))
    return compare(system, grammar_language(g, k), g.name, "reg_to_aps", k, bounds, jobs)


def verify_context_free(g: Cfg, k: int, bounds: Bounds, jobs: int = 1) -> VerificationReport:
    system = cf_to_aps(g)
    return compare(system, grammar_language(g, k), g.name, "cf_to_aps", k, bounds, jobs)


def verify_machine(
    t: TuringMachine,
    alphabet: Sequence[str],
    k: int,
    bounds: Bounds,
    jobs: int = 1,
) -> VerificationReport:
    system = tm_to_aps(t, alphabet)
    reference = tm_language(t, alphabet, k, bounds.max_steps)
    return compare(system, reference, t.name, "tm_to_aps", k, bounds, jobs)


def verify_example(s: PSystem, name: str, k: int, bounds: Bounds, jobs: int = 1) -> VerificationReport:
    return compare(s, example_language(name, k), s.name, f"closed form {name}", k, bounds, jobs)
