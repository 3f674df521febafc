"""Sequential 8-directional array grammars."""

from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, List, Set, Tuple

from .grid import ArrayObject, Symbol, canonicalize
from .rewrite import ThetaRule, successful_applications
from ..language.bounds import Bounds
from ..utils.logger import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class ArrayGrammar:
    """G = (N, T, P, S); rule targets and labels are ignored."""

    nonterminals: FrozenSet[Symbol]
    terminals: FrozenSet[Symbol]
    rules: Tuple[ThetaRule, ...]
    start: Symbol

    def problems(self) -> List[str]:
        found = []
        overlap = self.nonterminals & self.terminals
        if overlap:
            found.append(f"symbols both terminal and nonterminal: {sorted(overlap)}")
        if self.start not in self.nonterminals:
            found.append(f"start symbol {self.start} is not a nonterminal")
        alphabet = self.nonterminals | self.terminals
        for rule in self.rules:
            found.extend(rule.problems(self.terminals))
            unknown = rule.symbols() - alphabet
            if unknown:
                found.append(f"rule {rule.id}: unknown symbols {sorted(unknown)}")
        return found


@dataclass
class GrammarDerivation:
    """Terminal arrays reached by a bounded derivation."""

    arrays: Set[ArrayObject] = field(default_factory=set)
    truncated: bool = False
    explored: int = 0


def derive_grammar(g: ArrayGrammar, limits: Bounds) -> GrammarDerivation:
    """
    Breadth-first closure of rule application from the start symbol.

    ``limits.max_steps`` bounds derivation length, ``limits.max_cells_per_array``
    the size of any sentential array and ``limits.max_states`` the number of
    distinct arrays explored. Hitting any of them sets ``truncated``.
    """
    result = GrammarDerivation()
    start = ArrayObject({(0, 0): g.start})
    seen = {start}
    queue = deque([(start, 0)])

    while queue:
        array, depth = queue.popleft()
        result.explored += 1

        if array.symbols() <= g.terminals:
            result.arrays.add(array)
            continue

        if depth >= limits.max_steps:
            result.truncated = True
            continue

        successors = [
            canonicalize(after)
            for rule in g.rules
            for _, after in successful_applications(array, rule)
        ]
        if not successors:
            # A dead sentential array: nonterminals left, nothing applies
            continue
        for after in successors:
            if len(after) > limits.max_cells_per_array:
                result.truncated = True
                continue
            if after in seen:
                continue
            if len(seen) >= limits.max_states:
                result.truncated = True
                continue
            seen.add(after)
            queue.append((after, depth + 1))

    logger.debug(f"Grammar derivation explored {result.explored} arrays, "
                 f"{len(result.arrays)} terminal, truncated={result.truncated}")
    return result
