"""
Reference languages of string grammars, computed without any array machinery.

Two independent enumerators are provided so that each can check the other:
``grammar_language`` expands leftmost derivations with shortest-yield pruning,
``naive_language`` rewrites every occurrence and prunes on form length only.
"""

import math
from collections import deque
from typing import Dict, Optional, Set, Tuple

from ..language.words import Word
from ..translate.grammars import StringGrammar
from ..utils.logger import get_logger


logger = get_logger(__name__)

Form = Tuple[str, ...]


def min_yields(g: StringGrammar) -> Dict[str, float]:
    """Length of the shortest terminal word each nonterminal derives (inf if none)."""
    best: Dict[str, float] = {n: math.inf for n in g.nonterminals}
    changed = True
    while changed:
        changed = False
        for p in g.productions:
            length = sum(best.get(sym, 1) for sym in p.body)
            if length < best[p.head]:
                best[p.head] = length
                changed = True
    return best


def grammar_language(g: StringGrammar, max_len: int) -> Set[Word]:
    """
    Every terminal word of length at most ``max_len`` that ``g`` derives.

    Sentential forms are expanded at their leftmost nonterminal; a form is
    dropped once its shortest possible yield exceeds ``max_len``.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")

    shortest = min_yields(g)
    by_head: Dict[str, list] = {}
    for p in g.productions:
        by_head.setdefault(p.head, []).append(p.body)

    def weight(form: Form) -> float:
        return sum(shortest.get(sym, 1) for sym in form)

    words: Set[Word] = set()
    start: Form = (g.start,)
    if weight(start) > max_len:
        return words
    queue = deque([start])
    seen = {start}

    while queue:
        form = queue.popleft()
        position = next((i for i, sym in enumerate(form) if sym in g.nonterminals), None)
        if position is None:
            words.add(form)
            continue
        for body in by_head.get(form[position], ()):
            nxt = form[:position] + body + form[position + 1:]
            if nxt in seen or weight(nxt) > max_len:
                continue
            seen.add(nxt)
            queue.append(nxt)

    logger.debug(f"Grammar {g.name}: {len(words)} word(s) up to length {max_len}, {len(seen)} forms")
    return words


def naive_language(g: StringGrammar, max_len: int, max_depth: Optional[int] = None) -> Set[Word]:
    """
    Brute-force derivation enumerator rewriting every nonterminal occurrence.

    Forms longer than ``max_len`` are dropped; this is sound only for grammars
    without empty productions. Derivations stop after ``max_depth`` steps
    (default ``4 * max_len``).
    """
    depth_limit = max_depth if max_depth is not None else 4 * max_len
    words: Set[Word] = set()
    level = {(g.start,)}
    seen = set(level)

    for _ in range(depth_limit + 1):
        nxt_level = set()
        for form in level:
            if all(sym not in g.nonterminals for sym in form):
                words.add(form)
                continue
            for i, sym in enumerate(form):
                if sym not in g.nonterminals:
                    continue
                for p in g.productions:
                    if p.head != sym:
                        continue
                    nxt = form[:i] + p.body + form[i + 1:]
                    if len(nxt) <= max_len and nxt not in seen:
                        seen.add(nxt)
                        nxt_level.add(nxt)
        if not nxt_level:
            break
        level = nxt_level

    return words
