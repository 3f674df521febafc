"""Closed-form label languages of the shipped example systems."""

from typing import Callable, Dict, Set

from ..language.words import Word
from ..utils.exceptions import UnknownNameError


def _pi1(max_len: int) -> Set[Word]:
    return {("a",) * (16 * n) for n in range(1, max_len // 16 + 1)}


def _pi2(max_len: int) -> Set[Word]:
    words = set()
    n = 0
    while 16 * n + 24 <= max_len:
        words.add(("a",) * (8 * n + 4) + ("b",) * (8 * n + 20))
        n += 1
    return words


def _pi5(max_len: int) -> Set[Word]:
    return {("a",) * n + ("b",) * n for n in range(1, max_len // 2 + 1)}


CLOSED_FORMS: Dict[str, Callable[[int], Set[Word]]] = {
    "pi1": _pi1,
    "pi2": _pi2,
    "pi5": _pi5,
}


def example_language(name: str, max_len: int) -> Set[Word]:
    """
    Words of length at most ``max_len`` in the language of a named example.

    pi1 is a^(16n), pi2 is a^(8n+4) b^(8n+20), pi5 is a^n b^n.

    Raises:
        UnknownNameError: If ``name`` is not one of the examples
    """
    try:
        form = CLOSED_FORMS[name]
    except KeyError:
        raise UnknownNameError(f"No closed form for {name!r}; known: {sorted(CLOSED_FORMS)}")
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    return form(max_len)
