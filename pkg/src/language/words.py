"""Label words: tuples of label symbols, their text form and ordering."""

from typing import Iterable, List, Tuple

Word = Tuple[str, ...]

EMPTY_WORD = "_"


def as_word(text: str) -> Word:
    """
    Read a word from text.

    Space-separated text is split into tokens; otherwise every character is a
    label. ``_`` and the empty string denote the empty word.
    """
    text = text.strip()
    if not text or text == EMPTY_WORD:
        return ()
    if any(ch.isspace() for ch in text):
        return tuple(text.split())
    return tuple(text)


def format_word(w: Word) -> str:
    """Concatenate single-character labels, otherwise join with spaces."""
    if not w:
        return EMPTY_WORD
    if all(len(sym) == 1 for sym in w):
        return "".join(w)
    return " ".join(w)


def shortlex_key(w: Word) -> Tuple[int, Word]:
    return (len(w), w)


def sort_words(words: Iterable[Word]) -> List[Word]:
    """Words in shortlex order: by length, then lexicographically."""
    return sorted(words, key=shortlex_key)


def is_prefix(prefix: Word, w: Word) -> bool:
    return len(prefix) <= len(w) and w[:len(prefix)] == prefix
