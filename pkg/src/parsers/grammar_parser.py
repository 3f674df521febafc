"""Readers for string grammar files and Turing machine files."""

import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Type, TypeVar, Union

from ..translate.grammars import Cfg, Production, RegGrammar, StringGrammar
from ..translate.turing import REQUIRED_TAPE, Action, Move, TuringMachine
from ..utils.exceptions import ParseError, ValidationError
from ..utils.logger import get_logger


logger = get_logger(__name__)

G = TypeVar("G", bound=StringGrammar)

TRANSITION = re.compile(
    r'^(?P<q>[^,\s]+)\s*,\s*(?P<a>[^,\s]+)\s*->\s*(?P<p>[^,\s]+)\s*,\s*(?P<b>[^,\s]+)\s*,\s*(?P<m>[LR])$'
)


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _header(line: str) -> Optional[Tuple[str, str]]:
    key, sep, value = line.partition(":")
    if sep and "->" not in line and re.fullmatch(r'[a-z]+', key.strip()):
        return key.strip(), value.strip()
    return None


def parse_grammar(text: str, kind: Type[G], name: str = "grammar") -> G:
    """
    Read one production per line, ``A -> a B``.

    Heads are the nonterminals. A ``nonterminals:`` line may declare more, and
    a body symbol starting with an uppercase letter is taken as a nonterminal;
    every nonterminal needs at least one production. All other symbols are
    terminals. The start symbol is given by a ``start:`` line or defaults to
    the first head.

    Raises:
        ParseError: On a malformed line or a nonterminal without productions
        ValidationError: If the productions do not fit ``kind``
    """
    productions: List[Production] = []
    start = None
    start_line = 0
    declared: Dict[str, int] = {}
    for number, line in _content_lines(text):
        header = _header(line)
        if header:
            key, value = header
            if key == "start" and value:
                start, start_line = value, number
            elif key == "nonterminals" and value:
                declared.update((sym, number) for sym in value.split())
            else:
                raise ParseError(f"unknown header {key!r}", number, 1)
            continue
        head, sep, body = line.partition("->")
        head_tokens = head.split()
        if not sep or len(head_tokens) != 1:
            raise ParseError("expected: <Nonterminal> -> <symbols>", number, 1)
        symbols = tuple(body.split())
        if not symbols:
            raise ParseError("empty right-hand side", number, line.index("->") + 3)
        for sym in symbols:
            if sym[0].isupper():
                declared.setdefault(sym, number)
        productions.append(Production(head_tokens[0], symbols))

    if not productions:
        raise ParseError("grammar has no productions", 0, 0)

    heads = frozenset(p.head for p in productions)
    if start is not None and start not in heads:
        raise ParseError(f"start symbol {start} has no productions", start_line, 1)
    for sym, number in declared.items():
        if sym not in heads:
            raise ParseError(f"nonterminal {sym} has no productions", number, 1)

    terminals = frozenset(sym for p in productions for sym in p.body) - heads
    grammar = kind(
        nonterminals=heads,
        terminals=terminals,
        productions=tuple(dict.fromkeys(productions)),
        start=start or productions[0].head,
        name=name,
    )

    problems = grammar.problems()
    if problems:
        raise ValidationError(problems)
    return grammar


def load_reg_grammar(path: Union[str, Path]) -> RegGrammar:
    path = Path(path)
    return parse_grammar(_read(path), RegGrammar, path.stem)


def load_cfg(path: Union[str, Path]) -> Cfg:
    path = Path(path)
    return parse_grammar(_read(path), Cfg, path.stem)


def parse_machine(text: str, name: str = "machine") -> TuringMachine:
    """
    Read a machine: ``start:`` and ``accept:`` headers and ``q,a -> p,b,R`` lines.

    States and the tape alphabet are collected from the transitions; the tape
    alphabet always contains 0, 1 and x.

    Raises:
        ParseError: On malformed lines or a second transition for the same pair
        ValidationError: If the machine is malformed
    """
    start = None
    accepting: List[str] = []
    transitions: Dict[Tuple[str, str], Action] = {}
    for number, line in _content_lines(text):
        header = _header(line)
        if header:
            key, value = header
            if key == "start":
                start = value
            elif key == "accept":
                accepting.extend(value.replace(",", " ").split())
            else:
                raise ParseError(f"unknown header {key!r}", number, 1)
            continue
        m = TRANSITION.match(line)
        if not m:
            raise ParseError("expected: state,symbol -> state,symbol,L|R", number, 1)
        pair = (m.group("q"), m.group("a"))
        if pair in transitions:
            raise ParseError(f"second transition for {pair[0]},{pair[1]}", number, 1)
        transitions[pair] = Action(m.group("p"), m.group("b"), Move(m.group("m")))

    if start is None:
        raise ParseError("missing 'start:' header", 0, 0)

    states = {start, *accepting}
    tape = set(REQUIRED_TAPE)
    for (q, a), act in transitions.items():
        states.update((q, act.state))
        tape.update((a, act.write))

    machine = TuringMachine(
        states=frozenset(states),
        tape_alphabet=frozenset(tape),
        transitions=transitions,
        start=start,
        accepting=frozenset(accepting),
        name=name,
    )
    problems = machine.problems()
    if problems:
        raise ValidationError(problems)
    return machine


def load_machine(path: Union[str, Path]) -> TuringMachine:
    path = Path(path)
    return parse_machine(_read(path), path.stem)


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")
