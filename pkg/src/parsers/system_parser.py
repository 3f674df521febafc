"""Parser for the line-oriented system description language (.aps files)."""

import re
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..arrays.grid import ArrayObject, Direction, parse_grid
from ..arrays.rewrite import OccurrencePolicy, TargetSpec, ThetaRule
from ..membrane.system import MembraneTree, Mode, PSystem, Region, ensure_valid
from ..shapes.final import FinalSpec, PredicateKind, RegionPredicate
from ..utils.exceptions import ArrayPSystemError, ParseError
from ..utils.logger import get_logger
from ..utils.validators import validate_degree, validate_symbol


logger = get_logger(__name__)

TOKEN = re.compile(r'\S+')
SHAPE_CALL = re.compile(r'^([A-Za-z][\w-]*)\((.*)\)$')
EMPTY_LABEL = "_"


@dataclass
class SystemFile:
    """A parsed system together with where its parts were written."""

    system: PSystem
    source: str = "<text>"
    rule_lines: Dict[Tuple[str, str], int] = field(default_factory=dict)
    directive_lines: Dict[str, int] = field(default_factory=dict)


class _Line:
    """One source line split into (column, token) pairs."""

    def __init__(self, number: int, text: str):
        self.number = number
        self.text = text
        self.tokens = [(m.start() + 1, m.group()) for m in TOKEN.finditer(text)]

    @property
    def words(self) -> List[str]:
        return [tok for _, tok in self.tokens]

    def error(self, message: str, index: int = 0) -> ParseError:
        column = self.tokens[index][0] if index < len(self.tokens) else len(self.text) + 1
        return ParseError(message, self.number, column)


class SystemParser:
    """Builds a PSystem from description text, one directive per line."""

    def __init__(self, text: str, source: str = "<text>"):
        self.source = source
        self.lines = [
            _Line(i, raw.split("#", 1)[0].rstrip())
            for i, raw in enumerate(text.splitlines(), start=1)
        ]
        self.pos = 0

        self.name: Optional[str] = None
        self.output: Optional[str] = None
        self.terminals: Optional[frozenset] = None
        self.nonterminals: Optional[frozenset] = None
        self.labels: Optional[frozenset] = None
        self.mode = Mode.RESTRICTED
        self.policy = OccurrencePolicy.ANY
        self.init: Dict[str, List[ArrayObject]] = defaultdict(list)
        self.rules: Dict[str, List[ThetaRule]] = {}
        self.priorities: Dict[str, List[Tuple[str, str]]] = defaultdict(list)
        self.finals: Dict[str, RegionPredicate] = {}
        self.exact: Dict[str, List[ArrayObject]] = defaultdict(list)
        self._tree_parts: Optional[Tuple[Tuple[str, ...], Dict[str, str]]] = None
        self.rule_lines: Dict[Tuple[str, str], int] = {}
        self.directive_lines: Dict[str, int] = {}

    def parse(self) -> SystemFile:
        """
        Parse every directive and validate the resulting system.

        Raises:
            ParseError: On malformed text, with line and column
            ValidationError: If the system is not well formed
        """
        handlers = {
            "system": self._system,
            "membranes": self._membranes,
            "output": self._output,
            "terminals": self._terminals,
            "nonterminals": self._nonterminals,
            "labels": self._labels,
            "mode": self._mode,
            "policy": self._policy,
            "init": self._init,
            "rules": self._rules,
            "priority": self._priority,
            "final": self._final,
        }
        while self.pos < len(self.lines):
            line = self.lines[self.pos]
            self.pos += 1
            if not line.tokens:
                continue
            keyword = line.words[0]
            handler = handlers.get(keyword)
            if handler is None:
                raise line.error(f"unknown directive {keyword!r}")
            self.directive_lines.setdefault(keyword, line.number)
            handler(line)

        system = self._build()
        return SystemFile(system, self.source, self.rule_lines, self.directive_lines)

    # Header directives

    def _system(self, line: _Line) -> None:
        if len(line.words) != 2:
            raise line.error("expected: system <name>")
        self.name = line.words[1]

    def _membranes(self, line: _Line) -> None:
        text = line.text.strip()[len("membranes"):]
        nodes: List[str] = []
        parent: Dict[str, str] = {}
        pieces = re.findall(r'\(|\)|[^\s()]+', text)
        if not pieces:
            raise line.error("expected a membrane structure such as (1 (2) (3))")

        stack: List[str] = []
        expect_id = False
        closed_root = False
        for piece in pieces:
            if closed_root:
                raise line.error("text after the skin membrane was closed", len(line.tokens) - 1)
            if piece == "(":
                if expect_id:
                    raise line.error("membrane id expected after '('")
                expect_id = True
            elif piece == ")":
                if expect_id or not stack:
                    raise line.error("unbalanced ')' in membrane structure")
                stack.pop()
                closed_root = not stack
            else:
                if not expect_id:
                    raise line.error(f"membrane id {piece!r} must follow '('")
                if piece in nodes:
                    raise line.error(f"membrane id {piece} appears twice")
                if stack:
                    parent[piece] = stack[-1]
                nodes.append(piece)
                stack.append(piece)
                expect_id = False
        if stack or expect_id:
            raise line.error("unbalanced '(' in membrane structure")
        self._tree_parts = (tuple(nodes), parent)

    def _output(self, line: _Line) -> None:
        if len(line.words) != 2:
            raise line.error("expected: output <membrane id>")
        self.output = line.words[1]

    def _symbols(self, line: _Line) -> frozenset:
        symbols = []
        for index, token in enumerate(line.words[1:], start=1):
            try:
                symbols.append(validate_symbol(token))
            except ArrayPSystemError as e:
                raise line.error(str(e), index)
        return frozenset(symbols)

    def _terminals(self, line: _Line) -> None:
        self.terminals = self._symbols(line)

    def _nonterminals(self, line: _Line) -> None:
        self.nonterminals = self._symbols(line)

    def _labels(self, line: _Line) -> None:
        self.labels = self._symbols(line)

    def _mode(self, line: _Line) -> None:
        try:
            self.mode = Mode(line.words[1] if len(line.words) == 2 else "")
        except ValueError:
            raise line.error("expected: mode restricted|unrestricted", 1)

    def _policy(self, line: _Line) -> None:
        try:
            self.policy = OccurrencePolicy(line.words[1] if len(line.words) == 2 else "")
        except ValueError:
            raise line.error("expected: policy any|leftmost", 1)

    # Blocks

    def _block(self, opener: _Line) -> Tuple[List[_Line], str]:
        """Lines up to the closing brace, and the grid text they form."""
        body = []
        while self.pos < len(self.lines):
            line = self.lines[self.pos]
            self.pos += 1
            if line.words == ["}"]:
                return body, "\n".join(l.text for l in body)
            body.append(line)
        raise opener.error("block opened here is never closed", len(opener.tokens) - 1)

    def _grid(self, opener: _Line) -> ArrayObject:
        body, text = self._block(opener)
        try:
            return parse_grid(text)
        except ArrayPSystemError as e:
            line = body[0] if body else opener
            raise ParseError(f"bad grid: {e}", line.number, 1)

    def _init(self, line: _Line) -> None:
        if len(line.words) != 3 or line.words[2] != "{":
            raise line.error("expected: init <membrane id> {")
        self.init[line.words[1]].append(self._grid(line))

    def _rules(self, line: _Line) -> None:
        if len(line.words) != 3 or line.words[2] != "{":
            raise line.error("expected: rules <membrane id> {")
        region = line.words[1]
        rules = self.rules.setdefault(region, [])
        body, _ = self._block(line)
        for rule_line in body:
            if not rule_line.tokens:
                continue
            rule = self._rule(rule_line)
            if any(r.id == rule.id for r in rules):
                raise rule_line.error(f"duplicate rule id {rule.id} in region {region}", 1)
            self.rule_lines[(region, rule.id)] = rule_line.number
            rules.append(rule)

    def _rule(self, line: _Line) -> ThetaRule:
        """rule <id> <label|_> : <lhs> -> <rhs> @ <deg> [tar <target>]"""
        words = line.words
        if len(words) < 8 or words[0] != "rule" or words[3] != ":":
            raise line.error("expected: rule <id> <label|_> : <lhs> -> <rhs> @ <deg> [tar <target>]")
        try:
            arrow = words.index("->")
            at = words.index("@")
        except ValueError:
            raise line.error("rule needs both '->' and '@'")
        if not 4 < arrow < at - 1:
            raise line.error("rule sides must be non-empty and in the order lhs -> rhs @", arrow)

        lhs = self._tokens(line, 4, arrow)
        rhs = self._tokens(line, arrow + 1, at)
        if at + 1 >= len(words):
            raise line.error("direction missing after '@'", at)
        degree = validate_degree(words[at + 1], line.number, line.tokens[at + 1][0])

        rest = words[at + 2:]
        target = TargetSpec()
        if rest:
            if rest[0] != "tar" or len(rest) != 2:
                raise line.error("expected: tar here|out|in|in.<id>", at + 2)
            try:
                target = TargetSpec.parse(rest[1])
            except ValueError:
                raise line.error(f"unknown target {rest[1]!r}", at + 3)

        label = None if words[2] == EMPTY_LABEL else words[2]
        return ThetaRule(words[1], label, lhs, rhs, Direction.from_degrees(degree), target)

    def _tokens(self, line: _Line, start: int, stop: int) -> Tuple[str, ...]:
        symbols = []
        for index in range(start, stop):
            try:
                symbols.append(validate_symbol(line.words[index]))
            except ArrayPSystemError as e:
                raise line.error(str(e), index)
        return tuple(symbols)

    def _priority(self, line: _Line) -> None:
        """priority <id> : g1 > g2 > ...; every group dominates every later one."""
        words = line.words
        if len(words) < 5 or words[2] != ":":
            raise line.error("expected: priority <membrane id> : <ids> > <ids>")
        groups: List[List[str]] = [[]]
        for token in words[3:]:
            if token == ">":
                groups.append([])
            else:
                groups[-1].append(token)
        if len(groups) < 2 or any(not g for g in groups):
            raise line.error("each side of '>' needs at least one rule id", 3)
        for i, higher in enumerate(groups):
            for lower in groups[i + 1:]:
                self.priorities[words[1]].extend((hi, lo) for hi in higher for lo in lower)

    def _final(self, line: _Line) -> None:
        """final <id> : empty|all-terminal|<shape>(<params>)|exact {"""
        words = line.words
        if len(words) < 4 or words[2] != ":":
            raise line.error("expected: final <membrane id> : <predicate>")
        region = words[1]
        spec = " ".join(words[3:])

        if spec == "exact {":
            if region in self.finals and region not in self.exact:
                raise line.error(f"region {region} already has a final predicate", 1)
            self.exact[region].append(self._grid(line))
            self.finals[region] = RegionPredicate.exact(self.exact[region])
            return
        if region in self.finals:
            raise line.error(f"region {region} already has a final predicate", 1)
        if spec == PredicateKind.EMPTY.value:
            self.finals[region] = RegionPredicate.empty()
        elif spec == PredicateKind.ALL_TERMINAL.value:
            self.finals[region] = RegionPredicate.all_terminal()
        else:
            m = SHAPE_CALL.match(spec.replace(" ", ""))
            if not m:
                raise line.error(f"unknown final predicate {spec!r}", 3)
            params = [p for p in m.group(2).split(",") if p]
            self.finals[region] = RegionPredicate.of_shape(m.group(1), *params)

    # Assembly

    def _require(self, value, directive: str):
        if value is None:
            last = self.lines[-1].number if self.lines else 0
            raise ParseError(f"missing required directive {directive!r}", last, 1)
        return value

    def _build(self) -> PSystem:
        nodes, parent = self._require(self._tree_parts, "membranes")
        output = self._require(self.output, "output")
        terminals = self._require(self.terminals, "terminals")
        if not self.finals:
            self._require(None, "final")

        rule_symbols = {sym for rules in self.rules.values() for r in rules for sym in r.symbols()}
        if self.nonterminals is not None:
            alphabet = self.nonterminals | terminals
        else:
            init_symbols = {sym for arrays in self.init.values() for a in arrays for sym in a.symbols()}
            exact_symbols = {sym for arrays in self.exact.values() for a in arrays for sym in a.symbols()}
            alphabet = frozenset(init_symbols | rule_symbols | exact_symbols) | terminals

        labels = self.labels
        if labels is None:
            labels = frozenset(r.label for rules in self.rules.values() for r in rules if r.label is not None)

        regions = {
            region: Region.build(region, self.rules.get(region, ()), self.priorities.get(region, ()))
            for region in sorted(set(self.rules) | set(self.priorities))
        }

        system = PSystem(
            name=self.name or Path(self.source).stem,
            alphabet=alphabet,
            terminals=terminals,
            tree=MembraneTree(nodes, parent, output),
            init={region: tuple(arrays) for region, arrays in self.init.items()},
            regions=regions,
            labels=labels,
            mode=self.mode,
            policy=self.policy,
            final=FinalSpec(dict(self.finals)),
        )
        logger.debug(f"Parsed system {system.name}: {len(system.all_rules())} rules in {len(regions)} region(s)")
        return ensure_valid(system)


def parse_system_file(text: str, source: str = "<text>") -> SystemFile:
    return SystemParser(text, source).parse()


def parse_system(text: str, source: str = "<text>") -> PSystem:
    """Parse and validate description text."""
    return parse_system_file(text, source).system


def load_system(path: Union[str, Path]) -> PSystem:
    """
    Read and validate an .aps file.

    Raises:
        ParseError: With line and column of the first syntax problem
        ValidationError: With every well-formedness problem
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")
    return parse_system(text, str(path))
