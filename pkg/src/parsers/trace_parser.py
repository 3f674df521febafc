"""Reader for recorded computation traces."""

import re
from pathlib import Path
from typing import List, Union

from ..arrays.grid import Pixel
from ..arrays.rewrite import Match
from ..membrane.runner import Trace
from ..membrane.system import PSystem
from ..membrane.transitions import Assignment, ChoiceSet
from ..utils.exceptions import ParseError


ASSIGNMENT = re.compile(
    r'^(?P<membrane>[^#\s]+)#(?P<index>\d+):(?P<rule>[^@\s]+)@\((?P<x>-?\d+),(?P<y>-?\d+)\)->(?P<dest>\S+)$'
)
EMPTY = "_"
DISCARDED = "-"


def parse_trace(text: str, s: PSystem) -> Trace:
    """
    Read one step per line: ``<label|_> <membrane>#<i>:<rule>@(x,y)-><dest|->`` ...

    Lines starting with ``#`` are comments. Rule ids are resolved in the region
    of their membrane; legality is left to ``replay``.

    Raises:
        ParseError: On malformed lines or unknown rules
    """
    steps: List[ChoiceSet] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        label = None if fields[0] == EMPTY else fields[0]
        assignments = []
        column = len(fields[0]) + 2
        for token in fields[1:]:
            m = ASSIGNMENT.match(token)
            if not m:
                raise ParseError(f"malformed assignment {token!r}", number, column)
            rule = s.region(m.group("membrane")).rule(m.group("rule"))
            if rule is None:
                raise ParseError(
                    f"region {m.group('membrane')} has no rule {m.group('rule')}", number, column
                )
            dest = m.group("dest")
            assignments.append(Assignment(
                membrane=m.group("membrane"),
                index=int(m.group("index")),
                rule=rule,
                match=Match(Pixel(int(m.group("x")), int(m.group("y")))),
                destination=None if dest == DISCARDED else dest,
            ))
            column += len(token) + 1
        if not assignments:
            raise ParseError("a step needs at least one assignment", number, 1)
        steps.append(ChoiceSet(tuple(assignments), label))
    return Trace(initial=s.initial_configuration(), steps=steps)


def load_trace(path: Union[str, Path], s: PSystem) -> Trace:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")
    return parse_trace(text, s)
