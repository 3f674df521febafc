"""Integer-plane geometry and sparse 2-D array objects.

Coordinates follow the usual plane convention: x grows to the right and y grows
upward, so 90 degrees points up. Pictures are written top row first, which
means ``parse_grid`` flips row indices.
"""

from enum import IntEnum
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence, Tuple

from ..utils.exceptions import BadTokenError, EmptyGridError
from ..utils.validators import EMPTY_CELL, validate_symbol


Symbol = str


class Pixel(NamedTuple):
    """A position in the integer plane."""

    x: int
    y: int

    def shifted(self, offset: 'Offset', times: int = 1) -> 'Pixel':
        """Pixel reached after moving ``times`` steps along ``offset``."""
        return Pixel(self.x + offset.dx * times, self.y + offset.dy * times)


class Offset(NamedTuple):
    """A unit step between neighbouring pixels."""

    dx: int
    dy: int


class Direction(IntEnum):
    """The eight growth directions, valued in degrees."""

    E = 0
    NE = 45
    N = 90
    NW = 135
    W = 180
    SW = 225
    S = 270
    SE = 315

    @property
    def offset(self) -> Offset:
        return _OFFSETS[self]

    def clockwise90(self) -> 'Direction':
        """Direction rotated a quarter turn clockwise."""
        return Direction((self.value - 90) % 360)

    @classmethod
    def from_degrees(cls, degrees: int) -> 'Direction':
        """Look up a direction by its degree value (multiples of 45 only)."""
        return cls(degrees % 360)


_OFFSETS: Dict[Direction, Offset] = {
    Direction.E: Offset(1, 0),
    Direction.NE: Offset(1, 1),
    Direction.N: Offset(0, 1),
    Direction.NW: Offset(-1, 1),
    Direction.W: Offset(-1, 0),
    Direction.SW: Offset(-1, -1),
    Direction.S: Offset(0, -1),
    Direction.SE: Offset(1, -1),
}


def dir_offset(d: Direction) -> Offset:
    """Unit offset of a direction."""
    return _OFFSETS[Direction(d)]


def reading_order(p: Pixel) -> Tuple[int, int]:
    """Sort key for left-to-right, then top-to-bottom reading."""
    return (p.x, -p.y)


class ArrayObject:
    """
    A finite, non-empty sparse map from pixels to symbols.

    Instances are immutable; every operation returns a new array. Equality
    compares absolute positions; use ``congruent`` for position-free equality.
    """

    __slots__ = ("_cells", "_key", "_hash")

    def __init__(self, cells: Mapping[Tuple[int, int], Symbol]):
        """
        Build an array from a pixel-to-symbol mapping.

        Args:
            cells: Mapping of (x, y) pairs to symbols

        Raises:
            EmptyGridError: If no cell is given
            BadTokenError: If a symbol is not a valid token
        """
        if not cells:
            raise EmptyGridError("An array must contain at least one symbol")
        checked = {}
        for (x, y), symbol in cells.items():
            checked[Pixel(int(x), int(y))] = validate_symbol(symbol)
        self._init(checked)

    def _init(self, cells: Dict[Pixel, Symbol]) -> None:
        self._cells = cells
        self._key: Optional[Tuple[Tuple[Pixel, Symbol], ...]] = None
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, cells: Dict[Pixel, Symbol]) -> 'ArrayObject':
        """Wrap an already validated dict without copying or checking it."""
        obj = cls.__new__(cls)
        obj._init(cells)
        return obj

    @classmethod
    def from_word(
        cls,
        tokens: Sequence[Symbol],
        direction: Direction = Direction.E,
        origin: Tuple[int, int] = (0, 0)
    ) -> 'ArrayObject':
        """Lay a token sequence out along one direction starting at ``origin``."""
        start = Pixel(*origin)
        step = dir_offset(direction)
        return cls({start.shifted(step, k): tok for k, tok in enumerate(tokens)})

    @property
    def cells(self) -> Mapping[Pixel, Symbol]:
        return MappingProxyType(self._cells)

    def get(self, pixel: Tuple[int, int]) -> Optional[Symbol]:
        return self._cells.get(pixel)

    def items(self) -> Iterable[Tuple[Pixel, Symbol]]:
        return self._cells.items()

    def symbols(self) -> frozenset:
        return frozenset(self._cells.values())

    def bounds(self) -> Tuple[int, int, int, int]:
        """(min_x, min_y, max_x, max_y) of the occupied cells."""
        xs = [p.x for p in self._cells]
        ys = [p.y for p in self._cells]
        return min(xs), min(ys), max(xs), max(ys)

    def translate(self, dx: int, dy: int) -> 'ArrayObject':
        if dx == 0 and dy == 0:
            return self
        return ArrayObject._trusted({Pixel(p.x + dx, p.y + dy): s for p, s in self._cells.items()})

    @property
    def key(self) -> Tuple[Tuple[Pixel, Symbol], ...]:
        """Cells sorted by pixel; a sound equality key."""
        if self._key is None:
            self._key = tuple(sorted(self._cells.items()))
        return self._key

    def __len__(self) -> int:
        return len(self._cells)

    def __iter__(self) -> Iterator[Pixel]:
        return iter(self._cells)

    def __contains__(self, pixel: object) -> bool:
        return pixel in self._cells

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArrayObject):
            return NotImplemented
        return self._cells == other._cells

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key)
        return self._hash

    def __repr__(self) -> str:
        return f"ArrayObject({dict(self.key)!r})"

    # String hashes differ between processes; never ship the cached one
    def __getstate__(self) -> Dict[Pixel, Symbol]:
        return self._cells

    def __setstate__(self, cells: Dict[Pixel, Symbol]) -> None:
        self._init(cells)


def canonicalize(a: ArrayObject) -> ArrayObject:
    """Translate an array so that its minimal x and y are both 0."""
    min_x, min_y, _, _ = a.bounds()
    return a.translate(-min_x, -min_y)


def congruent(a: ArrayObject, b: ArrayObject) -> bool:
    """True iff the two arrays are equal up to translation."""
    if len(a) != len(b):
        return False
    return canonicalize(a) == canonicalize(b)


def parse_grid(text: str) -> ArrayObject:
    """
    Parse a picture written as whitespace-separated tokens, top row first.

    Args:
        text: Multi-line grid; "." marks an empty cell

    Returns:
        The canonical array

    Raises:
        EmptyGridError: If no symbol is present
        BadTokenError: If a token contains "."
    """
    lines = text.splitlines()
    while lines and not lines[0].strip():
        lines.pop(0)
    while lines and not lines[-1].strip():
        lines.pop()

    row_count = len(lines)
    cells = {}
    for r, line in enumerate(lines):
        for c, token in enumerate(line.split()):
            if token == EMPTY_CELL:
                continue
            if EMPTY_CELL in token:
                raise BadTokenError(f"Token {token!r} in row {r + 1} contains {EMPTY_CELL!r}")
            cells[(c, row_count - 1 - r)] = token

    if not cells:
        raise EmptyGridError("Grid contains no symbol")

    return canonicalize(ArrayObject(cells))


def render_ascii(a: ArrayObject) -> str:
    """
    Render an array as a grid, top row first, tokens separated by one space.

    The array is canonicalized first, so ``parse_grid(render_ascii(a))`` equals
    ``canonicalize(a)``.
    """
    c = canonicalize(a)
    _, _, max_x, max_y = c.bounds()
    rows = []
    for y in range(max_y, -1, -1):
        rows.append(" ".join(c.get((x, y)) or EMPTY_CELL for x in range(max_x + 1)))
    return "\n".join(rows)
