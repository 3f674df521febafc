"""Generators for the picture families used as final configurations."""

from typing import Sequence

from ..arrays.grid import ArrayObject, Direction, Pixel, Symbol, dir_offset

AXIS_DIRECTIONS = (Direction.E, Direction.N, Direction.W, Direction.S)


def gen_star(arm: int, sym: Symbol) -> ArrayObject:
    """Centre cell plus eight arms of ``arm`` cells each (8*arm + 1 cells)."""
    if arm < 1:
        raise ValueError("star arm length must be at least 1")
    cells = {(0, 0): sym}
    origin = Pixel(0, 0)
    for direction in Direction:
        step = dir_offset(direction)
        for k in range(1, arm + 1):
            cells[origin.shifted(step, k)] = sym
    return ArrayObject(cells)


def gen_swastika(arm: int, sym: Symbol) -> ArrayObject:
    """
    Four hooked arms around a centre cell.

    ``arm`` counts the centre: each axis arm has ``arm - 1`` cells and ends in a
    hook of ``arm - 1`` cells turned a quarter clockwise, 1 + 8(arm - 1) cells
    in total.
    """
    if arm < 3:
        raise ValueError("swastika arm length must be at least 3")
    cells = {(0, 0): sym}
    origin = Pixel(0, 0)
    for direction in AXIS_DIRECTIONS:
        step = dir_offset(direction)
        hook = dir_offset(direction.clockwise90())
        for k in range(1, arm):
            cells[origin.shifted(step, k)] = sym
        corner = origin.shifted(step, arm - 1)
        for j in range(1, arm):
            cells[corner.shifted(hook, j)] = sym
    return ArrayObject(cells)


def gen_run(sym: Symbol, n: int, d: Direction) -> ArrayObject:
    """``n`` copies of ``sym`` in a straight line along ``d``."""
    if n < 1:
        raise ValueError("run length must be at least 1")
    return ArrayObject.from_word([sym] * n, Direction(d))


def gen_tape(word: Sequence[Symbol]) -> ArrayObject:
    """A horizontal word, one symbol per cell."""
    return ArrayObject.from_word(list(word), Direction.E)
