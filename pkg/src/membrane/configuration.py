"""Configurations: the per-region multisets of arrays a system holds."""

from dataclasses import dataclass
from typing import Iterable, Mapping, Tuple

from ..arrays.grid import ArrayObject, canonicalize


@dataclass(frozen=True)
class Configuration:
    """
    Canonical arrays per membrane.

    Regions are sorted by id, arrays within a region by their cell key, and
    empty regions are omitted, so two configurations holding the same
    multisets compare and hash equal.
    """

    contents: Tuple[Tuple[str, Tuple[ArrayObject, ...]], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[str, Iterable[ArrayObject]]) -> 'Configuration':
        regions = []
        for region in sorted(mapping):
            arrays = tuple(sorted((canonicalize(a) for a in mapping[region]), key=lambda a: a.key))
            if arrays:
                regions.append((region, arrays))
        return cls(tuple(regions))

    def arrays_in(self, region: str) -> Tuple[ArrayObject, ...]:
        for rid, arrays in self.contents:
            if rid == region:
                return arrays
        return ()

    def as_dict(self) -> dict:
        return {rid: list(arrays) for rid, arrays in self.contents}

    @property
    def total_arrays(self) -> int:
        return sum(len(arrays) for _, arrays in self.contents)

    @property
    def largest_array(self) -> int:
        return max((len(a) for _, arrays in self.contents for a in arrays), default=0)

    @property
    def key(self) -> tuple:
        """Serialization-grade equality key."""
        return tuple((rid, tuple(a.key for a in arrays)) for rid, arrays in self.contents)

    def is_empty(self) -> bool:
        return not self.contents
