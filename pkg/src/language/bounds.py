"""Search bounds shared by the grammar derivation and the label-language search."""

from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Bounds:
    """Limits that keep a search over an infinite configuration graph finite."""

    max_label_len: int = 16
    max_steps: int = 10_000
    max_cells_per_array: int = 10_000
    max_total_arrays: int = 64
    max_states: int = 500_000

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) < 0:
                raise ValueError(f"{f.name} must be non-negative")
