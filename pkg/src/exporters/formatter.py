"""Text formatting for words, traces, configurations and system descriptions."""

from typing import Iterable, List

from ..arrays.grid import ArrayObject, render_ascii
from ..language.enumerator import EnumerationResult
from ..language.words import format_word
from ..membrane.configuration import Configuration
from ..membrane.runner import Trace
from ..membrane.system import PSystem
from ..shapes.final import PredicateKind


class TextFormatter:
    """Plain-text renderings shared by the CLI and the report exporter."""

    @staticmethod
    def format_words(result: EnumerationResult) -> str:
        """
        One word per line in shortlex order, then the summary footer.

        Args:
            result: Enumeration result to list

        Returns:
            Listing ending with ``# exhaustive=... states=... dead_ends=...``
        """
        lines = [format_word(w) for w in result.sorted_words()]
        lines.append(result.footer())
        return "\n".join(lines)

    @staticmethod
    def format_step(label, assignments) -> str:
        shown = label if label is not None else "_"
        return " ".join([shown] + [str(a) for a in assignments])

    @staticmethod
    def format_trace(trace: Trace) -> str:
        """
        Trace text readable by ``parse_trace``: one step per line, comments for the outcome.
        """
        lines = [TextFormatter.format_step(ch.step_label, ch.assignments) for ch in trace.steps]
        lines.append(
            f"# status={trace.status.value} accepted={str(trace.accepted).lower()} "
            f"steps={len(trace.steps)} word={format_word(trace.word)}"
        )
        return "\n".join(lines)

    @staticmethod
    def format_arrays(arrays: Iterable[ArrayObject]) -> str:
        """Renderings separated by blank lines, smallest first."""
        ordered = sorted(arrays, key=lambda a: (len(a), a.key))
        return "\n\n".join(render_ascii(a) for a in ordered)

    @staticmethod
    def format_configuration(c: Configuration, s: PSystem) -> str:
        sections = []
        for membrane in s.tree.nodes:
            arrays = c.arrays_in(membrane)
            header = f"[membrane {membrane}]"
            if not arrays:
                sections.append(f"{header} empty")
            else:
                sections.append(f"{header}\n{TextFormatter.format_arrays(arrays)}")
        return "\n\n".join(sections)

    @staticmethod
    def format_system(s: PSystem) -> str:
        """
        Description text that parses back to an equal system.

        Priorities are written pairwise from their closed relation.
        """
        lines: List[str] = [
            f"system {s.name}",
            f"membranes {s.tree}",
            f"output {s.tree.output}",
            f"terminals {' '.join(sorted(s.terminals))}",
        ]
        if s.nonterminals:
            lines.append(f"nonterminals {' '.join(sorted(s.nonterminals))}")
        if s.labels:
            lines.append(f"labels {' '.join(sorted(s.labels))}")
        lines.append(f"mode {s.mode.value}")
        lines.append(f"policy {s.policy.value}")

        for membrane in s.tree.nodes:
            for array in s.init.get(membrane, ()):
                lines.append("")
                lines.append(f"init {membrane} {{")
                lines.extend(f"  {row}" for row in render_ascii(array).splitlines())
                lines.append("}")

        for membrane, region in s.regions.items():
            lines.append("")
            lines.append(f"rules {membrane} {{")
            lines.extend(f"  rule {rule}" for rule in region.rules)
            lines.append("}")
            for hi, lo in sorted(region.priority):
                lines.append(f"priority {membrane} : {hi} > {lo}")

        lines.append("")
        for membrane, predicate in s.final.predicates.items():
            if predicate.kind is PredicateKind.EXACT_SET:
                for array in predicate.arrays:
                    lines.append(f"final {membrane} : exact {{")
                    lines.extend(f"  {row}" for row in render_ascii(array).splitlines())
                    lines.append("}")
            else:
                lines.append(f"final {membrane} : {predicate}")
        return "\n".join(lines) + "\n"
