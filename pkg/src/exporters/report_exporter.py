"""Markdown exporter for translator verification reports."""

from datetime import datetime
from pathlib import Path
from typing import List, Optional

from ..language.words import format_word
from ..oracle.verification import VerificationReport
from ..utils.exceptions import ExportError
from ..utils.logger import get_logger
from ..utils.validators import sanitize_filename


logger = get_logger(__name__)

MAX_LISTED = 20


class ReportExporter:
    """Writes verification reports as markdown files with YAML front matter."""

    def __init__(self, output_dir: Path):
        """
        Initialize report exporter.

        Args:
            output_dir: Directory to save report files
        """
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def export(self, report: VerificationReport, created: Optional[datetime] = None) -> Path:
        """
        Write one report.

        Args:
            report: Comparison outcome to write
            created: Timestamp for the file name and front matter (default: now)

        Returns:
            Path to the created file

        Raises:
            ExportError: If the file cannot be written
        """
        created = created or datetime.now()
        filepath = self.output_dir / self._generate_filename(report, created)
        try:
            filepath.write_text(self.render(report, created), encoding="utf-8")
        except OSError as e:
            logger.error(f"Failed to write report: {e}")
            raise ExportError(f"Export failed: {e}")
        logger.info(f"Report written: {filepath}")
        return filepath

    def _generate_filename(self, report: VerificationReport, created: datetime) -> str:
        stamp = created.strftime("%Y%m%d_%H%M%S")
        return sanitize_filename(f"verify_{report.translator}_{report.source}_k{report.k}_{stamp}.md")

    def render(self, report: VerificationReport, created: datetime) -> str:
        sections = [
            self._frontmatter(report, created),
            f"# Verification of {report.source}",
            "",
            f"Verdict: **{report.verdict.value}**",
            "",
            self._counts_table(report),
            self._differences(report),
        ]
        return "\n".join(sections)

    def _frontmatter(self, report: VerificationReport, created: datetime) -> str:
        lines = [
            "---",
            f"source: {report.source}",
            f"translator: {report.translator}",
            f"k: {report.k}",
            f"verdict: {report.verdict.value}",
            f"exhaustive: {str(report.exhaustive).lower()}",
            f"truncated_by: [{', '.join(sorted(report.truncated_by))}]",
            f"states: {report.states_visited}",
            f"created: {created.strftime('%Y-%m-%d %H:%M:%S')}",
            "---",
            "",
        ]
        return "\n".join(lines)

    def _counts_table(self, report: VerificationReport) -> str:
        lines = ["## Words per length", "", "| length | system | reference |", "|---:|---:|---:|"]
        for n, (engine, oracle) in report.counts_by_length().items():
            lines.append(f"| {n} | {engine} | {oracle} |")
        lines.append("")
        return "\n".join(lines)

    def _differences(self, report: VerificationReport) -> str:
        lines = ["## Differences", ""]
        if not report.missing and not report.extra:
            lines.append("None.")
            lines.append("")
            return "\n".join(lines)
        lines.extend(self._listing("Missing from the system", report.missing))
        lines.extend(self._listing("Produced but not in the reference", report.extra))
        return "\n".join(lines)

    @staticmethod
    def _listing(title: str, words: list) -> List[str]:
        if not words:
            return []
        lines = [f"### {title}", ""]
        lines.extend(f"- `{format_word(w)}`" for w in words[:MAX_LISTED])
        if len(words) > MAX_LISTED:
            lines.append(f"- ... and {len(words) - MAX_LISTED} more")
        lines.append("")
        return lines
