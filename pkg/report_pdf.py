"""
PDF Report Module

Renders a classification report for one order N: search statistics, count
against the reference, the value set C^N, the orbit table, the conjecture
comparison and, where fixtures exist, the verification outcome.
"""

import logging
import os
from datetime import datetime
from typing import List, Optional, Sequence
from xml.sax.saxutils import escape

from reportlab.lib.pagesizes import A4
from reportlab.lib.units import inch
from reportlab.platypus import HRFlowable, Paragraph, SimpleDocTemplate, Spacer, Table

from enumerator import (
    DEFAULT_CAP,
    ConjectureReport,
    OrbitReport,
    SearchStats,
    conjecture_report,
    enumerate_with_stats,
    orbit_decompose,
    sorted_values,
)
from refdata import REFDATA
from report_styles import ColorScheme, ReportStyleConfig, ReportStyleManager
from unital import UnitalFn, render_text
from verifier import VerifyReport, verify

logger = logging.getLogger(__name__)


class ReportGenerationError(Exception):
    """Custom exception for PDF report generation errors."""
    pass


class UnitalReportGenerator:
    """Builds the PDF report from precomputed results."""

    def __init__(self, color_scheme: ColorScheme = ColorScheme.DEFAULT):
        """
        Initialize the generator with specified styling.

        Args:
            color_scheme: Color scheme to use for the PDF
        """
        self.style_manager = ReportStyleManager(color_scheme)

    def generate(
        self,
        output_file: str,
        functions: Sequence[UnitalFn],
        stats: SearchStats,
        orbits: Sequence[OrbitReport],
        conjecture: ConjectureReport,
        verification: Optional[VerifyReport] = None,
        title: Optional[str] = None,
    ) -> None:
        """
        Write the report.

        Raises:
            ReportGenerationError: If the output location is unusable or rendering fails
        """
        self._check_output(output_file)
        n = stats.order
        title = title or f"N-unital functions: U_{n}"

        try:
            story = [
                Paragraph(escape(title), self.style_manager.get_style('title')),
                Paragraph(
                    f"Generated {datetime.now():%Y-%m-%d %H:%M}", self.style_manager.get_style('metadata')
                ),
            ]
            story.extend(self._render_search(stats))
            story.extend(self._render_values(conjecture))
            story.extend(self._render_orbits(orbits))
            story.extend(self._render_conjecture(conjecture))
            if verification is not None:
                story.extend(self._render_verification(verification))
        except Exception as e:
            raise ReportGenerationError(f"Failed to build PDF content: {e}")

        doc = SimpleDocTemplate(
            output_file,
            pagesize=A4,
            topMargin=ReportStyleConfig.MARGIN_TOP,
            bottomMargin=ReportStyleConfig.MARGIN_BOTTOM,
            leftMargin=ReportStyleConfig.MARGIN_LEFT,
            rightMargin=ReportStyleConfig.MARGIN_RIGHT,
        )
        try:
            doc.build(story)
        except Exception as e:
            if os.path.exists(output_file):
                try:
                    os.remove(output_file)
                except OSError:
                    pass
            raise ReportGenerationError(f"Failed to write PDF file: {e}")

        if not os.path.exists(output_file) or os.path.getsize(output_file) == 0:
            raise ReportGenerationError("PDF file was not created successfully")
        logger.info("Wrote report for U_%d (%d functions) to %s", n, len(functions), output_file)

    def _check_output(self, output_file: str) -> None:
        output_dir = os.path.dirname(os.path.abspath(output_file))
        if not os.path.exists(output_dir):
            raise ReportGenerationError(f"Output directory does not exist: {output_dir}")
        if not os.access(output_dir, os.W_OK):
            raise ReportGenerationError(f"No write permission for directory: {output_dir}")
        if os.path.exists(output_file) and not os.access(output_file, os.W_OK):
            raise ReportGenerationError(f"Cannot write to existing file: {output_file}")

    def _heading(self, text: str) -> List:
        return [
            Paragraph(escape(text), self.style_manager.get_style('heading')),
            HRFlowable(width="100%", thickness=0.5, color=self.style_manager.get_color('border')),
            Spacer(1, 4),
        ]

    def _table(self, header: Sequence[str], rows: Sequence[Sequence[str]], widths=None) -> Table:
        header_style = self.style_manager.get_style('table_header')
        cell_style = self.style_manager.get_style('formula')
        data = [[Paragraph(escape(h), header_style) for h in header]]
        data.extend([Paragraph(escape(str(c)), cell_style) for c in row] for row in rows)
        table = Table(data, colWidths=widths, repeatRows=1)
        table.setStyle(self.style_manager.table_style())
        return table

    def _verdict(self, ok: bool, text: str) -> Paragraph:
        return Paragraph(escape(text), self.style_manager.get_style('ok' if ok else 'mismatch'))

    def _render_search(self, stats: SearchStats) -> List:
        elements = self._heading("Search")
        rows = [[name.replace("_", " "), value] for name, value in stats.to_dict().items()]
        elements.append(self._table(["quantity", "value"], rows, widths=[2.2 * inch, None]))
        expected = REFDATA.expected_count(stats.order)
        if expected is not None:
            elements.append(Spacer(1, 6))
            elements.append(self._verdict(
                stats.functions == expected,
                f"#U_{stats.order} = {stats.functions}; reference count {expected}",
            ))
        return elements

    def _render_values(self, conjecture: ConjectureReport) -> List:
        n = conjecture.order
        elements = self._heading(f"Value set C^{n}")
        values = ", ".join(str(v) for v in sorted_values(conjecture.computed))
        elements.append(Paragraph(f"{len(conjecture.computed)} values, z = zeta_{n}:", self.style_manager.get_style('normal')))
        elements.append(Paragraph(escape(values), self.style_manager.get_style('formula')))
        return elements

    def _render_orbits(self, orbits: Sequence[OrbitReport]) -> List:
        elements = self._heading("Orbits")
        limit = ReportStyleConfig.MAX_MEMBERS_LISTED
        rows = []
        for index, orbit in enumerate(orbits, start=1):
            rows.append([str(index), render_text(orbit.generator), str(orbit.size)])
        elements.append(self._table(["#", "generator", "size"], rows, widths=[0.4 * inch, None, 0.6 * inch]))
        elements.append(Paragraph(
            f"{len(orbits)} orbits; members are listed by canonical key in the JSON output "
            f"(first {limit} per orbit shown below).",
            self.style_manager.get_style('normal'),
        ))
        for index, orbit in enumerate(orbits, start=1):
            elements.append(Paragraph(f"Orbit {index}", self.style_manager.get_style('subheading')))
            for key in orbit.members[:limit]:
                elements.append(Paragraph(escape(key), self.style_manager.get_style('formula')))
        return elements

    def _render_conjecture(self, conjecture: ConjectureReport) -> List:
        elements = self._heading("Conjectured value set")
        data = conjecture.to_dict()
        elements.append(self._verdict(
            conjecture.match,
            "computed C^N equals the conjectured set" if conjecture.match
            else "computed C^N differs from the conjectured set (conjecture NOT asserted)",
        ))
        elements.append(self._verdict(
            conjecture.bound_holds,
            f"#C^N = {conjecture.cardinality}, bound {conjecture.bound}",
        ))
        for label in ("missing_from_computed", "extra_in_computed"):
            if data[label]:
                elements.append(Paragraph(
                    escape(f"{label.replace('_', ' ')}: {', '.join(data[label])}"),
                    self.style_manager.get_style('formula'),
                ))
        for note in conjecture.notes:
            elements.append(Paragraph(escape(note), self.style_manager.get_style('normal')))
        return elements

    def _render_verification(self, verification: VerifyReport) -> List:
        elements = self._heading("Verification against reference data")
        for line in verification.summary_lines():
            ok = not ("MISMATCH" in line or line == "FAILED" or line.startswith("warning"))
            elements.append(self._verdict(ok, line))
        return elements


def build_report(
    n: int,
    output_file: str,
    color_scheme: ColorScheme = ColorScheme.DEFAULT,
    jobs: int = 1,
    prune: bool = True,
    cap: int = DEFAULT_CAP,
    title: Optional[str] = None,
) -> None:
    """
    Compute everything the report shows for U_n and write it.

    Raises:
        ReportGenerationError: If writing fails
    """
    functions, stats = enumerate_with_stats(n, jobs=jobs, prune=prune, cap=cap)
    orbits = orbit_decompose(functions)
    conjecture = conjecture_report(n, functions=functions)
    verification = None
    if REFDATA.expected_count(n) is not None:
        verification = verify(n, functions=functions)
    UnitalReportGenerator(color_scheme).generate(
        output_file, functions, stats, orbits, conjecture, verification, title
    )
