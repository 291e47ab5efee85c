"""HTML export for verification reports."""

from datetime import datetime
from pathlib import Path

from jinja2 import Environment, PackageLoader, select_autoescape

from prahmlab.core.models import VerificationReport


class HTMLExporter:
    """Export verification reports to HTML format."""

    def __init__(self) -> None:
        """Initialize the HTML exporter with Jinja2 environment."""
        self.env = Environment(
            loader=PackageLoader("prahmlab.export", "templates"),
            autoescape=select_autoescape(["html", "html.j2", "xml"]),
        )

    def export(self, report: VerificationReport, output_path: Path) -> None:
        """Export a report to an HTML file.

        Args:
            report: Verification report to export.
            output_path: Path to save the HTML file.
        """
        html = self.export_string(report)
        Path(output_path).write_text(html, encoding="utf-8")

    def export_string(self, report: VerificationReport) -> str:
        """Export a report to an HTML string."""
        template = self.env.get_template("report.html.j2")

        return template.render(
            generated_at=datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
            stats=report.stats,
            passed=report.all_passed,
            suites=report.by_suite(),
            errors=report.errors,
        )
