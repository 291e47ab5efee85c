"""JSON export for verification reports."""

import json
from datetime import datetime
from pathlib import Path
from typing import Any

from prahmlab.core.models import CheckResult, VerificationReport


class JSONExporter:
    """Export verification reports to JSON format."""

    def export(self, report: VerificationReport, output_path: Path) -> None:
        """Export a report to a JSON file.

        Args:
            report: Verification report to export.
            output_path: Path to save the JSON file.
        """
        data = self._serialize_report(report)

        with open(output_path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, default=self._json_serializer)

    def export_string(self, report: VerificationReport) -> str:
        """Export a report to a JSON string."""
        data = self._serialize_report(report)
        return json.dumps(data, indent=2, default=self._json_serializer)

    def _serialize_report(self, report: VerificationReport) -> dict[str, Any]:
        return {
            "meta": {
                "generated_at": datetime.now().isoformat(),
                "stats": report.stats,
                "passed": report.all_passed,
            },
            "suites": {
                suite: [self._serialize_check(check) for check in checks]
                for suite, checks in report.by_suite().items()
            },
            "errors": [
                {"suite": suite, "error": error}
                for suite, error in report.errors
            ],
        }

    def _serialize_check(self, check: CheckResult) -> dict[str, Any]:
        tolerance = list(check.tolerance) if isinstance(check.tolerance, tuple) else check.tolerance
        return {
            "name": check.name,
            "measured": check.measured,
            "comparison": check.comparison,
            "tolerance": tolerance,
            "passed": check.passed,
            "detail": check.detail,
        }

    @staticmethod
    def _json_serializer(obj: Any) -> str:
        """Custom JSON serializer for non-serializable objects."""
        if isinstance(obj, datetime):
            return obj.isoformat()
        if hasattr(obj, "value"):  # Enum
            return str(obj.value)
        return str(obj)
