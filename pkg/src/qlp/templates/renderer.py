"""Jinja2 renderer for plain-text verification reports."""

from __future__ import annotations

from pathlib import Path

from jinja2 import Environment, FileSystemLoader

from qlp.core.models import VerificationReport

# Default templates directory is the package directory containing the .j2 files
_DEFAULT_TEMPLATES_DIR = Path(__file__).parent


class ReportRenderer:
    """Renders verification reports using Jinja2."""

    def __init__(self, templates_dir: Path | None = None) -> None:
        dir_path = templates_dir or _DEFAULT_TEMPLATES_DIR
        self._env = Environment(
            loader=FileSystemLoader(str(dir_path)),
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
        )

    def render_verify_report(
        self,
        report: VerificationReport,
        *,
        suite: str,
        seed: int,
        trials: int,
    ) -> str:
        template = self._env.get_template("verify_report.txt.j2")
        return template.render(report=report, suite=suite, seed=seed, trials=trials)
