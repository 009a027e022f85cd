import os

import pytest

pytest.importorskip("reportlab")

from enumerator import conjecture_report, enumerate_with_stats, orbit_decompose
from report_pdf import ReportGenerationError, UnitalReportGenerator, build_report
from report_styles import ColorScheme, ReportStyleManager, get_available_color_schemes
from unital_cli import EXIT_OK, main
from verifier import verify


def read_header(path):
    with open(path, "rb") as f:
        return f.read(5)


@pytest.mark.parametrize("scheme", list(ColorScheme))
def test_build_report_every_scheme(tmp_path, scheme):
    output = tmp_path / f"u2_{scheme.value}.pdf"
    build_report(2, str(output), color_scheme=scheme)
    assert read_header(output) == b"%PDF-"
    assert os.path.getsize(output) > 0


def test_report_without_fixtures(tmp_path):
    functions, stats = enumerate_with_stats(1)
    output = tmp_path / "u1.pdf"
    UnitalReportGenerator().generate(
        str(output), functions, stats, orbit_decompose(functions), conjecture_report(1, functions)
    )
    assert read_header(output) == b"%PDF-"


def test_report_with_verification(tmp_path, unital_sets):
    functions, stats = enumerate_with_stats(3)
    output = tmp_path / "u3.pdf"
    UnitalReportGenerator(ColorScheme.DARK).generate(
        str(output),
        functions,
        stats,
        orbit_decompose(functions),
        conjecture_report(3, functions),
        verify(3, functions=unital_sets[3]),
        title="Cubic <case> & co",
    )
    assert read_header(output) == b"%PDF-"


def test_missing_output_directory(tmp_path):
    with pytest.raises(ReportGenerationError, match="does not exist"):
        build_report(1, str(tmp_path / "nowhere" / "u1.pdf"))


def test_cli_report(tmp_path, capsys):
    output = tmp_path / "u2.pdf"
    code = main(["report", "--n", "2", "--output", str(output), "--color-scheme", "blue"])
    assert code == EXIT_OK
    assert "Successfully created PDF" in capsys.readouterr().out
    assert read_header(output) == b"%PDF-"


def test_style_manager():
    assert "default" in get_available_color_schemes()
    manager = ReportStyleManager(ColorScheme.GREEN)
    assert manager.get_style("title") is not None
    assert manager.get_style("no-such-style") is manager.get_style("normal")
    assert manager.get_color("ok").hexval() != manager.get_color("mismatch").hexval()
