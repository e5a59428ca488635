from pathlib import Path

from z2ucodes.showcase import SHOWCASE_CODES, build_report, measure

GOLDEN = Path(__file__).parent / "data" / "showcase_report.txt"


def test_report_matches_golden():
    assert build_report() == GOLDEN.read_text()


def test_lengths_are_exact():
    for entry in SHOWCASE_CODES:
        for interp in entry.interpretations:
            n, _, _ = measure(interp)
            assert n == entry.alpha + 2 * entry.beta == entry.claimed[0]


def test_length_21_code_is_reproduced():
    entry = next(e for e in SHOWCASE_CODES if e.name == "length-21")
    for interp in entry.interpretations:
        assert measure(interp) == (21, 6, 8)


def test_discrepancies_are_flagged_in_report():
    report = build_report()
    for entry in SHOWCASE_CODES:
        reproduced = any(
            measure(interp) == entry.claimed for interp in entry.interpretations
        )
        if reproduced:
            assert f"code {entry.name}" in report
        else:
            block = report.split(f"code {entry.name}")[1].split("code ")[0]
            assert "DISCREPANCY FLAGGED" in block


def test_both_length8_readings_agree_with_each_other():
    entry = next(e for e in SHOWCASE_CODES if e.name == "length-8")
    measured = {measure(interp) for interp in entry.interpretations}
    assert measured == {(8, 5, 2)}
