from dataclasses import replace

from dyckgram.families import build
from dyckgram.intsets import RestrictionQuad
from dyckgram.verify import CountReport, count_comparison, verify_family


def check_names(report):
    return [c.name for c in report.checks]


def outcome(report, name):
    return next(c for c in report.checks if c.name == name)


def test_count_comparison():
    report = count_comparison(6, RestrictionQuad.parse())
    assert report.methods == ("brute", "dp")
    assert report.counts["brute"] == (1, 1, 2, 5, 14, 42, 132)
    assert report.passed
    assert report.first_mismatch() is None
    assert report.row(3) == (5, 5)


def test_count_report_mismatch():
    report = CountReport(("a", "b"), {"a": (1, 1, 2), "b": (1, 1, 3)})
    assert report.n_max == 2
    assert report.verdicts() == (True, True, False)
    assert not report.passed
    assert report.first_mismatch() == 2
    assert report.row(2) == (2, 3)


def test_verify_grammar_family():
    report = verify_family(build("F1"), max_len=12, n_max=6)
    assert report.passed
    assert check_names(report) == [
        "lowering matches stated system",
        "counts agree (brute = dp = series)",
        "grammar unambiguous",
        "grammar words = oracle language",
        "counts match POWERS_OF_TWO (offset 0)",
    ]
    assert report.counts.counts["series"] == (1, 1, 2, 4, 8, 16, 32)


def test_verify_equation_family():
    report = verify_family(build("F9", r=1), max_len=12, n_max=6)
    assert report.passed
    assert "equation multisets equal" in check_names(report)
    assert "grammar unambiguous" not in check_names(report)


def test_verify_family_without_stated_system():
    report = verify_family(build("F10", m=1, n=2), max_len=10, n_max=5)
    assert report.passed
    assert "lowering matches stated system" not in check_names(report)


def test_wrong_stated_system_is_caught():
    good = build("F3")
    bad = replace(good, stated_system=build("F1").stated_system)
    report = verify_family(bad, max_len=10, n_max=5)
    assert not report.passed
    failed = outcome(report, "lowering matches stated system")
    assert not failed.passed
    assert "derived" in failed.detail
    # everything not involving the stated form still passes
    assert outcome(report, "counts agree (brute = dp = series)").passed


def test_wrong_quad_is_caught():
    # Motzkin grammar against the unrestricted language: counts and words split
    bad = replace(build("F3"), quad=RestrictionQuad.parse(), count_reference=None)
    report = verify_family(bad, max_len=10, n_max=5)
    assert not report.passed
    counts = outcome(report, "counts agree (brute = dp = series)")
    assert not counts.passed
    assert "n=3" in counts.detail
    lang = outcome(report, "grammar words = oracle language")
    assert not lang.passed
    assert "missing=" in lang.detail


def test_wrong_reference_is_caught():
    from dyckgram.sequences import SeqId
    bad = replace(build("F3"), count_reference=(SeqId.CATALAN, 0))
    report = verify_family(bad, max_len=10, n_max=5)
    failed = outcome(report, "counts match CATALAN (offset 0)")
    assert not failed.passed
    assert "expected" in failed.detail
