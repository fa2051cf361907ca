"""Acceptance suite: every criterion at its stated bounds, exact equality.

Each test prints one PASS/FAIL line; run with `pytest tests/test_acceptance.py -s`
to see them all, or `rimhooks verify all` for the same checks via the CLI.
"""

from rimhooks.verify import VerifyConfig, run_suites

CONFIG = VerifyConfig()  # acceptance bounds are the defaults


def _run(number: int, description: str, suites: list[str]) -> None:
    results = run_suites(suites, CONFIG)
    passed = all(r.passed for r in results)
    print(f"ACCEPTANCE {number}: {'PASS' if passed else 'FAIL'} - {description}")
    for r in results:
        if not r.passed:
            print(f"  {r.line()}")
    assert passed, f"criterion {number} failed: {description}"


def test_criterion_1_stanley_identity():
    _run(1, "size series equals hook product, degree 10, five shapes", ["stanley"])


def test_criterion_2_gansner_identity():
    _run(
        2,
        "trace series equals refined product, degree 8, plus specialization",
        ["gansner"],
    )


def test_criterion_3_bijection_round_trips():
    _run(
        3,
        "factorize/build round trips at size 8 and weight 8, anchors increasing",
        ["bijection"],
    )


def test_criterion_4_golden_vectors():
    _run(4, "figure vectors: candidates, paths, factorization, peeling, insertion pair", ["golden"])


def test_criterion_5_peeling_equivalence():
    _run(
        5,
        "peeling tableau equals factorization tableau; corner-choice independent",
        ["pak"],
    )


def test_criterion_6_corner_toggle_commutation():
    _run(
        6,
        "corner toggle commutes with inserting the smallest hook, weight 8",
        ["commute"],
    )


def test_criterion_7_path_uniqueness_and_failure_witnesses():
    _run(
        7,
        "unique valid insertion path / certified failures, brute force at size 6",
        ["insertion-uniqueness"],
    )


def test_criterion_8_crossing_and_candidate_stability():
    _run(8, "crossing bounds and candidate stability, exhaustive at size 6", ["crossing"])


def test_criterion_9_hillman_grassl():
    _run(
        9,
        "round trip, weighted-size identity and trace series through the correspondence",
        ["hg"],
    )


def test_criterion_10_classical_theorems():
    _run(
        10,
        "rectangle trace sums, chain maxima, square-diagonal and transpose laws, involution",
        ["diag", "gk", "syt", "rsk-thm", "involution"],
    )
