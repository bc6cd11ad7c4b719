from pathlib import Path

import pytest

from cli_corpus import CASES, USAGE_CASES, run_case

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("name,argv,expected", CASES, ids=[c[0] for c in CASES])
def test_golden_output_and_exit_code(name, argv, expected):
    code, text = run_case(argv)
    assert code == expected
    assert text == (GOLDEN / f"{name}.txt").read_text()


@pytest.mark.parametrize("name,argv,expected", CASES, ids=[c[0] for c in CASES])
def test_runs_are_byte_identical(name, argv, expected):
    first = run_case(argv)
    second = run_case(argv)
    assert first == second


@pytest.mark.parametrize("name,argv,expected", USAGE_CASES,
                         ids=[c[0] for c in USAGE_CASES])
def test_usage_errors(name, argv, expected):
    code, text = run_case(argv)
    assert code == expected
    assert text == ""


def test_refutation_witness_is_printed():
    _, text = run_case(["val-check", "--ideal", "fixtures/hyperbola.ideal",
                        "--weight", "1 0", "--seed", "7", "--samples", "200"])
    assert "witness_a:" in text and "witness_b:" in text
    assert "verdict: quasi_valuation_only" in text


def test_gr_emits_readable_algebra_file():
    import tropval.textio as textio

    _, text = run_case(["gr", "--algebra", "sl2-branching:3",
                        "--functional",
                        "0,0,0,1,0;1,0,0,0,0;0,1,0,0,0;0,0,1,0,0;0,0,0,0,1"])
    body = text.split("END-RESULT\n", 1)[1]
    algebra = textio.parse_graded_algebra(body)
    assert all(len(exp) == 1 for exp in algebra.structure.values())
