"""Acceptance suite: one test per criterion, each printing its pass/fail
line.  The same checks back the ``linkchroma corpus`` subcommand."""

import pytest

from linkchroma.corpus import ALL_CHECKS, run_check


def _run(name):
    result = run_check(name)
    print(result.line())
    if result.status == "blocked":
        pytest.skip(f"blocked: {result.detail}")
    assert result.status == "pass", result.detail
    if result.limit is not None:
        assert result.seconds < result.limit, (
            f"{name} took {result.seconds:.1f}s, limit {result.limit:.0f}s"
        )
    return result


def test_criterion_1_pipeline_builds_a_12_chromatic_complex():
    _run("pipeline-chromatic-12")


def test_criterion_2_shipped_witness_verifies():
    _run("witness-verification")


def test_criterion_3_three_chromatic_quantities_agree():
    _run("three-quantity-agreement")


def test_criterion_4_every_planar_paired_graph_12_colours():
    _run("planar-twelve-colouring")


def test_criterion_5_inverse_link_round_trip():
    _run("inverse-link-round-trip")


def test_criterion_6_sealing_invariants():
    _run("sealing-invariants")


def test_criterion_7_solver_soundness():
    _run("solver-soundness")


def test_criterion_8_classic_complexes():
    _run("classic-complexes")


def test_all_criteria_are_covered():
    names = {name for name, _, _ in ALL_CHECKS}
    assert len(names) == 8
