"""Acceptance gate: the ten headline identities, exact, with time budgets.

Each criterion is one test; `pytest -v` therefore prints one pass/fail line
per criterion.  Bounds are wall-clock seconds; every comparison is exact
rational-function identity, tolerance zero.
"""

import time

from negdim import casimir, dims, jack, spaces
from negdim.exact_algebra import RatFunc, ratfunc_equal
from negdim.partitions import partitions_up_to_weight


def timed(bound_seconds, fn, *args, **kwargs):
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    elapsed = time.perf_counter() - start
    assert elapsed < bound_seconds, (
        f"time budget exceeded: {elapsed:.1f}s >= {bound_seconds}s")
    return result, elapsed


def assert_green(report, expected_discrepancies=0):
    bad = [c for c in report.cases if not c.ok]
    assert not bad, "unexpected failures:\n" + "\n".join(
        f"  {c.check_id}: lhs={c.lhs} rhs={c.rhs}" for c in bad)
    assert report.expected == expected_discrepancies


def test_criterion_01_sp_so_casimir_duality():
    report, elapsed = timed(30, casimir.verify_sp_so, 6)
    assert_green(report)
    assert len(report.cases) == 30  # every partition of weight <= 6
    print(f"criterion 1: PASS ({elapsed:.1f}s / 30s)")


def test_criterion_02_unitary_self_duality():
    report, elapsed = timed(30, casimir.verify_u_self, 6)
    assert_green(report)
    assert len(report.cases) == 30
    print(f"criterion 2: PASS ({elapsed:.1f}s / 30s)")


def test_criterion_03_row_block_consistency_and_rectangles():
    report, elapsed = timed(60, casimir.verify_consistency, 6)
    assert_green(report)
    rows_blocks = [c for c in report.cases if c.check_id.startswith("casimir/rows-blocks/")]
    rects = [c for c in report.cases if c.check_id.startswith("casimir/rect-closed/")]
    assert len(rows_blocks) == 4 * 30  # u, su, c, d at 5 consecutive ranks each
    assert len(rects) == 4 * 16  # all four closed forms, p, q <= 4
    print(f"criterion 3: PASS ({elapsed:.1f}s / 60s)")


def test_criterion_04_trivial_representation_constants():
    report, elapsed = timed(5, dims.verify_fundamental_constants)
    assert_green(report)
    gf_u = casimir.generating_function("u", ()).gf
    gf_c = casimir.generating_function("c", ()).gf
    gf_d = casimir.generating_function("d", ()).gf
    n = RatFunc.symbol("n")
    assert ratfunc_equal(gf_u, n)
    assert ratfunc_equal(gf_c, 2 * n)
    assert ratfunc_equal(gf_d, 2 * n)
    print(f"criterion 4: PASS ({elapsed:.1f}s / 5s)")


def test_criterion_05_king_transposition_duality():
    report, elapsed = timed(30, dims.verify_king, 6)
    assert_green(report)
    assert len(report.cases) == 30
    # the adjoint instance: N(2N+1) against N(2N-1) at -N
    assert str(dims.dim_poly("c", (2,))) == "2*N^2 + N"
    assert str(dims.dim_poly("d", (1, 1))) == "2*N^2 - N"
    print(f"criterion 5: PASS ({elapsed:.1f}s / 30s)")


def test_criterion_06_operator_conjugation():
    report, elapsed = timed(60, jack.verify_conjugation, 6)
    assert_green(report)
    assert len(report.cases) == 6  # degrees 1..6, k and p0 symbolic
    print(f"criterion 6: PASS ({elapsed:.1f}s / 60s)")


def test_criterion_07_macdonald_duality_and_schur():
    start = time.perf_counter()
    duality = jack.verify_duality(6)
    schur = jack.verify_schur(6)
    elapsed = time.perf_counter() - start
    assert elapsed < 120, f"time budget exceeded: {elapsed:.1f}s >= 120s"
    assert_green(duality)
    assert_green(schur)
    assert len(duality.cases) == 29  # nonempty partitions of weight <= 6
    print(f"criterion 7: PASS ({elapsed:.1f}s / 120s)")


def test_criterion_08_projection_diagram_commutes():
    report, elapsed = timed(60, jack.verify_diagram, 5, 4)
    assert_green(report)
    assert len(report.cases) == 18 * 4  # partitions 1 <= |mu| <= 5, N in 1..4
    print(f"criterion 8: PASS ({elapsed:.1f}s / 60s)")


def test_criterion_09_symmetric_space_dual_pairs():
    report, elapsed = timed(5, spaces.verify_table)
    assert_green(report, expected_discrepancies=1)
    flagged = [c for c in report.cases if c.expected_discrepancy and not c.holds]
    assert len(flagged) == 1
    assert "BDI" in flagged[0].check_id
    pair_checks = [c for c in report.cases if c.check_id.startswith("spaces/dual/")]
    assert len(pair_checks) == len(spaces.EXPECTED_PAIRS) == 6
    print(f"criterion 9: PASS ({elapsed:.1f}s / 5s)")


def test_criterion_10_universal_dimension_formula():
    report, elapsed = timed(5, dims.verify_vogel)
    assert_green(report)
    ids = {c.check_id for c in report.cases}
    assert "dims/vogel-sp-so" in ids
    assert {"dims/vogel-dim/sp2n", "dims/vogel-dim/sln",
            "dims/vogel-dim/son"} <= ids
    print(f"criterion 10: PASS ({elapsed:.1f}s / 5s)")
