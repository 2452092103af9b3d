import json

import pytest

from snrep.checks import Check, Counterexample, VerificationReport
from snrep.errors import CapacityError, DegreeError, InconsistencyError
from snrep.exactmat import IntMatrix, direct_sum, trace
from snrep.perm import Permutation, elements, fixed_points, identity
from snrep.oracle import conjugate_direct, run_suite, verify_block_structure

M = IntMatrix.from_rows


def P(*values):
    return Permutation.from_one_line(values)


def dropped_subtraction(p):
    """Closed form with the A[n+1-i, 1] term removed."""
    n, a = p.n, p.one_line
    return IntMatrix(n - 1, n - 1, tuple(
        int(a[n - i] == n + 1 - j) for i in range(1, n) for j in range(1, n)))


def test_conjugate_direct_examples():
    assert conjugate_direct(identity(3)) == M([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert conjugate_direct(P(2, 1, 3)) == M([[1, 0, 0], [0, 1, 0], [0, -1, -1]])
    for p in elements(5):
        assert trace(conjugate_direct(p)) == fixed_points(p)


def test_conjugate_direct_degree():
    with pytest.raises(DegreeError):
        conjugate_direct(identity(1))


def test_divisibility_failure_raises(monkeypatch):
    import snrep.oracle as oracle

    monkeypatch.setattr(oracle, "p_matrix",
                        lambda n: M([[1] * n] + [[0] * n] * (n - 1)))
    with pytest.raises(InconsistencyError):
        oracle.conjugate_direct(P(2, 1, 3))


@pytest.mark.parametrize("n", [3, 4, 6])
def test_block_structure_exhaustive(n):
    group = elements(n)
    assert all(verify_block_structure(p).passed for p in group)


def test_mutation_is_detected_on_s3():
    failures = [p for p in elements(3)
                if not verify_block_structure(p, dropped_subtraction).passed]
    assert failures
    report = run_suite(3, standard=dropped_subtraction)
    assert not report.passed
    assert "conjugate_matches_standard_block" in {c.name for c in report.failures()}
    ce = report.checks["conjugate_matches_standard_block"].counterexample
    assert ce.expected == direct_sum(M([[1]]), dropped_subtraction(Permutation.from_one_line(ce.one_line)))


def test_run_suite_s3_counts():
    report = run_suite(3)
    assert report.passed
    assert report.checks["orthogonal"].elements_tested == 6
    assert report.checks["homomorphism_standard"].elements_tested == 36
    assert report.checks["inverse"].elements_tested == 1


def test_run_suite_s6():
    report = run_suite(6)
    assert report.passed
    assert report.checks["conjugate_matches_entrywise_form"].elements_tested == 720


def test_run_suite_sampled_deterministic():
    a = run_suite(10, "sampled", count=1000, seed=42)
    b = run_suite(10, "sampled", count=1000, seed=42)
    assert a.passed
    assert a.checks["conjugate_matches_standard_block"].elements_tested == 1000
    assert json.dumps(a.to_dict()) == json.dumps(b.to_dict())


def test_workers_give_identical_report():
    serial = run_suite(5, workers=1, standard=dropped_subtraction)
    parallel = run_suite(5, workers=3, standard=dropped_subtraction)
    assert serial.to_dict() == parallel.to_dict()


def test_run_suite_guards():
    with pytest.raises(CapacityError):
        run_suite(9)
    with pytest.raises(DegreeError):
        run_suite(1)
    with pytest.raises(ValueError):
        run_suite(5, "sampled", count=10)
    with pytest.raises(ValueError):
        run_suite(5, "bogus")


def test_merge_keeps_smallest_rank():
    late = Counterexample(5, (1,), None, None)
    early = Counterexample(2, (2,), None, None)
    a, b = Check("x", 3, late), Check("x", 4, early)
    assert a.merge(b) == b.merge(a) == Check("x", 7, early)
    assert Check("x", 1).merge(Check("x", 2)).passed
    with pytest.raises(ValueError):
        a.merge(Check("y", 1))


def test_report_invariants():
    report = run_suite(4)
    for d in report.to_dict()["checks"]:
        assert d["elements_tested"] > 0
        assert d["passed"] == (d["first_counterexample"] is None)
    r = VerificationReport(2, "x")
    r.add(Check("a", 1, Counterexample(1, (1, 2), None, None)))
    assert not r.passed and r.failures()[0].name == "a"
