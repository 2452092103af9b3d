"""Brute-force cross-checks of the closed forms by dense exact multiplication.

``conjugate_direct`` computes P^{-1} A P the slow way, as (Q A P) / n with
full matrix products, and every closed form is compared against it.
``run_suite`` sweeps a whole degree, exhaustively or by seeded sampling.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from math import factorial
from typing import Callable, Iterable, Optional, Sequence

from .basis import p_inverse_numerator, p_matrix, verify_diagonalization, verify_inverse
from .checks import Check, Counterexample, VerificationReport, check_equal, check_true
from .errors import CapacityError, DegreeError, InconsistencyError
from .exactmat import IntMatrix, det, direct_sum, mul, trace
from .perm import Permutation, compose, fixed_points, rank, sign, unrank
from .permrep import perm_matrix, verify_casimir_commutes, verify_orthogonal
from .standard import RepKind, conjugated_closed_form, rep_matrix, standard_matrix

#: largest degree for which run_suite will walk all of S_n
MAX_EXHAUSTIVE_DEGREE = 8
#: up to this degree the homomorphism checks use every ordered pair
MAX_ALL_PAIRS_DEGREE = 4
DEFAULT_PAIR_SAMPLES = 1000

StandardFn = Callable[[Permutation], IntMatrix]

_ONE = IntMatrix(1, 1, (1,))


def conjugate_direct(p: Permutation) -> IntMatrix:
    """P^{-1} A(p) P via two dense products and an exact division by n."""
    n = p.n
    if n < 2:
        raise DegreeError(f"degree must be at least 2, got {n}")
    prod = mul(mul(p_inverse_numerator(n), perm_matrix(p)), p_matrix(n))
    quotient = []
    for v in prod.entries:
        q, r = divmod(v, n)
        if r:
            raise InconsistencyError(
                f"entry {v} of Q A P not divisible by {n} for {p}"
            )
        quotient.append(q)
    return IntMatrix(n, n, tuple(quotient))


def verify_block_structure(p: Permutation,
                           standard: StandardFn = standard_matrix) -> Check:
    """Dense conjugate == [[1]] (+) B(p) == entrywise closed form."""
    direct = conjugate_direct(p)
    r, ol = rank(p), p.one_line
    first = check_equal("block_structure", direct_sum(_ONE, standard(p)), direct, r, ol)
    if not first.passed:
        return first
    return check_equal("block_structure", conjugated_closed_form(p), direct, r, ol)


def element_checks(p: Permutation, standard: StandardFn = standard_matrix) -> list[Check]:
    """Every single-element identity, one Check each."""
    r, ol = rank(p), p.one_line
    direct = conjugate_direct(p)
    b = standard(p)
    a = perm_matrix(p)
    s, fix = sign(p), fixed_points(p)
    return [
        verify_orthogonal(p),
        verify_casimir_commutes(p),
        check_equal("conjugate_matches_entrywise_form", conjugated_closed_form(p),
                    direct, r, ol),
        check_equal("conjugate_matches_standard_block", direct_sum(_ONE, b),
                    direct, r, ol),
        check_true("standard_entries_bounded",
                   all(v in (-1, 0, 1) for v in b.entries), r, ol),
        check_true("det_perm_is_sign", det(a) == s, r, ol),
        check_true("trace_perm_is_fixed_points", trace(a) == fix, r, ol),
        check_true("det_standard_is_sign", det(b) == s, r, ol),
        check_true("trace_standard_is_fixed_points_minus_one",
                   trace(b) == fix - 1, r, ol),
        check_true("trace_standard_sign_is_signed",
                   trace(rep_matrix(RepKind.STANDARD_SIGN, p)) == s * (fix - 1), r, ol),
    ]


def pair_checks(p: Permutation, q: Permutation,
                standard: StandardFn = standard_matrix) -> list[Check]:
    """rho(p) rho(q) == rho(compose(p, q)) for each representation kind."""
    pq = compose(p, q)
    out = []
    for kind in RepKind:
        if kind is RepKind.STANDARD:
            lhs, rhs = mul(standard(p), standard(q)), standard(pq)
        else:
            lhs, rhs = mul(rep_matrix(kind, p), rep_matrix(kind, q)), rep_matrix(kind, pq)
        name = f"homomorphism_{kind.value}"
        if lhs == rhs:
            out.append(Check(name, 1))
        else:
            out.append(Check(name, 1, Counterexample(
                rank(p), p.one_line, rhs, lhs, rank(q), q.one_line)))
    return out


def _run_elements(n: int, ranks: Sequence[int], standard: StandardFn) -> list[Check]:
    report = VerificationReport(n, "")
    for k in ranks:
        for c in element_checks(unrank(n, k), standard):
            report.add(c)
    return list(report.checks.values())


def _run_pairs(n: int, pairs: Iterable[tuple[int, int]], standard: StandardFn) -> list[Check]:
    report = VerificationReport(n, "")
    for i, j in pairs:
        for c in pair_checks(unrank(n, i), unrank(n, j), standard):
            report.add(c)
    return list(report.checks.values())


def _chunks(seq: Sequence, parts: int) -> list[Sequence]:
    size = -(-len(seq) // parts)
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def run_suite(n: int, mode: str = "exhaustive", count: Optional[int] = None,
              seed: Optional[int] = None, pair_count: int = DEFAULT_PAIR_SAMPLES,
              workers: int = 1, standard: StandardFn = standard_matrix
              ) -> VerificationReport:
    """Run every identity check over S_n.

    mode="exhaustive" walks all n! elements (n <= 8); pairs are exhaustive for
    n <= 4 and otherwise ``pair_count`` seeded draws (seed defaults to 0).
    mode="sampled" draws ``count`` element ranks and ``count`` pairs from
    ``random.Random(seed)``. Output depends only on the arguments, including
    when ``workers > 1`` (``standard`` must then be picklable).
    """
    if n < 2:
        raise DegreeError(f"degree must be at least 2, got {n}")
    order = factorial(n)
    if mode == "exhaustive":
        if n > MAX_EXHAUSTIVE_DEGREE:
            raise CapacityError(
                f"exhaustive run needs n <= {MAX_EXHAUSTIVE_DEGREE}, got {n}")
        ranks: Sequence[int] = range(1, order + 1)
        if n <= MAX_ALL_PAIRS_DEGREE:
            pairs = [(i, j) for i in ranks for j in ranks]
        else:
            rng = random.Random(0 if seed is None else seed)
            pairs = [(rng.randint(1, order), rng.randint(1, order))
                     for _ in range(pair_count)]
        label = "exhaustive"
    elif mode == "sampled":
        if count is None or count < 1 or seed is None:
            raise ValueError("sampled mode needs a positive count and a seed")
        rng = random.Random(seed)
        ranks = [rng.randint(1, order) for _ in range(count)]
        pairs = [(rng.randint(1, order), rng.randint(1, order)) for _ in range(count)]
        label = f"sampled(count={count}, seed={seed})"
    else:
        raise ValueError(f"unknown mode {mode!r}")

    report = VerificationReport(n, label)
    report.add(verify_inverse(n))
    report.add(verify_diagonalization(n))

    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            futures = [ex.submit(_run_elements, n, list(c), standard)
                       for c in _chunks(list(ranks), workers)]
            futures += [ex.submit(_run_pairs, n, c, standard)
                        for c in _chunks(pairs, workers)]
            parts = [f.result() for f in futures]
    else:
        parts = [_run_elements(n, ranks, standard), _run_pairs(n, pairs, standard)]
    for checks in parts:
        for c in checks:
            report.add(c)
    return report
