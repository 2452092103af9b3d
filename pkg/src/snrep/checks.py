"""Pass/fail records produced by the verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exactmat import IntMatrix


@dataclass(frozen=True)
class Counterexample:
    rank: int  # 0 for degree-level checks with no group element
    one_line: tuple[int, ...]
    expected: Optional[IntMatrix]
    actual: Optional[IntMatrix]
    # second element of a failing pair, for two-element checks
    partner_rank: Optional[int] = None
    partner_one_line: Optional[tuple[int, ...]] = None

    def sort_key(self) -> tuple:
        return (self.rank, self.partner_rank or 0, self.one_line,
                self.partner_one_line or ())

    def to_dict(self) -> dict:
        d = {
            "rank": self.rank,
            "one_line": list(self.one_line),
            "expected": self.expected.to_lists() if self.expected else None,
            "actual": self.actual.to_lists() if self.actual else None,
        }
        if self.partner_one_line is not None:
            d["partner_rank"] = self.partner_rank
            d["partner_one_line"] = list(self.partner_one_line)
        return d


@dataclass(frozen=True)
class Check:
    """Outcome of one named identity over some number of tested items."""

    name: str
    elements_tested: int
    counterexample: Optional[Counterexample] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def merge(self, other: Check) -> Check:
        """Combine two partial runs of the same check.

        The surviving counterexample is the one with the smaller rank, so
        merging is order independent.
        """
        if other.name != self.name:
            raise ValueError(f"cannot merge {self.name!r} with {other.name!r}")
        ce = [c for c in (self.counterexample, other.counterexample) if c is not None]
        first = min(ce, key=Counterexample.sort_key) if ce else None
        return Check(self.name, self.elements_tested + other.elements_tested, first)

    def to_dict(self) -> dict:
        return {
            "check_name": self.name,
            "elements_tested": self.elements_tested,
            "passed": self.passed,
            "first_counterexample": (
                self.counterexample.to_dict() if self.counterexample else None
            ),
        }


def check_equal(name: str, expected: IntMatrix, actual: IntMatrix,
                rank: int = 0, one_line: tuple[int, ...] = ()) -> Check:
    if expected == actual:
        return Check(name, 1)
    return Check(name, 1, Counterexample(rank, one_line, expected, actual))


def check_true(name: str, ok: bool, rank: int = 0,
               one_line: tuple[int, ...] = ()) -> Check:
    return Check(name, 1, None if ok else Counterexample(rank, one_line, None, None))


@dataclass
class VerificationReport:
    n: int
    mode: str
    checks: dict[str, Check] = field(default_factory=dict)

    def add(self, check: Check) -> None:
        prev = self.checks.get(check.name)
        self.checks[check.name] = prev.merge(check) if prev else check

    def extend(self, other: VerificationReport) -> None:
        for c in other.checks.values():
            self.add(c)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list[Check]:
        return [c for c in self.checks.values() if not c.passed]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "passed": self.passed,
            "checks": [self.checks[k].to_dict() for k in sorted(self.checks)],
        }
