"""Decision procedures on degree sequences.

Every check returns a :class:`Verdict` that is truthy when the sequence has
the property and otherwise carries a :class:`Reason` code naming the first
condition that failed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "CheckReport",
    "DegreeSequence",
    "DomainError",
    "Reason",
    "ReductionTrace",
    "Verdict",
    "check_report",
    "hh_reduce",
    "is_connected_graphic",
    "is_connected_graphic_reduction",
    "is_connected_realizable",
    "is_graphic",
    "is_graphic_fastpath",
    "is_realizable",
    "main_reduce",
    "normalize",
    "reduction_trace",
]

INT32_MAX = 2**31 - 1
INT64_MAX = 2**63 - 1


class DomainError(ValueError):
    """Input lies outside the domain a check is defined on."""


class Reason(str, Enum):
    PARITY = "parity"
    TAIL_SUM = "tail-sum"
    EDGE_BOUND = "edge-bound"
    NEGATIVE_TERM = "negative-term"
    MAX_DEGREE = "max-degree"
    ZERO_TERM = "zero-term"
    ERDOS_GALLAI = "erdos-gallai"
    EMPTY = "empty"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: Reason | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def yes(cls, message: str = "") -> Verdict:
        return cls(True, None, message)

    @classmethod
    def no(cls, reason: Reason, message: str) -> Verdict:
        return cls(False, reason, message)


@dataclass(frozen=True)
class DegreeSequence:
    """A non-increasing sequence of non-negative integers.

    Use :func:`normalize` to build one from unsorted input; the constructor
    only validates.
    """

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if terms and min(terms) < 0:
            raise DomainError("degree sequence has a negative term")
        if any(a < b for a, b in zip(terms, terms[1:])):
            raise DomainError("degree sequence must be non-increasing")
        if sum(terms) > INT64_MAX:
            raise DomainError("degree sum overflows a 64-bit integer")

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.terms)) + ")"

    @property
    def n(self) -> int:
        return len(self.terms)

    @property
    def degree_sum(self) -> int:
        return sum(self.terms)

    def has_zero(self) -> bool:
        return bool(self.terms) and self.terms[-1] == 0


def normalize(raw: Iterable[int]) -> DegreeSequence:
    """Sort ``raw`` into a :class:`DegreeSequence`.

    Raises:
        DomainError: on negative entries, entries above the 32-bit range, or a
            degree sum that does not fit in 64 bits.
    """
    terms = [int(x) for x in raw]
    for i, t in enumerate(terms):
        if t < 0:
            raise DomainError(f"negative entry {t} at position {i}")
        if t > INT32_MAX:
            raise DomainError(f"entry {t} at position {i} exceeds 32-bit range")
    terms.sort(reverse=True)
    return DegreeSequence(tuple(terms))


def _require_positive(s: DegreeSequence, check: str) -> None:
    if s.n == 0:
        raise DomainError(f"{check}: empty sequence")
    if s.has_zero():
        raise DomainError(f"{check}: defined for positive terms only (got a zero)")


def is_realizable(s: DegreeSequence) -> Verdict:
    """Loopless multigraph realizability: even sum and tail sum >= s_1."""
    _require_positive(s, "is_realizable")
    total = s.degree_sum
    if total % 2:
        return Verdict.no(Reason.PARITY, "odd degree sum")
    tail = total - s[0]
    if tail < s[0]:
        return Verdict.no(Reason.TAIL_SUM, f"tail sum {tail} < s_1 = {s[0]}")
    return Verdict.yes()


def is_connected_realizable(s: DegreeSequence) -> Verdict:
    """Connected loopless multigraph realizability."""
    _require_positive(s, "is_connected_realizable")
    v = is_realizable(s)
    if not v:
        return v
    bound = _edge_bound(s.n, s.degree_sum)
    return Verdict.yes() if bound is None else bound


def _edge_bound(n: int, total: int) -> Verdict | None:
    if total < 2 * (n - 1):
        return Verdict.no(Reason.EDGE_BOUND, f"sum {total} < 2(n-1) = {2 * (n - 1)}")
    return None


def hh_reduce(terms: list[int]) -> list[int]:
    """One Havel-Hakimi step: drop s_1, decrement the next s_1 terms, re-sort.

    The result may contain negative terms when ``terms`` is not graphic.
    """
    head, rest = terms[0], list(terms[1:])
    for i in range(min(head, len(rest))):
        rest[i] -= 1
    rest.sort(reverse=True)
    return rest


def main_reduce(terms: list[int]) -> list[int]:
    """One connected reduction step: drop s_n, decrement the s_n largest terms, re-sort."""
    last, rest = terms[-1], list(terms[:-1])
    for i in range(min(last, len(rest))):
        rest[i] -= 1
    rest.sort(reverse=True)
    return rest


def is_graphic(s: DegreeSequence) -> Verdict:
    """Simple-graph realizability by iterated Havel-Hakimi reduction.

    Quadratic in the worst case; see :func:`is_graphic_fastpath` for long
    sequences.
    """
    if s.degree_sum % 2:
        return Verdict.no(Reason.PARITY, "odd degree sum")
    terms = list(s.terms)
    step = 0
    while terms and terms[0] > 0:
        head = terms[0]
        if head > len(terms) - 1:
            return Verdict.no(
                Reason.MAX_DEGREE,
                f"step {step}: max degree {head} >= n = {len(terms)}",
            )
        terms = hh_reduce(terms)
        step += 1
        if terms and terms[-1] < 0:
            return Verdict.no(Reason.NEGATIVE_TERM, f"step {step}: negative term")
    return Verdict.yes()


def _erdos_gallai(d: np.ndarray) -> Verdict:
    # d: non-increasing int64 array
    n = d.size
    if n == 0:
        return Verdict.yes()
    total = int(d.sum())
    if total % 2:
        return Verdict.no(Reason.PARITY, "odd degree sum")
    if d[-1] < 0:
        return Verdict.no(Reason.NEGATIVE_TERM, "negative term")
    if d[0] > n - 1:
        return Verdict.no(Reason.MAX_DEGREE, f"max degree {int(d[0])} >= n = {n}")
    prefix = np.concatenate(([0], np.cumsum(d)))
    # at_least[k] = #{i : d_i >= k}; terms >= k form a prefix of d
    counts = np.bincount(d, minlength=n + 1)
    at_least = np.cumsum(counts[::-1])[::-1]
    k = np.arange(1, n + 1, dtype=np.int64)
    m = at_least[k]
    split = np.maximum(k, m)
    rhs = k * (k - 1) + k * np.maximum(m - k, 0) + (total - prefix[split])
    bad = np.nonzero(prefix[k] > rhs)[0]
    if bad.size:
        kk = int(bad[0]) + 1
        return Verdict.no(
            Reason.ERDOS_GALLAI,
            f"inequality fails at k={kk}: {int(prefix[kk])} > {int(rhs[kk - 1])}",
        )
    return Verdict.yes()


def is_graphic_fastpath(s: DegreeSequence) -> Verdict:
    """Erdős–Gallai check in O(n log n) with prefix sums; same verdict as :func:`is_graphic`."""
    return _erdos_gallai(np.asarray(s.terms, dtype=np.int64))


def is_connected_graphic(s: DegreeSequence) -> Verdict:
    """Connected simple-graph realizability in closed form.

    (0) is connected-graphic; any other sequence with a zero is not.
    Otherwise the sequence must satisfy Σ s_i >= 2(n-1) and its Havel-Hakimi
    reduction must be graphic.
    """
    n = s.n
    if n == 0:
        return Verdict.no(Reason.EMPTY, "empty sequence")
    if s.terms == (0,):
        return Verdict.yes("single vertex")
    if s.has_zero():
        return Verdict.no(Reason.ZERO_TERM, "zero term with n > 1")
    total = s.degree_sum
    if total % 2:
        return Verdict.no(Reason.PARITY, "odd degree sum")
    bound = _edge_bound(n, total)
    if bound is not None:
        return bound
    head = s[0]
    if head > n - 1:
        return Verdict.no(Reason.MAX_DEGREE, f"max degree {head} >= n = {n}")
    rest = np.asarray(s.terms[1:], dtype=np.int64)
    rest[:head] -= 1
    reduced = _erdos_gallai(-np.sort(-rest))
    if not reduced:
        return Verdict.no(reduced.reason, f"reduced sequence not graphic: {reduced.message}")
    return Verdict.yes()


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[DegreeSequence, ...]
    verdict: bool
    reason: Reason | None
    terminal_reason: str

    def __str__(self) -> str:
        return " -> ".join(str(step) for step in self.steps)


def reduction_trace(s: DegreeSequence) -> ReductionTrace:
    """Apply the smallest-term reduction until a base case, recording each sequence."""
    terms = list(s.terms)
    steps: list[tuple[int, ...]] = [tuple(terms)]

    def done(ok: bool, reason: Reason | None, why: str) -> ReductionTrace:
        return ReductionTrace(
            tuple(DegreeSequence(t) for t in steps), ok, reason, why
        )

    while True:
        n = len(terms)
        if n == 0:
            return done(False, Reason.EMPTY, "empty sequence")
        if n == 1 and terms[0] == 0:
            return done(True, None, "reached (0)")
        if n > 1 and terms[-1] == 0:
            return done(False, Reason.ZERO_TERM, "zero term with n > 1")
        if terms[-1] > n - 1:
            return done(
                False, Reason.MAX_DEGREE, f"smallest term {terms[-1]} > n-1 = {n - 1}"
            )
        terms = main_reduce(terms)
        steps.append(tuple(terms))


def is_connected_graphic_reduction(s: DegreeSequence) -> Verdict:
    """Connected simple-graph realizability by repeated smallest-term reduction."""
    trace = reduction_trace(s)
    if trace.verdict:
        return Verdict.yes(trace.terminal_reason)
    return Verdict.no(trace.reason, f"step {len(trace.steps) - 1}: {trace.terminal_reason}")


@dataclass(frozen=True)
class CheckReport:
    sequence: DegreeSequence
    realizable_multigraph: Verdict
    graphic: Verdict
    connected_realizable: Verdict
    connected_graphic: Verdict

    @property
    def n(self) -> int:
        return self.sequence.n

    @property
    def degree_sum(self) -> int:
        return self.sequence.degree_sum

    def verdicts(self) -> dict[str, Verdict]:
        return {
            "realizable": self.realizable_multigraph,
            "graphic": self.graphic,
            "connected_realizable": self.connected_realizable,
            "connected_graphic": self.connected_graphic,
        }

    @property
    def reason(self) -> str | None:
        """Message of the first failing verdict, weakest property first."""
        for v in self.verdicts().values():
            if not v:
                return v.message
        return None

    def to_record(self) -> dict:
        record: dict = {"sequence": list(self.sequence.terms)}
        for name, v in self.verdicts().items():
            record[name] = v.ok
        record["reason"] = self.reason
        record["reasons"] = {
            name: (None if v.ok else v.message) for name, v in self.verdicts().items()
        }
        record["n"] = self.n
        record["degree_sum"] = self.degree_sum
        return record


FASTPATH_THRESHOLD = 2048


def check_report(s: DegreeSequence, fast: bool | None = None) -> CheckReport:
    """Run all four checks.

    The multigraph checks only accept positive terms, so zeros are treated as
    isolated vertices: they are dropped for plain realizability, and make the
    connected variant fail unless the sequence is exactly (0).

    ``fast`` selects the Erdős–Gallai graphic check instead of Havel-Hakimi;
    by default it is used for sequences longer than ``FASTPATH_THRESHOLD``.
    """
    if fast is None:
        fast = s.n > FASTPATH_THRESHOLD
    positive = DegreeSequence(tuple(t for t in s.terms if t > 0))
    if positive.n:
        realizable = is_realizable(positive)
    else:
        realizable = Verdict.yes("edgeless")

    if s.n == 0:
        conn_real = Verdict.no(Reason.EMPTY, "empty sequence")
    elif s.terms == (0,):
        conn_real = Verdict.yes("single vertex")
    elif s.has_zero():
        conn_real = Verdict.no(Reason.ZERO_TERM, "zero term with n > 1")
    else:
        conn_real = is_connected_realizable(s)

    return CheckReport(
        sequence=s,
        realizable_multigraph=realizable,
        graphic=is_graphic_fastpath(s) if fast else is_graphic(s),
        connected_realizable=conn_real,
        connected_graphic=is_connected_graphic(s),
    )
