import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degseq.oracle import exists_graphic_bruteforce
from degseq.sequence import (
    DegreeSequence,
    DomainError,
    Reason,
    check_report,
    hh_reduce,
    is_connected_graphic,
    is_connected_graphic_reduction,
    is_connected_realizable,
    is_graphic,
    is_graphic_fastpath,
    is_realizable,
    normalize,
    reduction_trace,
)

from corpus import full_grid, random_sequence


def S(*terms):
    return DegreeSequence(terms)


def multigraph_exists(seq, connected=False):
    """Brute-force loopless multigraph search over edge multiplicities."""
    n = len(seq)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    cap = max(seq, default=0)
    for mult in product(range(cap + 1), repeat=len(pairs)):
        deg = [0] * n
        for (i, j), k in zip(pairs, mult):
            deg[i] += k
            deg[j] += k
        if deg != list(seq):
            continue
        if not connected:
            return True
        reach, frontier = {0}, [0]
        while frontier:
            v = frontier.pop()
            for (i, j), k in zip(pairs, mult):
                if k and v in (i, j):
                    w = j if v == i else i
                    if w not in reach:
                        reach.add(w)
                        frontier.append(w)
        if len(reach) == n:
            return True
    return False


# normalize


def test_normalize_sorts():
    assert normalize([1, 3, 2]).terms == (3, 2, 1)


def test_normalize_empty():
    assert normalize([]).terms == ()


def test_normalize_six_cycle():
    assert normalize([2] * 6).terms == (2, 2, 2, 2, 2, 2)


def test_normalize_rejects_negative():
    with pytest.raises(DomainError):
        normalize([2, -1])


def test_normalize_rejects_above_int32():
    with pytest.raises(DomainError):
        normalize([2**31])


def test_constructor_rejects_unsorted():
    with pytest.raises(DomainError):
        DegreeSequence((1, 2))


def test_constructor_rejects_sum_overflow():
    with pytest.raises(DomainError):
        DegreeSequence((2**62, 2**62))


@given(st.lists(st.integers(0, 12), max_size=10), st.randoms())
def test_permutation_invariance(raw, rnd):
    shuffled = list(raw)
    rnd.shuffle(shuffled)
    a, b = normalize(raw), normalize(shuffled)
    assert a == b
    if a.n:
        assert check_report(a) == check_report(b)


# multigraph checks


def test_multigraph_oracle_confirms_hand_examples():
    assert multigraph_exists((2, 2), connected=True)
    assert multigraph_exists((3, 3, 2), connected=True)
    assert not multigraph_exists((4, 1, 1))
    assert not multigraph_exists((1, 1, 1))
    assert multigraph_exists((1, 1, 1, 1)) and not multigraph_exists((1, 1, 1, 1), connected=True)


@pytest.mark.parametrize(
    "terms, ok, reason, message",
    [
        ((2, 2), True, None, ""),
        ((4, 1, 1), False, Reason.TAIL_SUM, "tail sum 2 < s_1 = 4"),
        ((3, 3, 2), True, None, ""),
        ((1, 1, 1), False, Reason.PARITY, "odd degree sum"),
    ],
)
def test_is_realizable(terms, ok, reason, message):
    v = is_realizable(S(*terms))
    assert v.ok is ok and v.reason == reason
    assert v.message == message


@pytest.mark.parametrize(
    "terms, ok, message",
    [
        ((2, 2), True, ""),
        ((1, 1, 1, 1), False, "sum 4 < 2(n-1) = 6"),
        ((3, 3, 2), True, ""),
    ],
)
def test_is_connected_realizable(terms, ok, message):
    v = is_connected_realizable(S(*terms))
    assert v.ok is ok and v.message == message


@pytest.mark.parametrize("check", [is_realizable, is_connected_realizable])
@pytest.mark.parametrize("terms", [(), (2, 1, 1, 0), (0,)])
def test_multigraph_checks_reject_zeros_and_empty(check, terms):
    with pytest.raises(DomainError):
        check(S(*terms))


def test_multigraph_theorems_match_bruteforce():
    for n in range(1, 5):
        for terms in product(range(1, 5), repeat=n):
            if list(terms) != sorted(terms, reverse=True):
                continue
            s = S(*terms)
            assert bool(is_realizable(s)) == multigraph_exists(terms), terms
            assert bool(is_connected_realizable(s)) == multigraph_exists(terms, True), terms


# graphic checks


@pytest.mark.parametrize(
    "terms, ok, reason",
    [
        ((4, 4, 3, 3, 3, 3), True, None),
        ((3, 3, 3, 3), True, None),
        ((3, 1, 1), False, Reason.PARITY),
        ((3, 3, 1, 1), False, Reason.NEGATIVE_TERM),
        ((), True, None),
        ((0, 0, 0), True, None),
    ],
)
def test_is_graphic(terms, ok, reason):
    v = is_graphic(S(*terms))
    assert v.ok is ok and v.reason == reason


def test_three_three_one_one_has_no_realization():
    assert not exists_graphic_bruteforce((3, 3, 1, 1))


def test_parity_message():
    assert is_graphic(S(3, 1, 1)).message == "odd degree sum"


@pytest.mark.parametrize(
    "terms, ok, reason",
    [
        ((4, 4, 3, 3, 3, 3), True, None),
        ((), True, None),
        ((5, 5, 5, 5), False, Reason.MAX_DEGREE),
        ((3, 3, 1, 1), False, Reason.ERDOS_GALLAI),
        ((3, 1, 1), False, Reason.PARITY),
    ],
)
def test_is_graphic_fastpath(terms, ok, reason):
    v = is_graphic_fastpath(S(*terms))
    assert v.ok is ok and v.reason == reason


def test_hh_reduce_step():
    assert hh_reduce([4, 4, 3, 3, 3, 3]) == [3, 3, 2, 2, 2]


def test_fastpath_agrees_on_grid():
    for terms in full_grid(6):
        s = S(*terms)
        assert bool(is_graphic(s)) == bool(is_graphic_fastpath(s)), terms


@settings(max_examples=300)
@given(st.lists(st.integers(0, 20), max_size=25))
def test_fastpath_agrees_hypothesis(raw):
    s = normalize(raw)
    assert bool(is_graphic(s)) == bool(is_graphic_fastpath(s))


# connected graphic checks


@pytest.mark.parametrize(
    "terms, ok",
    [
        ((2, 2, 2, 2, 2, 2), True),
        ((2, 2, 1, 1), True),
        ((1, 1, 1, 1), False),
        ((0,), True),
        ((1,), False),
        ((2, 2, 0), False),
        ((), False),
    ],
)
def test_is_connected_graphic(terms, ok):
    s = S(*terms)
    assert is_connected_graphic(s).ok is ok
    assert is_connected_graphic_reduction(s).ok is ok


def test_zero_term_reason():
    assert is_connected_graphic(S(2, 2, 0)).reason is Reason.ZERO_TERM
    assert is_connected_graphic_reduction(S(1, 1, 0)).reason is Reason.ZERO_TERM


def test_edge_bound_reported_before_reduced_graphic():
    v = is_connected_graphic(S(1, 1, 1, 1))
    assert v.reason is Reason.EDGE_BOUND and v.message == "sum 4 < 2(n-1) = 6"


def test_max_degree_guard():
    assert is_connected_graphic(S(4, 4, 4, 4)).reason is Reason.MAX_DEGREE
    assert is_connected_graphic_reduction(S(4, 4, 4, 4)).reason is Reason.MAX_DEGREE


def test_reduced_sequence_failure_reported():
    # even sum, meets the edge bound, but (3,3,3,1) is not graphic
    v = is_connected_graphic(S(3, 3, 3, 1))
    assert not v and "reduced sequence" in v.message


@pytest.mark.parametrize("n", range(1, 12))
def test_complete_graph_sequence_is_connected_graphic(n):
    s = S(*([n - 1] * n))
    assert is_connected_graphic(s)
    assert is_connected_graphic_reduction(s)


def test_counterexample_hh_reduction_loses_connectivity():
    assert is_connected_graphic(S(2, 2, 1, 1))
    reduced = normalize([1, 0, 1])
    assert is_graphic(reduced)
    assert not is_connected_graphic(reduced)
    assert not is_connected_graphic_reduction(reduced)


def test_connected_forms_agree_on_grid():
    for terms in full_grid(6):
        s = S(*terms)
        assert bool(is_connected_graphic(s)) == bool(is_connected_graphic_reduction(s)), terms


def test_connected_forms_agree_random():
    rng = random.Random(11)
    for _ in range(2000):
        s = S(*random_sequence(rng, 40))
        assert bool(is_connected_graphic(s)) == bool(is_connected_graphic_reduction(s)), s


# reduction trace


def test_trace_figure_chain():
    trace = reduction_trace(S(4, 4, 3, 3, 3, 3))
    assert [t.terms for t in trace.steps] == [
        (4, 4, 3, 3, 3, 3),
        (3, 3, 3, 3, 2),
        (3, 3, 2, 2),
        (2, 2, 2),
        (1, 1),
        (0,),
    ]
    assert trace.verdict
    assert str(trace) == "(4,4,3,3,3,3) -> (3,3,3,3,2) -> (3,3,2,2) -> (2,2,2) -> (1,1) -> (0)"


def test_trace_base_case():
    trace = reduction_trace(S(0))
    assert [t.terms for t in trace.steps] == [(0,)] and trace.verdict


def test_trace_stops_at_zero_term():
    trace = reduction_trace(S(1, 1, 1, 1))
    assert [t.terms for t in trace.steps] == [(1, 1, 1, 1), (1, 1, 0)]
    assert not trace.verdict and trace.reason is Reason.ZERO_TERM


def test_trace_path_example():
    trace = reduction_trace(S(2, 2, 1, 1))
    assert [t.terms for t in trace.steps] == [(2, 2, 1, 1), (2, 1, 1), (1, 1), (0,)]


@given(st.lists(st.integers(0, 9), min_size=1, max_size=10))
def test_trace_invariants(raw):
    s = normalize(raw)
    trace = reduction_trace(s)
    assert trace.steps[0] == s
    for a, b in zip(trace.steps, trace.steps[1:]):
        assert len(b) == len(a) - 1
        last = a.terms[-1]
        expected = sorted(
            [t - 1 for t in a.terms[:last]] + list(a.terms[last:-1]), reverse=True
        )
        assert list(b.terms) == expected
    assert trace.verdict == (trace.steps[-1].terms == (0,))
    assert trace.verdict == bool(is_connected_graphic_reduction(s))


# check report


def test_report_counterexample():
    r = check_report(S(2, 2, 1, 1))
    assert all(v.ok for v in r.verdicts().values())
    assert r.reason is None


def test_report_four_edges():
    r = check_report(S(1, 1, 1, 1))
    assert r.realizable_multigraph and r.graphic
    assert not r.connected_realizable and not r.connected_graphic


def test_report_tail_sum():
    r = check_report(S(4, 1, 1))
    assert not any(v.ok for v in r.verdicts().values())
    assert r.reason == "tail sum 2 < s_1 = 4"


def test_report_zero_rule():
    r = check_report(S(0))
    assert all(v.ok for v in r.verdicts().values())
    r = check_report(S(1, 1, 0))
    assert r.realizable_multigraph and r.graphic
    assert r.connected_realizable.reason is Reason.ZERO_TERM
    assert not r.connected_graphic


def test_report_empty():
    r = check_report(S())
    assert r.graphic and r.realizable_multigraph
    assert r.connected_graphic.reason is Reason.EMPTY


def test_report_record_fields():
    rec = check_report(S(2, 2, 1, 1)).to_record()
    for key in ("sequence", "graphic", "connected_graphic", "realizable", "connected_realizable", "reason"):
        assert key in rec


def test_report_fast_flag_matches():
    for terms in full_grid(5):
        s = S(*terms)
        assert check_report(s, fast=True).graphic.ok == check_report(s, fast=False).graphic.ok


@settings(max_examples=300)
@given(st.lists(st.integers(0, 10), min_size=1, max_size=12))
def test_implication_chain(raw):
    r = check_report(normalize(raw))
    if r.connected_graphic:
        assert r.graphic and r.connected_realizable
    if r.graphic:
        assert r.realizable_multigraph
