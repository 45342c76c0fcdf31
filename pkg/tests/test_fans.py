"""Fans, terminal fans, and connectivity against brute-force duals."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bruteforce import brute_connectivity, brute_max_fan
from kitelink.errors import (
    GraphTooSmall,
    InvalidBaseFan,
    PreconditionViolated,
)
from kitelink.fans import (
    CutCertificate,
    Fan,
    check_fan,
    extend_fan,
    find_fan,
    has_connectivity_at_least,
    terminal_fan,
    vertex_connectivity,
)
from kitelink.generators import gen_complete_minus_matching
from kitelink.graphs import Graph
from kitelink.paths import Path
from kitelink.structures import RootQuadruple


def _cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def test_check_fan_catches_each_violation():
    g = gen_complete_minus_matching(6, 0)
    s = frozenset({3, 4, 5})
    good = Fan(0, (Path((0, 3)), Path((0, 1, 4))))
    assert check_fan(g, 0, s, good) is None
    assert check_fan(g, 1, s, good) == "fan center mismatch"
    assert "does not start" in check_fan(g, 0, s, Fan(0, (Path((1, 3)),)))
    assert "has no edge" in check_fan(g, 0, s, Fan(0, (Path((0,)),)))
    assert "missing edge" in check_fan(
        Graph(6, [(0, 1)]), 0, s, Fan(0, (Path((0, 3)),))
    )
    # arm passing through the target set before its end
    assert "exactly at its end" in check_fan(
        g, 0, s, Fan(0, (Path((0, 3, 4)),))
    )
    assert "reused" in check_fan(g, 0, s, Fan(0, (Path((0, 3)), Path((0, 1, 3)))))
    assert "overlap" in check_fan(
        g, 0, s, Fan(0, (Path((0, 1, 3)), Path((0, 1, 4))))
    )
    assert check_fan(g, 3, s, Fan(3, (Path((3, 4)),))) is not None


def test_find_fan_on_bottleneck():
    # everything from 0 to {4, 5} squeezes through vertex 3
    g = Graph(6, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
    s = frozenset({4, 5})
    fan = find_fan(g, 0, s, 1)
    assert fan is not None and check_fan(g, 0, s, fan) is None
    assert find_fan(g, 0, s, 2) is None


def test_find_fan_validations():
    g = gen_complete_minus_matching(5, 0)
    with pytest.raises(PreconditionViolated):
        find_fan(g, 9, frozenset({1}), 1)
    with pytest.raises(PreconditionViolated):
        find_fan(g, 0, frozenset({0, 1}), 1)
    with pytest.raises(PreconditionViolated):
        find_fan(g, 0, frozenset({1}), 2)
    with pytest.raises(PreconditionViolated):
        find_fan(g, 0, frozenset({1}), 0)


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_find_fan_matches_separator_dual(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 8)
    g = _random_graph(rng, n, rng.choice((0.3, 0.5, 0.8)))
    x = rng.randrange(n)
    pool = [v for v in range(n) if v != x]
    s = frozenset(rng.sample(pool, rng.randint(1, len(pool))))
    cap = brute_max_fan(g, x, s)
    for k in range(1, len(s) + 1):
        fan = find_fan(g, x, s, k)
        if k <= cap:
            assert fan is not None and check_fan(g, x, s, fan) is None
            assert fan.k == k
        else:
            assert fan is None


def test_extend_fan_keeps_endpoints():
    g = gen_complete_minus_matching(8, 0)
    s = frozenset(range(1, 8))
    base = Fan(0, (Path((0, 6)), Path((0, 7))))
    fan = extend_fan(g, 0, s, base, 7)
    assert fan is not None and fan.k == 7
    assert {6, 7} <= set(fan.endpoints())
    assert check_fan(g, 0, s, fan) is None
    # a base arm may take a detour through non-target vertices
    s4 = frozenset({4, 5, 6, 7})
    detour = Fan(0, (Path((0, 2, 6)), Path((0, 7))))
    fan = extend_fan(g, 0, s4, detour, 4)
    assert fan is not None and {6, 7} <= set(fan.endpoints())
    assert check_fan(g, 0, s4, fan) is None


def test_extend_fan_rejects_bad_bases():
    g = gen_complete_minus_matching(6, 0)
    s = frozenset({3, 4, 5})
    with pytest.raises(InvalidBaseFan):
        extend_fan(g, 0, s, Fan(0, (Path((1, 3)),)), 3)
    with pytest.raises(InvalidBaseFan):
        extend_fan(
            g, 0, s,
            Fan(0, (Path((0, 3)), Path((0, 4)), Path((0, 5)))), 2,
        )


def test_extend_fan_reports_infeasible_k():
    g = Graph(6, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
    s = frozenset({4, 5})
    base = find_fan(g, 0, s, 1)
    assert base is not None
    assert extend_fan(g, 0, s, base, 2) is None


def test_terminal_fan_on_k8():
    g = gen_complete_minus_matching(8, 0)
    roots = RootQuadruple(0, 1, 2, 3)
    tf = terminal_fan(g, roots)
    assert tf is not None
    assert tf.hub == 1 and tf.x1 == 0 and tf.x3 == 2 and tf.x4 == 3
    assert len(tf.arms()) == 7
    # disjointness: same-bundle arms share hub and far endpoint only
    for i, a in enumerate(tf.arms()):
        assert a.first == tf.hub
        for b in tf.arms()[i + 1 :]:
            shared = set(a.vertices) & set(b.vertices)
            allowed = {tf.hub} | ({a.last} if a.last == b.last else set())
            assert shared == allowed


def test_terminal_fan_multiplicities_respect_capacity():
    # x1 of degree 2 cannot absorb three arms
    base = gen_complete_minus_matching(9, 0)
    edges = [e for e in base.edges if 0 not in e or e in ((0, 1), (0, 2))]
    g = Graph(9, edges)
    assert terminal_fan(g, RootQuadruple(0, 1, 2, 3)) is None


def test_terminal_fan_swap_sides():
    tf = terminal_fan(gen_complete_minus_matching(8, 0), RootQuadruple(0, 1, 2, 3))
    sw = tf.swap_sides()
    assert sw.x1 == tf.x3 and sw.x3 == tf.x1 and sw.x4 == tf.x4
    assert sw.swap_sides() == tf


def test_vertex_connectivity_known_families():
    for n in range(2, 9):
        assert vertex_connectivity(gen_complete_minus_matching(n, 0)).k == n - 1
    for n in range(3, 9):
        cert = vertex_connectivity(_cycle(n))
        assert cert.k == 2
        # C3 is complete, so only longer cycles carry a cut witness
        assert (cert.cut is None) == (n == 3)
        if cert.cut is not None:
            assert len(cert.cut) == 2
    assert vertex_connectivity(gen_complete_minus_matching(9, 4)).k == 7
    with pytest.raises(GraphTooSmall):
        vertex_connectivity(Graph(1, []))


def test_cut_certificate_invariant():
    cert = vertex_connectivity(_cycle(5))
    assert cert.cut is not None
    # removing the certified cut really disconnects the graph
    kept = [v for v in range(5) if v not in cert.cut]
    g = _cycle(5)
    comp = {kept[0]}
    frontier = [kept[0]]
    while frontier:
        v = frontier.pop()
        for w in g.neighbors(v):
            if w in cert.cut or w in comp:
                continue
            comp.add(w)
            frontier.append(w)
    assert len(comp) < len(kept)
    with pytest.raises(Exception):
        CutCertificate(2, frozenset({1}))


@settings(max_examples=120, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_connectivity_matches_cut_enumeration(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    g = _random_graph(rng, n, rng.choice((0.3, 0.55, 0.8, 1.0)))
    want = brute_connectivity(g)
    if g.n >= 2:
        assert vertex_connectivity(g).k == want
        for k in range(0, n):
            assert has_connectivity_at_least(g, k) == (want >= k)
