import itertools
import random

from klsparse import RootedDigraph, rooted_violation


def _indegree(d: RootedDigraph, xs: set[int]) -> int:
    return sum(m for u, v, m in d.arcs if u not in xs and v in xs)


def _violation_exists_brute(d: RootedDigraph, eta: int) -> bool:
    others = [v for v in range(d.num_nodes) if v != d.root]
    for r in range(1, len(others) + 1):
        for xs in itertools.combinations(others, r):
            if _indegree(d, set(xs)) < eta:
                return True
    return False


def test_star_is_rooted_one_connected():
    d = RootedDigraph(3, [(0, 1, 1), (0, 2, 1)], 0)
    assert rooted_violation(d, 1) == set()


def test_isolated_vertex_violates():
    d = RootedDigraph(2, [], 0)
    assert rooted_violation(d, 1) == {1}


def test_eta_zero_always_empty():
    d = RootedDigraph(4, [], 0)
    assert rooted_violation(d, 0) == set()


def test_single_arc_eta_two():
    d = RootedDigraph(2, [(0, 1, 1)], 0)
    assert rooted_violation(d, 2) == {1}
    assert rooted_violation(d, 1) == set()


def test_parallel_multiplicity_counts():
    d = RootedDigraph(2, [(0, 1, 2)], 0)
    assert rooted_violation(d, 2) == set()
    assert rooted_violation(d, 3) == {1}


def test_figure_one_derived_digraph():
    # Orientation of the 8-vertex example with its source vertex deleted and
    # a root s wired to the two vertices with spare indegree.  Vertex ids:
    # 0..7 minus the deleted vertex 2, compacted: a=0,b=1,d=2,e=3,f=4,g=5,h=6, s=7.
    arcs = [
        (0, 1, 1),  # a->b
        (2, 0, 1),  # d->a
        (1, 2, 1),  # b->d
        (0, 5, 1),  # a->g
        (5, 6, 1),  # g->h
        (1, 6, 1),  # b->h
        (2, 3, 1),  # d->e
        (2, 4, 1),  # d->f
        (4, 3, 1),  # f->e
        (7, 4, 1),  # s->f
        (7, 5, 1),  # s->g
    ]
    d = RootedDigraph(8, arcs, 7)
    x = rooted_violation(d, 1)
    assert x == {0, 1, 2}
    assert _indegree(d, x) == 0


def test_random_agreement_with_enumeration():
    rng = random.Random(60)
    for eta in (1, 2, 3):
        for _ in range(500):
            n = rng.randint(1, 7)
            arcs = []
            for _ in range(rng.randint(0, 10)):
                u, v = rng.randrange(n), rng.randrange(n)
                arcs.append((u, v, rng.randint(1, 2)))
            d = RootedDigraph(n, arcs, 0)
            found = rooted_violation(d, eta)
            exists = _violation_exists_brute(d, eta)
            assert bool(found) == exists
            if found:
                assert d.root not in found
                assert _indegree(d, found) < eta


def test_monotonicity_in_eta():
    rng = random.Random(61)
    for _ in range(200):
        n = rng.randint(2, 7)
        arcs = [(rng.randrange(n), rng.randrange(n), 1) for _ in range(rng.randint(0, 10))]
        d = RootedDigraph(n, arcs, 0)
        empties = [not rooted_violation(d, eta) for eta in range(4)]
        # once a violation appears it persists for larger eta
        for small, big in zip(empties, empties[1:]):
            assert small or not big
