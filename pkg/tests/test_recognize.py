import itertools
import json
import random

import pytest

from klsparse import (
    ContractError,
    Graph,
    InputError,
    Orientation,
    ParameterError,
    SparsityParams,
    brute_force_check,
    certificate_json,
    check_sparsity,
    check_sparsity_high,
    check_sparsity_low,
    check_sparsity_mid,
    check_superset_sparsity,
    induced_edge_count,
    saturated_violation,
    verify_certificate,
)

TRIANGLE = Graph(3, ((0, 1), (1, 2), (0, 2)))
K4 = Graph(4, tuple((u, v) for u in range(4) for v in range(u + 1, 4)))
K5 = Graph(5, tuple((u, v) for u in range(5) for v in range(u + 1, 5)))
C4 = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))

# 8-vertex example graph: K4 on {0,1,2,3}, pendant triangles {0,1,6,7}-side
# and {3,4,5}-side; vertex 2 plays the prescribed-source role.
FIG1 = Graph(8, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                 (0, 6), (6, 7), (1, 7), (3, 4), (3, 5), (4, 5)))
# 2-indegree-bounded orientation of FIG1 with indegree 0 at vertex 2,
# stored as (tail, head) pairs matching FIG1's edge ids.
FIG1_ARCS = ((0, 1), (2, 0), (3, 0), (2, 1), (1, 3), (2, 3),
             (0, 6), (6, 7), (1, 7), (3, 4), (3, 5), (5, 4))

# 12-vertex example with a spanning tree (the first 11 arc pairs below are
# non-tree "wavy" arcs last): vertices 0..11, all indegrees <= 2.
FIG2_TREE_ARCS = ((3, 1), (4, 3), (4, 2), (4, 0), (5, 4), (5, 7),
                  (7, 6), (6, 8), (7, 9), (9, 10), (10, 11))
FIG2_WAVY_ARCS = ((2, 1), (3, 2), (4, 7), (7, 8), (8, 9), (8, 10))
FIG2_ARCS = FIG2_TREE_ARCS + FIG2_WAVY_ARCS
FIG2 = Graph(12, FIG2_ARCS)


def _brute_violating_superset(g: Graph, u0: set[int], k: int, l: int) -> bool:
    others = [v for v in range(g.n) if v not in u0]
    for r in range(1, len(others) + 1):
        for extra in itertools.combinations(others, r):
            xs = u0 | set(extra)
            if induced_edge_count(g, xs) > k * len(xs) - l:
                return True
    return False


def test_low_range_cycle_not_sparse():
    res = check_sparsity(TRIANGLE, 1, 1)
    assert not res.sparse
    assert res.certificate.vertices == frozenset({0, 1, 2})


def test_low_range_tree_sparse():
    tree = Graph(5, ((0, 1), (1, 2), (2, 3), (2, 4)))
    assert check_sparsity(tree, 1, 1).sparse


def test_low_range_figure_eight():
    # two triangles sharing vertex 0: 6 edges on 5 vertices
    g = Graph(5, ((0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)))
    res = check_sparsity(g, 1, 0)
    assert not res.sparse
    xs = res.certificate.vertices
    assert induced_edge_count(g, xs) > len(xs)
    assert brute_force_check(g, SparsityParams(1, 0)) is not None


def test_low_range_multigraph_with_loops():
    g = Graph(2, ((0, 0), (0, 1), (0, 1)))
    assert check_sparsity(g, 2, 1).sparse
    assert not check_sparsity(g, 2, 2).sparse


def test_mid_range_examples():
    assert not check_sparsity(K4, 2, 3).sparse
    assert check_sparsity(TRIANGLE, 2, 3).sparse
    res = check_sparsity(FIG1, 2, 3)
    assert not res.sparse
    assert verify_certificate(FIG1, SparsityParams(2, 3), res.certificate)


def test_high_range_examples():
    res = check_sparsity(TRIANGLE, 2, 4)
    assert not res.sparse
    assert res.certificate.vertices == frozenset({0, 1, 2})
    assert res.certificate.induced_edges == 3 > 2 == res.certificate.bound
    assert check_sparsity(C4, 2, 4).sparse
    res5 = check_sparsity(K5, 3, 6)
    assert not res5.sparse
    assert res5.certificate.vertices == frozenset(range(5))


def test_dispatch_and_short_circuit():
    assert check_sparsity(K4, 2, 2).sparse
    assert check_sparsity(Graph(5, ()), 3, 7).sparse
    # m > kn short-circuit returns the whole vertex set
    dense = Graph(2, tuple((0, 1) for _ in range(5)))
    res = check_sparsity(dense, 2, 1)
    assert not res.sparse
    assert res.certificate.vertices == frozenset({0, 1})


def test_validation_errors_raise():
    loop = Graph(2, ((0, 0), (0, 1)))
    with pytest.raises(InputError):
        check_sparsity(loop, 2, 3)
    parallel = Graph(2, ((0, 1), (0, 1)))
    with pytest.raises(InputError):
        check_sparsity(parallel, 2, 4)
    with pytest.raises(ParameterError):
        check_sparsity(TRIANGLE, 2, 6)


def test_superset_sparsity_figure_one():
    d0 = Orientation(Graph(8, FIG1_ARCS))
    assert d0.indeg[2] == 0 and max(d0.indeg) <= 2
    cert = check_superset_sparsity(d0, {2}, 2, 3)
    assert cert is not None
    assert cert.vertices == frozenset({0, 1, 2, 3})
    assert cert.induced_edges == 6 > 5 == cert.bound


def test_superset_sparsity_single_vertex():
    d0 = Orientation(Graph(1, ()))
    assert check_superset_sparsity(d0, {0}, 2, 3) is None


def test_superset_sparsity_k4():
    # brute force: every strict superset of {0} of size 4 violates (2,3)
    from klsparse import reorient_to_source
    from klsparse import bounded_orientation
    cert0, d = bounded_orientation(K4, 2)
    assert cert0 is None
    cert1, d0 = reorient_to_source(d, 2, {0})
    assert cert1 is None
    cert = check_superset_sparsity(d0, {0}, 2, 3)
    assert cert is not None
    assert cert.vertices == frozenset(range(4))
    assert _brute_violating_superset(K4, {0}, 2, 3)


def test_superset_sparsity_contract_checks():
    d = Orientation(TRIANGLE)  # indegrees [0,1,2], not {1}-source
    with pytest.raises(ContractError):
        check_superset_sparsity(d, {1}, 2, 3)
    with pytest.raises(ContractError):
        check_superset_sparsity(Orientation(Graph(2, ())), {0}, 2, 5)  # l > (t+1)k


def test_saturated_violation_k4_star_tree():
    from klsparse import bounded_orientation
    cert0, d = bounded_orientation(K4, 2)
    star = ((0, 1), (0, 2), (0, 3))
    cert = saturated_violation(d, star, SparsityParams(2, 3))
    assert cert is not None
    assert cert.vertices == frozenset(range(4))


def test_saturated_violation_triangle_tight():
    from klsparse import bounded_orientation
    cert0, d = bounded_orientation(TRIANGLE, 2)
    cert = saturated_violation(d, ((0, 1), (1, 2)), SparsityParams(2, 3))
    assert cert is None


def test_saturated_violation_requires_spanning_tree():
    d = Orientation(K4)
    with pytest.raises(ContractError):
        saturated_violation(d, ((0, 1), (0, 2)), SparsityParams(2, 3))
    with pytest.raises(ContractError):
        saturated_violation(d, ((0, 1), (0, 2), (0, 1)), SparsityParams(2, 3))


def test_figure_two_sparse_and_recursion_finds_planted_set():
    d = Orientation(FIG2)
    assert max(d.indeg) <= 2
    p = SparsityParams(2, 3)
    assert brute_force_check(FIG2, p) is None
    assert check_sparsity(FIG2, 2, 3).sparse
    tree = FIG2_TREE_ARCS
    assert saturated_violation(d, tree, p) is None

    # adding one edge inside the left block makes {1,2,3,4} violate;
    # that set avoids the root centroid, so the recursion must descend
    g2 = Graph(12, FIG2_ARCS + ((1, 4),))
    d2 = Orientation(g2)
    assert max(d2.indeg) <= 2
    assert induced_edge_count(g2, {1, 2, 3, 4}) == 6 > 5
    cert = saturated_violation(d2, tree, p)
    assert cert is not None
    assert verify_certificate(g2, p, cert)
    assert brute_force_check(g2, p) is not None
    assert not check_sparsity(g2, 2, 3).sparse


def test_main_lemma_iff_small_sweep():
    rng = random.Random(2024)
    checked = 0
    for _ in range(60):
        n = rng.randint(2, 7)
        k = rng.randint(1, 3)
        t = rng.randint(0, min(2, n - 1))
        l = rng.randint(t * k, (t + 1) * k)
        u0 = set(rng.sample(range(n), t))
        edges = []
        indeg = [0] * n
        for _ in range(rng.randint(0, 3 * n)):
            u, v = rng.sample(range(n), 2)
            if u in u0 and v in u0:
                continue
            heads = [w for w in (u, v) if w not in u0 and indeg[w] < k]
            if not heads:
                continue
            hd = rng.choice(heads)
            tl = u if hd == v else v
            edges.append((tl, hd))
            indeg[hd] += 1
        g = Graph(n, tuple(edges))
        d0 = Orientation(g)
        exists = _brute_violating_superset(g, u0, k, l)
        cert = check_superset_sparsity(d0, u0, k, l)
        assert (cert is not None) == exists
        if cert is not None:
            xs = cert.vertices
            assert set(xs) > u0
            assert induced_edge_count(g, xs) > k * len(xs) - l
        checked += 1
    assert checked == 60


def test_high_range_prefix_soundness():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(3, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        edges = tuple(pairs[: rng.randint(0, len(pairs))])
        k = rng.randint(1, 3)
        l = rng.randint(2 * k, 3 * k - 1)
        p = SparsityParams(k, l)
        g = Graph(n, edges)
        if brute_force_check(g, p) is None:
            # every prefix of a sparse graph's edges is sparse too
            for i in range(len(edges) + 1):
                assert check_sparsity_high(Graph(n, edges[:i]), p).sparse


def test_saturation_completeness_planted():
    # a violating set saturated by the spanning tree must always be found
    from klsparse import bounded_orientation
    rng = random.Random(888)
    done = 0
    while done < 200:
        k = rng.randint(2, 3)
        l = rng.randint(k + 1, 2 * k - 1)
        n = rng.randint(4, 10)
        s = rng.randint(2, n - 1)
        inside = list(range(s))
        tree = [(rng.randrange(i), i) for i in range(1, s)]      # spans the planted set
        tree += [(rng.randrange(i), i) for i in range(s, n)]     # attach the rest
        planted = []
        while len(planted) < k * s - l + 1:
            u, v = rng.sample(inside, 2)
            planted.append((min(u, v), max(u, v)))
        g = Graph(n, tuple(tree) + tuple(planted))
        cert0, d = bounded_orientation(g, k)
        if cert0 is not None:
            continue  # planted multi-edges can exceed (k,0); resample
        p = SparsityParams(k, l)
        assert induced_edge_count(g, inside) > k * s - l
        cert = saturated_violation(d, tree, p)
        assert cert is not None
        assert verify_certificate(g, p, cert)
        done += 1


def test_verdict_monotone_in_l():
    rng = random.Random(321)
    for _ in range(100):
        n = rng.randint(1, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        g = Graph(n, tuple(pairs[: rng.randint(0, len(pairs))]))
        k = rng.randint(1, 3)
        verdicts = [check_sparsity(g, k, l).sparse for l in range(3 * k)]
        for smaller, larger in zip(verdicts, verdicts[1:]):
            if larger:
                assert smaller


def test_range_drivers_reject_wrong_range():
    with pytest.raises(ContractError):
        check_sparsity_low(TRIANGLE, SparsityParams(2, 3))
    with pytest.raises(ContractError):
        check_sparsity_mid(TRIANGLE, SparsityParams(2, 2))
    with pytest.raises(ContractError):
        check_sparsity_high(TRIANGLE, SparsityParams(2, 3))


def test_certificate_json_round_trip():
    res = check_sparsity(K4, 2, 3)
    payload = json.loads(certificate_json(SparsityParams(2, 3), res.certificate))
    assert payload == {
        "k": 2,
        "l": 3,
        "sparse": False,
        "violating_set": [0, 1, 2, 3],
        "induced_edges": 6,
        "bound": 5,
    }
