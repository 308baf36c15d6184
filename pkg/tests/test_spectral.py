import math
import random
from fractions import Fraction

import numpy as np
import pytest

from specmatch import (
    InvalidInput,
    InvalidMatrix,
    InvalidPartition,
    NoConvergence,
    Partition,
    TooLarge,
    check_interlacing,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    eigenvalues_all,
    graph_eigenvalues,
    graph_radius,
    is_equitable,
    path_graph,
    quotient_matrix,
    signless_laplacian,
    spectral_radius,
)

from conftest import random_graph


def test_signless_laplacian_entries():
    q = signless_laplacian(path_graph(3))
    assert q.tolist() == [[1, 1, 0], [1, 2, 1], [0, 1, 1]]
    assert signless_laplacian(complete_graph(1)).tolist() == [[0.0]]
    q4 = signless_laplacian(cycle_graph(4))
    assert np.array_equal(np.diag(q4), [2, 2, 2, 2])


def test_spectral_radius_regular_graphs():
    # d-regular graphs have radius exactly 2d
    assert graph_radius(cycle_graph(4)) == pytest.approx(4.0, abs=1e-10)
    assert graph_radius(complete_graph(4)) == pytest.approx(6.0, abs=1e-10)


def test_spectral_radius_p3():
    # characteristic polynomial of Q(P3) factors as q(q-1)(q-3) by hand
    assert graph_radius(path_graph(3)) == pytest.approx(3.0, abs=1e-10)


def test_spectral_radius_complete_bipartite():
    assert graph_radius(complete_bipartite(4, 3)) == pytest.approx(7.0, abs=1e-10)


def test_spectral_radius_disconnected_max_over_components():
    g = complement(complete_bipartite(4, 3))  # K4 + K3 disjoint
    assert graph_radius(g) == pytest.approx(6.0, abs=1e-10)


def test_spectral_radius_rejects_asymmetric():
    with pytest.raises(InvalidMatrix):
        spectral_radius([[0.0, 1.0], [0.5, 0.0]])


def test_spectral_radius_iteration_cap():
    q = signless_laplacian(path_graph(6))
    with pytest.raises(NoConvergence):
        spectral_radius(q, tol=1e-15, max_iterations=2)


def test_spectral_radius_negative_entries():
    # dominant-magnitude eigenvalue is negative; shift must still find the max
    m = np.array([[-5.0, 1.0], [1.0, -5.0]])
    radius, _ = spectral_radius(m)
    assert radius == pytest.approx(-4.0, abs=1e-9)


def test_perron_vector_nonnegative_unit():
    radius, vec = spectral_radius(signless_laplacian(cycle_graph(5)))
    assert radius == pytest.approx(4.0, abs=1e-10)
    assert np.all(vec >= 0) and np.linalg.norm(vec) == pytest.approx(1.0)


def test_eigenvalues_p3_and_k2():
    assert graph_eigenvalues(path_graph(3)).eigenvalues == pytest.approx(
        [3.0, 1.0, 0.0], abs=1e-9
    )
    assert graph_eigenvalues(path_graph(2)).eigenvalues == pytest.approx(
        [2.0, 0.0], abs=1e-9
    )


def test_eigenvalues_c5_circulant_closed_form():
    expected = sorted(
        (2 + 2 * math.cos(2 * math.pi * k / 5) for k in range(5)), reverse=True
    )
    got = graph_eigenvalues(cycle_graph(5)).eigenvalues
    assert got == pytest.approx(expected, abs=1e-9)


def test_eigenvalues_sorted_and_radius_field():
    res = graph_eigenvalues(complete_bipartite(3, 2))
    assert list(res.eigenvalues) == sorted(res.eigenvalues, reverse=True)
    assert res.radius == res.eigenvalues[0]


def test_dense_cap():
    with pytest.raises(TooLarge):
        eigenvalues_all(np.eye(5), dense_cap=4)


def test_solvers_agree_and_match_numpy():
    rng = random.Random(17)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 12))
        q = signless_laplacian(g)
        full = eigenvalues_all(q)
        radius, _ = spectral_radius(q)
        assert abs(full.radius - radius) <= 1e-9
        reference = sorted(np.linalg.eigvalsh(q), reverse=True)
        assert full.eigenvalues == pytest.approx(reference, abs=1e-8)


def test_psd_and_trace_identity():
    rng = random.Random(23)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 11))
        res = graph_eigenvalues(g)
        assert min(res.eigenvalues) >= -1e-9
        assert sum(res.eigenvalues) == pytest.approx(sum(g.degrees()), abs=1e-8)


# --- quotient matrices ------------------------------------------------------


def test_quotient_complete_bipartite_parts():
    g = complete_bipartite(4, 3)
    q = signless_laplacian(g)
    r = quotient_matrix(q, Partition.from_blocks([range(4), range(4, 7)]))
    assert r.entries == ((Fraction(3), Fraction(3)), (Fraction(4), Fraction(4)))
    assert r.radius_exact() == Fraction(7)
    assert max(r.eigenvalues()) == pytest.approx(7.0, abs=1e-9)


def test_quotient_deficiency_partition_shape():
    # star: S = {hub}, T = leaves; crossing-count quotient has radius a/s + a/t
    g = complete_bipartite(1, 3)
    r = quotient_matrix(
        signless_laplacian(g), Partition.from_blocks([[0], [1, 2, 3]])
    )
    a, s, t = 3, 1, 3
    assert r.entries == (
        (Fraction(a, s), Fraction(a, s)),
        (Fraction(a, t), Fraction(a, t)),
    )
    assert r.radius_exact() == Fraction(a, s) + Fraction(a, t)


def test_quotient_single_block():
    r = quotient_matrix(
        signless_laplacian(cycle_graph(4)), Partition.from_blocks([range(4)])
    )
    assert r.entries == ((Fraction(4),),)
    assert r.radius_exact() == Fraction(4)


def test_quotient_p3_object():
    r = quotient_matrix(
        signless_laplacian(path_graph(3)), Partition.from_blocks([[0, 2], [1]])
    )
    assert r.entries == ((Fraction(1), Fraction(1)), (Fraction(2), Fraction(2)))
    assert sorted(r.eigenvalues(), reverse=True) == pytest.approx([3.0, 0.0], abs=1e-9)


def test_quotient_rejects_bad_partition():
    q = signless_laplacian(path_graph(3))
    with pytest.raises(InvalidPartition):
        quotient_matrix(q, Partition.from_blocks([[0, 1]]))
    with pytest.raises(InvalidPartition):
        Partition.from_blocks([[0], []])


def test_is_equitable():
    assert is_equitable(
        complete_bipartite(4, 3), Partition.from_blocks([range(4), range(4, 7)])
    )
    assert is_equitable(path_graph(3), Partition.from_blocks([[0, 2], [1]]))
    assert not is_equitable(path_graph(4), Partition.from_blocks([[0, 1], [2, 3]]))


def test_equitable_quotient_radius_matches():
    cases = [
        (complete_bipartite(4, 3), [range(4), range(4, 7)]),
        (complete_bipartite(1, 3), [[0], [1, 2, 3]]),
        (cycle_graph(6), [range(6)]),
    ]
    for g, blocks in cases:
        p = Partition.from_blocks(blocks)
        assert is_equitable(g, p)
        r = quotient_matrix(signless_laplacian(g), p)
        assert max(r.eigenvalues()) == pytest.approx(graph_radius(g), abs=1e-8)


# --- interlacing ------------------------------------------------------------


def test_interlacing_p3_quotient_tight():
    assert check_interlacing([3.0, 1.0, 0.0], [3.0, 0.0]) == (True, True)


def test_interlacing_regular_single_block():
    ok, _ = check_interlacing([4.0, 2.0, 2.0, 0.0], [4.0])
    assert ok


def test_interlacing_violation():
    ok, tight = check_interlacing([3.0, 1.0, 0.0], [5.0, 0.0])
    assert not ok


def test_interlacing_size_check():
    with pytest.raises(InvalidInput):
        check_interlacing([1.0, 0.0], [1.0, 0.0])


def test_random_quotients_interlace():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(3, 10)
        g = random_graph(rng, n)
        t = rng.randint(1, n - 1)
        assignment = [rng.randrange(t) for _ in range(n)]
        for v in range(t):  # force non-empty blocks
            assignment[v % n] = v
        blocks = [[v for v in range(n) if assignment[v] == b] for b in range(t)]
        blocks = [b for b in blocks if b]
        if len(blocks) >= n:
            continue
        q = signless_laplacian(g)
        r = quotient_matrix(q, Partition.from_blocks(blocks))
        ok, _ = check_interlacing(eigenvalues_all(q), r.eigenvalues(), tol=1e-8)
        assert ok
