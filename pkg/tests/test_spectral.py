"""Eigensolver correctness against the numpy reference, matrix builders,
eigenvalue grouping, structural lemma checks, and product-spectrum identities.
"""

import math
import random

import numpy as np
import pytest

from qspectra.graph_core import (
    Graph,
    complete,
    complete_bipartite,
    crown,
    cycle,
    disjoint_union,
    matching,
    path,
    prism,
    random_graph,
    star,
    structure,
)
from qspectra.spectral import (
    BACKEND,
    a_spectrum,
    adjacency_matrix,
    check_spectral_lemmas,
    l_spectrum,
    laplacian_matrix,
    product_spectrum_check,
    q_spectrum,
    signless_laplacian_matrix,
    symmetric_eigenvalues,
    zero_multiplicity,
)


def test_backend_reported():
    assert BACKEND in ("compiled", "python")
    _, report = symmetric_eigenvalues(np.eye(3))
    assert report.backend == BACKEND


# -- matrix builders -------------------------------------------------------------


def test_adjacency_matrix_entries():
    g = path(3)
    a = adjacency_matrix(g)
    expected = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=np.float64)
    assert np.array_equal(a, expected)


def test_laplacian_row_sums_vanish():
    rng = random.Random(7)
    for _ in range(20):
        g = random_graph(rng.randrange(1, 10), rng.random(), rng)
        lap = laplacian_matrix(g)
        assert np.array_equal(lap.sum(axis=1), np.zeros(g.n))


def test_signless_laplacian_is_degree_plus_adjacency():
    rng = random.Random(8)
    for _ in range(20):
        g = random_graph(rng.randrange(1, 10), rng.random(), rng)
        q = signless_laplacian_matrix(g)
        d = np.diag([float(x) for x in g.degrees])
        assert np.array_equal(q, d + adjacency_matrix(g))


# -- solver ----------------------------------------------------------------------


def test_solver_rejects_bad_inputs():
    with pytest.raises(ValueError):
        symmetric_eigenvalues(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        symmetric_eigenvalues(np.zeros((0, 0)))
    with pytest.raises(ValueError):
        symmetric_eigenvalues(np.array([[0.0, np.inf], [np.inf, 0.0]]))
    with pytest.raises(ValueError):
        symmetric_eigenvalues(np.array([[0.0, 1.0], [0.5, 0.0]]))


def test_solver_leaves_input_unchanged():
    mat = np.array([[2.0, 1.0], [1.0, 2.0]])
    copy = mat.copy()
    symmetric_eigenvalues(mat)
    assert np.array_equal(mat, copy)


def test_diagonal_matrix_converges_without_sweeps():
    values, report = symmetric_eigenvalues(np.diag([3.0, -1.0, 5.0]))
    assert report.sweeps == 0
    assert report.converged
    assert list(values) == [5.0, 3.0, -1.0]


def test_one_by_one():
    values, report = symmetric_eigenvalues(np.array([[4.0]]))
    assert list(values) == [4.0]
    assert report.converged


def test_eigenvalues_match_numpy_on_random_graphs():
    rng = random.Random(20260819)
    for _ in range(40):
        n = rng.randrange(1, 13)
        g = random_graph(n, rng.choice([0.2, 0.5, 0.8]), rng)
        for build in (adjacency_matrix, laplacian_matrix, signless_laplacian_matrix):
            mat = build(g)
            values, report = symmetric_eigenvalues(mat)
            assert report.converged
            reference = np.sort(np.linalg.eigvalsh(mat))[::-1]
            assert np.max(np.abs(values - reference)) <= 1e-9 * max(1.0, float(n))


def test_eigenvalues_match_numpy_on_dense_symmetric():
    rng = np.random.default_rng(99)
    for _ in range(20):
        n = int(rng.integers(2, 16))
        raw = rng.normal(size=(n, n))
        mat = (raw + raw.T) / 2.0
        values, report = symmetric_eigenvalues(mat)
        assert report.converged
        reference = np.sort(np.linalg.eigvalsh(mat))[::-1]
        assert np.max(np.abs(values - reference)) <= 1e-10 * n


def test_error_bound_covers_termination():
    mat = signless_laplacian_matrix(prism(5))
    _, report = symmetric_eigenvalues(mat)
    assert report.error_bound == report.off_frobenius
    assert report.off_frobenius <= report.termination_threshold


def test_values_descending():
    rng = random.Random(3)
    for _ in range(10):
        g = random_graph(8, 0.5, rng)
        values = q_spectrum(g).values
        assert all(values[i] >= values[i + 1] for i in range(len(values) - 1))


# -- grouping and spectra --------------------------------------------------------


def test_complete_graph_q_groups():
    for n in range(2, 9):
        groups = q_spectrum(complete(n)).groups
        assert len(groups) == 2
        (top, top_mult), (rest, rest_mult) = groups
        assert top_mult == 1 and rest_mult == n - 1
        assert abs(top - (2 * n - 2)) <= 1e-9
        assert abs(rest - (n - 2)) <= 1e-9


def test_crown_q_groups():
    for r in (2, 3, 4):
        groups = q_spectrum(crown(r)).groups
        reps = {round(rep, 6): mult for rep, mult in groups}
        assert reps == {float(2 * r): 1, float(r + 1): r, float(r - 1): r, 0.0: 1}


def test_star_q_spectrum_closed_form():
    for n in range(3, 10):
        values = q_spectrum(star(n)).values
        expected = sorted([float(n)] + [1.0] * (n - 2) + [0.0], reverse=True)
        assert max(abs(a - b) for a, b in zip(values, expected)) <= 1e-9


def test_cycle_q_spectrum_closed_form():
    for n in range(3, 12):
        values = sorted(q_spectrum(cycle(n)).values)
        expected = sorted(2 + 2 * math.cos(2 * math.pi * k / n) for k in range(n))
        assert max(abs(a - b) for a, b in zip(values, expected)) <= 1e-9


def test_adjacency_and_laplacian_spectra_of_complete():
    n = 6
    a = a_spectrum(complete(n)).values
    assert abs(a[0] - (n - 1)) <= 1e-9
    assert all(abs(v + 1) <= 1e-9 for v in a[1:])
    lap = l_spectrum(complete(n)).values
    assert all(abs(v - n) <= 1e-9 for v in lap[:-1])
    assert abs(lap[-1]) <= 1e-9


def test_spectrum_radius():
    spec = a_spectrum(matching(2))
    assert spec.radius == 1.0
    spec = q_spectrum(complete(4))
    assert abs(spec.radius - 6.0) <= 1e-9


def test_zero_multiplicity_counts_bipartite_components():
    cases = [
        complete(4),
        cycle(4),
        cycle(5),
        cycle(6),
        star(5),
        disjoint_union(cycle(4), cycle(5)),
        disjoint_union(star(3), star(3), complete(5)),
        matching(4),
        Graph(3, ()),
    ]
    for g in cases:
        assert zero_multiplicity(q_spectrum(g)) == structure(g).bipartite_component_count


def test_zero_multiplicity_random():
    rng = random.Random(17)
    for _ in range(60):
        g = random_graph(rng.randrange(1, 11), rng.choice([0.15, 0.4, 0.7]), rng)
        assert zero_multiplicity(q_spectrum(g)) == structure(g).bipartite_component_count


# -- lemma checks ----------------------------------------------------------------


def test_lemma_checks_all_pass_on_random_graphs():
    rng = random.Random(31)
    for _ in range(80):
        g = random_graph(rng.randrange(1, 11), rng.choice([0.2, 0.5, 0.8]), rng)
        for check in check_spectral_lemmas(g):
            if check.applicable:
                assert check.holds, (g, check)
                if check.consistent is not None:
                    assert check.consistent, (g, check)


def test_lemma_check_ids_and_gating():
    ids = [c.check_id for c in check_spectral_lemmas(complete(4))]
    assert ids == [
        "q_sum",
        "q_square_sum",
        "zero_multiplicity_bipartite",
        "radius_vs_average",
        "min_vs_average",
        "radius_degree_window",
    ]
    by_id = {c.check_id: c for c in check_spectral_lemmas(matching(2))}
    assert not by_id["min_vs_average"].applicable
    assert by_id["min_vs_average"].holds is None


def test_min_vs_average_equality_exactly_on_complete():
    for g, expect in [(complete(5), True), (cycle(5), False), (star(4), False)]:
        by_id = {c.check_id: c for c in check_spectral_lemmas(g)}
        check = by_id["min_vs_average"]
        assert check.applicable
        assert check.equality is expect
        assert check.condition_met is expect
        assert check.consistent


def test_radius_vs_average_equality_exactly_on_regular():
    for g, expect in [(cycle(6), True), (prism(4), True), (path(4), False)]:
        by_id = {c.check_id: c for c in check_spectral_lemmas(g)}
        check = by_id["radius_vs_average"]
        assert check.equality is expect
        assert check.consistent


def test_radius_degree_window_consistency_only_when_connected():
    by_id = {c.check_id: c for c in check_spectral_lemmas(disjoint_union(complete(3), complete(3)))}
    assert by_id["radius_degree_window"].consistent is None
    by_id = {c.check_id: c for c in check_spectral_lemmas(complete(3))}
    assert by_id["radius_degree_window"].consistent is True


# -- Cartesian product spectra ---------------------------------------------------


def test_product_spectrum_all_kinds():
    pairs = [
        (cycle(3), path(2)),
        (path(3), path(3)),
        (star(3), cycle(4)),
        (complete(4), matching(1)),
    ]
    for g, h in pairs:
        for kind in ("adjacency", "laplacian", "signless_laplacian"):
            result = product_spectrum_check(g, h, kind)
            assert result.ok, (g, h, kind, result)


def test_product_spectrum_unknown_kind():
    with pytest.raises(ValueError):
        product_spectrum_check(path(2), path(2), "distance")


# -- backend equivalence ------------------------------------------------------


def test_compiled_and_python_kernels_bit_identical():
    cy = pytest.importorskip("qspectra._jacobi_cy")
    from qspectra import _jacobi_py as py

    rng = random.Random(424242)
    nprng = np.random.default_rng(424242)
    for trial in range(50):
        if trial % 2 == 0:
            g = random_graph(rng.randrange(1, 12), rng.choice([0.2, 0.5, 0.8]), rng)
            mat = signless_laplacian_matrix(g)
        else:
            n = int(nprng.integers(2, 12))
            raw = nprng.normal(size=(n, n))
            mat = np.ascontiguousarray((raw + raw.T) / 2.0)
        wc = mat.copy(order="C")
        wp = mat.copy(order="C")
        rc = cy.jacobi_sweeps(wc)
        rp = py.jacobi_sweeps(wp)
        assert rc[0] == rp[0]                       # sweep counts
        assert bool(rc[1]) == bool(rp[1])           # converged flags
        assert wc.tobytes() == wp.tobytes()         # every float64 bit
