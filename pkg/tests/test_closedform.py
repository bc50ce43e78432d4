import math

import numpy as np
import pytest

from spectree.closedform import (
    CubicCoeffs,
    book_aconn_bound,
    book_line_laplacian_spectrum,
    integer_roots_of_monic_cubic,
    integrality_cubic,
    is_beta_laplacian_integral,
    quad_roots,
    star_product_spectrum,
    t1st_line_laplacian_spectrum,
    t1st_q_spectrum_m2,
    windmill_product_spectrum,
    windmill_q_quadratic,
    wprime_algebraic_connectivity,
    wprime_product_spectrum,
    wprime_quadratics,
)
from spectree.eigen import eigenvalues, group_spectrum, spectra_equal
from spectree.families import (
    beta_m,
    book_graph,
    complete_graph,
    kronecker,
    line_graph,
    star_graph,
    tkst_tree,
    windmill_graph,
    wprime_graph,
)
from spectree.spectra import laplacian, q_matrix


def _direct(g, m):
    return group_spectrum(eigenvalues(laplacian(kronecker(g, complete_graph(m)))))


def test_quad_roots():
    assert quad_roots(5.0, 6.0) == (2.0, 3.0)
    lo, hi = quad_roots(1.0, -1.0)
    assert abs(lo - (1 - math.sqrt(5)) / 2) <= 1e-12
    assert abs(hi - (1 + math.sqrt(5)) / 2) <= 1e-12
    with pytest.raises(ValueError):
        quad_roots(0.0, 1.0)


def test_star_product_closed_vs_direct():
    for n in (3, 4, 5, 7):
        for m in (2, 3):
            closed = star_product_spectrum(n, m)
            direct = _direct(line_graph(star_graph(n))[0], m)
            assert spectra_equal(closed, direct, 1e-9)
    with pytest.raises(ValueError):
        star_product_spectrum(2, 2)
    with pytest.raises(ValueError):
        star_product_spectrum(4, 1)


def test_star_product_n4_m2_values():
    s = star_product_spectrum(4, 2)
    np.testing.assert_allclose(s.values(), [0, 1, 1, 3, 3, 4], atol=1e-12)


def test_t1st_line_laplacian_closed_vs_direct():
    for s in (1, 2, 3, 4):
        for t in range(1, s + 1):
            closed = t1st_line_laplacian_spectrum(s, t)
            direct = group_spectrum(eigenvalues(laplacian(line_graph(tkst_tree(1, s, t))[0])))
            assert spectra_equal(closed, direct, 1e-9)
            assert closed.values()[-1] == s + t + 1  # largest eigenvalue
            assert closed.dimension == s + t + 1


def test_t1st_q_spectrum_m2_vs_direct():
    for s, t in ((1, 1), (2, 2), (3, 2), (4, 3)):
        closed = t1st_q_spectrum_m2(s, t)
        direct = group_spectrum(eigenvalues(q_matrix(line_graph(tkst_tree(1, s, t))[0], 2)))
        assert spectra_equal(closed, direct, 1e-9)


def test_cubic_roots_match_numpy():
    for s, t, m in ((2, 2, 2), (3, 3, 2), (4, 2, 3), (5, 5, 4), (1, 1, 2)):
        cub = integrality_cubic(s, t, m)
        got = np.array(cub.roots())
        want = np.sort(np.roots([1.0, -cub.a, cub.b, -cub.c]).real)
        np.testing.assert_allclose(got, want, atol=1e-7)


def test_cubic_332_is_integral():
    cub = integrality_cubic(3, 3, 2)
    assert (cub.a, cub.b, cub.c) == (16, 79, 120)
    assert cub.integer_roots() == (3, 5, 8)
    np.testing.assert_allclose(cub.roots(), [3.0, 5.0, 8.0], atol=1e-9)


def test_cubic_222_is_not_integral():
    cub = integrality_cubic(2, 2, 2)
    assert cub.integer_roots() is None
    want = sorted([3.0, (7 - math.sqrt(17)) / 2, (7 + math.sqrt(17)) / 2])
    np.testing.assert_allclose(cub.roots(), want, atol=1e-9)


def test_integer_roots_of_monic_cubic():
    # (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    assert integer_roots_of_monic_cubic(6, 11, 6) == (1, 2, 3)
    # x(x-2)(x-5) = x^3 - 7x^2 + 10x
    assert integer_roots_of_monic_cubic(7, 10, 0) == (0, 2, 5)
    # (x+1)x(x-1) = x^3 - x
    assert integer_roots_of_monic_cubic(0, -1, 0) == (-1, 0, 1)
    # irrational roots
    assert integer_roots_of_monic_cubic(7, 12, 3) is None
    # one integer root, irrational quadratic factor: (x-1)(x^2-3)
    assert integer_roots_of_monic_cubic(1, -3, -3) is None


def test_is_beta_laplacian_integral():
    assert is_beta_laplacian_integral(3, 3, 2)
    assert not is_beta_laplacian_integral(2, 2, 2)
    for s in (1, 2, 3):
        for t in range(1, s + 1):
            for m in (2, 3):
                exact = is_beta_laplacian_integral(s, t, m)  # raises on mismatch
                assert exact in (True, False)


def test_windmill_product_closed_vs_direct():
    for eta, mu, m in ((2, 3, 2), (3, 3, 3), (2, 4, 2), (4, 3, 2)):
        closed = windmill_product_spectrum(eta, mu, m)
        direct = _direct(windmill_graph(eta, mu), m)
        assert spectra_equal(closed, direct, 1e-8)
    with pytest.raises(ValueError):
        windmill_product_spectrum(1, 3, 2)


def test_windmill_quadratic_values():
    p, q = windmill_q_quadratic(2, 3, 2)
    vals = eigenvalues(q_matrix(windmill_graph(2, 3), 2))
    lo, hi = quad_roots(float(p), float(q))
    assert any(abs(v - lo) <= 1e-9 for v in vals)
    assert any(abs(v - hi) <= 1e-9 for v in vals)


def test_wprime_product_closed_vs_direct():
    for eta, mu, m in ((2, 2, 2), (3, 3, 2), (3, 4, 3), (4, 3, 2)):
        closed = wprime_product_spectrum(eta, mu, m)
        direct = _direct(wprime_graph(eta, mu), m)
        assert spectra_equal(closed, direct, 1e-8)
    assert set(wprime_quadratics(3, 3, 2)) == {"wind1", "wind2", "wind3"}
    with pytest.raises(ValueError):
        wprime_product_spectrum(2, 1, 2)


def test_wprime_algebraic_connectivity():
    # (3,3,2): (6 - sqrt(24)) / 2
    want = (6 - math.sqrt(24)) / 2
    assert abs(wprime_algebraic_connectivity(3, 3, 2) - want) <= 1e-12
    got = eigenvalues(laplacian(kronecker(wprime_graph(3, 3), complete_graph(2))))[1]
    assert abs(got - want) <= 1e-8
    # the closed form only covers eta, mu >= 3
    with pytest.raises(ValueError):
        wprime_algebraic_connectivity(2, 3, 2)
    with pytest.raises(ValueError):
        wprime_algebraic_connectivity(3, 2, 2)


def test_book_line_laplacian_closed_vs_direct():
    for k in range(1, 9):
        closed = book_line_laplacian_spectrum(k)
        direct = group_spectrum(eigenvalues(laplacian(line_graph(book_graph(k))[0])))
        assert spectra_equal(closed, direct, 1e-9)


def test_book_k1_is_c4():
    np.testing.assert_allclose(
        book_line_laplacian_spectrum(1).values(), [0, 2, 2, 4], atol=1e-12
    )


def test_book_aconn_bound():
    assert abs(book_aconn_bound(3, 2) - (7 - math.sqrt(17)) / 2) <= 1e-12
    assert abs(book_aconn_bound(3, 3) - (7 - math.sqrt(17))) <= 1e-12
    with pytest.raises(ValueError):
        book_aconn_bound(1, 2)


def test_cubic_coeffs_frozen():
    cub = CubicCoeffs(a=1, b=2, c=3, s=1, t=1, m=2)
    with pytest.raises(AttributeError):
        cub.a = 5
