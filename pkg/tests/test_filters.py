import numpy as np
import pytest

from gsptk import (
    Domain,
    FitMethod,
    Graph,
    GraphKind,
    GraphSignal,
    ImpulseKind,
    PolynomialFilter,
    ResponseDirection,
    ShiftDomain,
    SingularMatrixError,
    apply_filter,
    basis_explicit,
    build,
    bundled_basis,
    circulant_convolve,
    convolve,
    dft_basis,
    fit_filter,
    gft_apply,
    igft_apply,
    impulse_family,
    matrix_from_response,
    modulate,
    response,
)
from gsptk.filters import read_filter, write_filter

from util import random_basis_graph


def ring4():
    return build(GraphKind.RING, 4), dft_basis(4)


def vertex(vals):
    return GraphSignal(np.asarray(vals, dtype=complex), Domain.VERTEX)


def spectral(vals):
    return GraphSignal(np.asarray(vals, dtype=complex), Domain.SPECTRAL)


# the cycle convolution showcase pair
X4 = [1.0, 2.0, 3.0, 4.0]
Y4 = [-1.0, 1.0, 2.0, 4.0]
Y4_RESPONSE = [6.0, -3 + 3j, -4.0, -3 - 3j]  # = P(lam) at the 4 ring frequencies


class TestApply:
    def test_degree_one_is_the_shift(self):
        g, basis = ring4()
        x = vertex(X4)
        out = apply_filter(PolynomialFilter([0.0, 1.0], ShiftDomain.VERTEX_A), g, basis, x)
        assert np.allclose(out.values, np.roll(x.values, 1))

    def test_vertex_showcase(self):
        g, basis = ring4()
        out = apply_filter(PolynomialFilter(Y4, ShiftDomain.VERTEX_A), g, basis, vertex(X4))
        assert np.max(np.abs(out.values - np.array([17, 19, 17, 7]))) < 1e-10

    def test_spectral_polynomial_acts_as_circular_convolution(self):
        # On the cycle M equals the adjacency, so applying sum_i c_i M^i to a
        # spectrum is circular convolution with c. The reference value is
        # pinned by the independent brute-force oracle.
        g, basis = ring4()
        out = apply_filter(
            PolynomialFilter(Y4_RESPONSE, ShiftDomain.SPECTRAL_M), g, basis, spectral(X4)
        )
        oracle = circulant_convolve(np.array(X4, dtype=complex), np.array(Y4_RESPONSE))
        assert np.max(np.abs(out.values - oracle)) < 1e-10
        assert np.max(np.abs(out.values - np.array([-24 + 6j, -16 - 6j, -4 - 6j, 4 + 6j]))) < 1e-10

    def test_domain_guard(self):
        from gsptk import DomainMismatchError

        g, basis = ring4()
        with pytest.raises(DomainMismatchError):
            apply_filter(PolynomialFilter([1.0], ShiftDomain.VERTEX_A), g, basis, spectral(X4))


class TestResponse:
    def test_degree_one_gives_frequencies(self):
        _, basis = ring4()
        out = response(PolynomialFilter([0.0, 1.0], ShiftDomain.VERTEX_A), basis)
        assert out.domain is Domain.SPECTRAL
        assert np.allclose(out.values, basis.lam)

    def test_constant(self):
        _, basis = ring4()
        out = response(PolynomialFilter([2.5j], ShiftDomain.SPECTRAL_M), basis)
        assert out.domain is Domain.VERTEX
        assert np.allclose(out.values, np.full(4, 2.5j))

    def test_ring_showcase_response(self):
        # oracle: evaluate the polynomial at each frequency directly
        _, basis = ring4()
        got = response(PolynomialFilter(Y4, ShiftDomain.VERTEX_A), basis)
        oracle = np.array([np.polyval(Y4[::-1], lam) for lam in basis.lam])
        assert np.max(np.abs(got.values - oracle)) < 1e-12
        assert np.max(np.abs(got.values - 2 * (basis.gft @ np.array(Y4)))) < 1e-12
        assert np.max(np.abs(got.values - np.array(Y4_RESPONSE))) < 1e-12

    def test_spectral_filter_uses_conjugated_frequencies(self):
        rng = np.random.default_rng(2)
        _, basis = random_basis_graph(rng, 6)
        p = rng.normal(size=4) + 1j * rng.normal(size=4)
        got = response(PolynomialFilter(p, ShiftDomain.SPECTRAL_M), basis)
        oracle = np.array([np.polyval(p[::-1], np.conj(lam)) for lam in basis.lam])
        assert np.max(np.abs(got.values - oracle)) < 1e-10


class TestMatrixFromResponse:
    def test_all_ones_is_identity(self):
        _, basis = ring4()
        m = matrix_from_response(basis, spectral(np.ones(4)), ResponseDirection.FREQ_RESPONSE_TO_PA)
        assert np.max(np.abs(m - np.eye(4))) < 1e-12

    def test_showcase_sampling_filter_columns(self):
        graph = build(GraphKind.EXAMPLE4, 4)
        basis = bundled_basis("example4", graph)
        pm = matrix_from_response(
            basis, vertex([0.0, 1.0, 0.0, 1.0]), ResponseDirection.VERTEX_RESPONSE_TO_PM
        )
        want = np.array(
            [
                [0.564, -0.412],
                [-0.817, 0.0],
                [0.296 - 0.106j, 0.41 + 0.205j],
                [0.296 + 0.106j, 0.41 - 0.205j],
            ]
        )
        assert np.max(np.abs(pm[:, :2] - want)) < 5e-3

    def test_ring_circulant_from_response(self):
        _, basis = ring4()
        pa = matrix_from_response(basis, spectral(Y4_RESPONSE), ResponseDirection.FREQ_RESPONSE_TO_PA)
        want = np.array(
            [[-1, 4, 2, 1], [1, -1, 4, 2], [2, 1, -1, 4], [4, 2, 1, -1]], dtype=float
        )
        assert np.max(np.abs(pa - want)) < 1e-10

    def test_consistency_with_horner_application(self):
        rng = np.random.default_rng(4)
        g, basis = random_basis_graph(rng, 7)
        p = rng.normal(size=7) + 1j * rng.normal(size=7)
        filt = PolynomialFilter(p, ShiftDomain.VERTEX_A)
        dense = matrix_from_response(basis, response(filt, basis), ResponseDirection.FREQ_RESPONSE_TO_PA)
        horner = np.column_stack(
            [
                apply_filter(filt, g, basis, vertex(np.eye(7)[:, k])).values
                for k in range(7)
            ]
        )
        scale = max(1.0, np.max(np.abs(horner)))
        assert np.max(np.abs(dense - horner)) < 1e-8 * scale


class TestModulate:
    def test_zeros_annihilate(self):
        assert np.array_equal(
            modulate(vertex(X4), vertex(np.zeros(4))).values, np.zeros(4, dtype=complex)
        )

    def test_showcase_sampling_modulation(self):
        x = vertex([-1.992, 0.93, -0.314, -0.577])
        delta = vertex([0.0, 1.0, 0.0, 1.0])
        out = modulate(delta, x)
        assert np.allclose(out.values, [0.0, 0.93, 0.0, -0.577])

    def test_commutative(self):
        rng = np.random.default_rng(5)
        a = spectral(rng.normal(size=6) + 1j * rng.normal(size=6))
        b = spectral(rng.normal(size=6))
        assert np.array_equal(modulate(a, b).values, modulate(b, a).values)

    def test_domain_guard(self):
        from gsptk import DomainMismatchError

        with pytest.raises(DomainMismatchError):
            modulate(vertex(X4), spectral(X4))


class TestFitFilter:
    def test_ring_identity_system(self):
        g, basis = ring4()
        fam = impulse_family(g, basis, ImpulseKind.VERTEX_IMPULSIVE)
        filt = fit_filter(vertex(Y4), fam)
        assert np.max(np.abs(filt.coeffs - np.array(Y4))) < 1e-12
        out = apply_filter(filt, g, basis, vertex(X4))
        assert np.max(np.abs(out.values - np.array([17, 19, 17, 7]))) < 1e-10

    def test_forward_generated_coefficients_recovered(self):
        rng = np.random.default_rng(6)
        g, basis = random_basis_graph(rng, 8, need_y0=True)
        p_true = rng.normal(size=8) + 1j * rng.normal(size=8)
        filt = PolynomialFilter(p_true, ShiftDomain.VERTEX_A)
        e0 = np.zeros(8)
        e0[0] = 1.0
        y = apply_filter(filt, g, basis, vertex(e0))
        for kind in (ImpulseKind.VERTEX_IMPULSIVE, ImpulseKind.SPECTRAL_FLAT):
            fam = impulse_family(g, basis, kind)
            if kind is ImpulseKind.VERTEX_IMPULSIVE:
                got = fit_filter(y, fam)
                assert np.max(np.abs(got.coeffs - p_true)) < 1e-6
            else:
                # flat-family fit reproduces the response, not the raw coefficients
                got = fit_filter(
                    GraphSignal(fam.D @ p_true, Domain.VERTEX), fam
                )
                assert np.max(np.abs(got.coeffs - p_true)) < 1e-6

    def test_dense_and_spectral_routes_agree(self):
        rng = np.random.default_rng(7)
        g, basis = random_basis_graph(rng, 6, need_y0=True)
        fam = impulse_family(g, basis, ImpulseKind.VERTEX_IMPULSIVE)
        y = vertex(rng.normal(size=6) + 1j * rng.normal(size=6))
        dense = fit_filter(y, fam, FitMethod.DENSE)
        yhat = gft_apply(basis, y)
        spectral_fit = fit_filter(yhat, fam, FitMethod.DENSE_SPECTRAL)
        assert np.max(np.abs(dense.coeffs - spectral_fit.coeffs)) < 1e-6

    def test_singular_fit_names_the_broken_assumption(self):
        g = Graph(np.diag([1.0, 2.0, 3.0]))
        basis = basis_explicit(np.eye(3), [1.0, 2.0, 3.0], g)
        fam = impulse_family(g, basis, ImpulseKind.VERTEX_IMPULSIVE)
        with pytest.raises(SingularMatrixError) as err:
            fit_filter(vertex([1.0, 1.0, 1.0]), fam)
        assert "y0" in str(err.value)

    def test_l1_approaches_dense_solution(self):
        g, basis = ring4()
        fam = impulse_family(g, basis, ImpulseKind.VERTEX_IMPULSIVE)
        y = vertex(Y4)
        dense = fit_filter(y, fam, FitMethod.DENSE)
        lasso = fit_filter(y, fam, FitMethod.L1, gamma=1e-9)
        assert np.max(np.abs(lasso.coeffs - dense.coeffs)) < 1e-4

    def test_l1_tolerates_singular_impulse_matrix(self):
        g = Graph(np.diag([1.0, 2.0, 3.0]))
        basis = basis_explicit(np.eye(3), [1.0, 2.0, 3.0], g)
        fam = impulse_family(g, basis, ImpulseKind.VERTEX_IMPULSIVE)
        target = vertex([1.0, 0.0, 0.0])
        filt = fit_filter(target, fam, FitMethod.L1, gamma=1e-8)
        resid = np.max(np.abs(fam.D @ filt.coeffs - target.values))
        assert resid < 1e-6


class TestConvolve:
    def test_delta_is_identity(self):
        g, basis = ring4()
        delta = vertex([1.0, 0.0, 0.0, 0.0])
        out = convolve(vertex(X4), delta, g, basis, Domain.VERTEX)
        assert np.max(np.abs(out.values - np.array(X4))) < 1e-12

    def test_vertex_showcase(self):
        g, basis = ring4()
        out = convolve(vertex(X4), vertex(Y4), g, basis, Domain.VERTEX)
        assert np.max(np.abs(out.values - np.array([17, 19, 17, 7]))) < 1e-6

    def test_spectral_showcase_matches_brute_force(self):
        # Three independent routes agree: the fitted spectral filter, the
        # circular-convolution oracle, and the transform-product theorem.
        g, basis = ring4()
        out = convolve(spectral(X4), spectral(Y4_RESPONSE), g, basis, Domain.SPECTRAL)
        oracle = circulant_convolve(np.array(X4, dtype=complex), np.array(Y4_RESPONSE))
        product = 2 * basis.gft @ (
            (basis.igft @ np.array(X4)) * (basis.igft @ np.array(Y4_RESPONSE))
        )
        want = np.array([-24 + 6j, -16 - 6j, -4 - 6j, 4 + 6j])
        assert np.max(np.abs(oracle - want)) < 1e-12
        assert np.max(np.abs(product - want)) < 1e-12
        assert np.max(np.abs(out.values - want)) < 1e-6

    def test_each_convention_reproduces_its_own_impulse_response(self):
        # the two delta conventions yield different filters on a generic
        # graph (they only coincide on the cycle); each fit must make the
        # second operand the response to its own delta
        rng = np.random.default_rng(8)
        g, basis = random_basis_graph(rng, 6, need_y0=True)
        y = vertex(rng.normal(size=6) + 1j * rng.normal(size=6))
        for kind in (ImpulseKind.VERTEX_IMPULSIVE, ImpulseKind.SPECTRAL_FLAT):
            fam = impulse_family(g, basis, kind)
            filt = fit_filter(y, fam, FitMethod.DENSE)
            delta0 = GraphSignal(fam.D[:, 0], Domain.VERTEX)
            out = apply_filter(filt, g, basis, delta0)
            scale = max(1.0, np.max(np.abs(y.values)))
            assert np.max(np.abs(out.values - y.values)) < 1e-7 * scale

    def test_conventions_coincide_on_the_cycle(self):
        rng = np.random.default_rng(12)
        g, basis = ring4()
        x = vertex(rng.normal(size=4) + 1j * rng.normal(size=4))
        y = vertex(rng.normal(size=4) + 1j * rng.normal(size=4))
        via_impulsive = convolve(x, y, g, basis, Domain.VERTEX, ImpulseKind.VERTEX_IMPULSIVE)
        via_flat = convolve(x, y, g, basis, Domain.VERTEX, ImpulseKind.SPECTRAL_FLAT)
        assert np.max(np.abs(via_impulsive.values - via_flat.values)) < 1e-9

    def test_mismatched_family_rejected(self):
        from gsptk import DomainMismatchError

        g, basis = ring4()
        with pytest.raises(DomainMismatchError):
            convolve(vertex(X4), vertex(Y4), g, basis, Domain.VERTEX,
                     ImpulseKind.SPECTRAL_DOMAIN_IMPULSIVE)


class TestDualities:
    def test_vertex_filtering_is_spectral_modulation(self):
        rng = np.random.default_rng(9)
        for _ in range(25):
            n = int(rng.integers(3, 13))
            g, basis = random_basis_graph(rng, n)
            p = rng.normal(size=n) + 1j * rng.normal(size=n)
            x = vertex(rng.normal(size=n) + 1j * rng.normal(size=n))
            filt = PolynomialFilter(p, ShiftDomain.VERTEX_A)
            lhs = gft_apply(basis, apply_filter(filt, g, basis, x)).values
            rhs = response(filt, basis).values * gft_apply(basis, x).values
            assert np.max(np.abs(lhs - rhs)) <= 1e-8 * max(1.0, np.max(np.abs(rhs)))

    def test_spectral_filtering_is_vertex_modulation(self):
        rng = np.random.default_rng(10)
        for _ in range(25):
            n = int(rng.integers(3, 13))
            g, basis = random_basis_graph(rng, n)
            p = rng.normal(size=n) + 1j * rng.normal(size=n)
            xhat = spectral(rng.normal(size=n) + 1j * rng.normal(size=n))
            filt = PolynomialFilter(p, ShiftDomain.SPECTRAL_M)
            lhs = igft_apply(basis, apply_filter(filt, g, basis, xhat)).values
            rhs = response(filt, basis).values * igft_apply(basis, xhat).values
            assert np.max(np.abs(lhs - rhs)) <= 1e-8 * max(1.0, np.max(np.abs(rhs)))


class TestFilterIO:
    def test_roundtrip(self, tmp_path):
        filt = PolynomialFilter([1.0, -2.0 + 0.5j], ShiftDomain.SPECTRAL_M)
        path = tmp_path / "f.json"
        write_filter(filt, path)
        back = read_filter(path)
        assert back.shift_domain is ShiftDomain.SPECTRAL_M
        assert np.array_equal(back.coeffs, filt.coeffs)
