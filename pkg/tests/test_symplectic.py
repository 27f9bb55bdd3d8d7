import numpy as np
import pytest

from liouville.errors import (
    AmbiguousEigenvalueError,
    DegenerateFamilyError,
    DimensionMismatchError,
    InputError,
)
from liouville.symplectic import (
    CommutingFamily,
    QuadraticForm,
    SymplecticSpace,
    WilliamsonType,
    component_symmetry,
    component_monomials,
    elliptic_form,
    focus_pair,
    hamiltonian_matrix,
    hyperbolic_form,
    is_cartan,
    local_stratification,
    normal_form_family,
    normalizing_transform,
    poisson_bracket,
    random_symplectic,
    williamson_type,
)


def random_form(space, rng, scale=1.0):
    A = rng.normal(size=(space.dim, space.dim)) * scale
    return QuadraticForm(space, 0.5 * (A + A.T))


class TestSpaceAndForms:
    def test_form_matrix_invariants(self):
        for k in (1, 2, 3):
            J = SymplecticSpace(k).form
            assert np.array_equal(J, -J.T)
            assert np.array_equal(J @ J, -np.eye(2 * k))

    def test_form_orientation_convention(self):
        # J(x_i, y_i) = 1 in the (x..., y...) coordinate order
        sp = SymplecticSpace(2)
        assert sp.form[0, 2] == 1.0
        assert sp.form[1, 3] == 1.0

    def test_asymmetric_coefficients_rejected(self):
        sp = SymplecticSpace(1)
        with pytest.raises(InputError):
            QuadraticForm(sp, [[0.0, 1.0], [0.0, 0.0]])

    def test_dimension_mismatch_rejected(self):
        q1 = hyperbolic_form(SymplecticSpace(1), 0)
        q2 = hyperbolic_form(SymplecticSpace(2), 0)
        with pytest.raises(DimensionMismatchError):
            poisson_bracket(q1, q2)


class TestBracket:
    def test_xy_with_x_squared(self):
        # {x1 y1, x1^2} = -2 x1^2
        sp = SymplecticSpace(1)
        br = poisson_bracket(hyperbolic_form(sp, 0), QuadraticForm(sp, [[1, 0], [0, 0]]))
        assert np.allclose(br.coeff, [[-2, 0], [0, 0]])

    def test_harmonic_with_xy(self):
        # {x1^2 + y1^2, x1 y1} = 2 x1^2 - 2 y1^2
        sp = SymplecticSpace(1)
        br = poisson_bracket(elliptic_form(sp, 0), hyperbolic_form(sp, 0))
        assert np.allclose(br.coeff, [[2, 0], [0, -2]])

    def test_focus_pair_commutes(self):
        q1, q2 = focus_pair(SymplecticSpace(2), 0)
        assert np.abs(poisson_bracket(q1, q2).coeff).max() == 0.0

    def test_antisymmetry_exact(self):
        rng = np.random.default_rng(7)
        sp = SymplecticSpace(3)
        for _ in range(50):
            q1, q2 = random_form(sp, rng), random_form(sp, rng)
            assert np.array_equal(
                poisson_bracket(q1, q2).coeff, -poisson_bracket(q2, q1).coeff
            )

    def test_jacobi_identity(self):
        rng = np.random.default_rng(11)
        sp = SymplecticSpace(4)
        for _ in range(50):
            q1, q2, q3 = (random_form(sp, rng) for _ in range(3))
            total = (
                poisson_bracket(poisson_bracket(q1, q2), q3).coeff
                + poisson_bracket(poisson_bracket(q2, q3), q1).coeff
                + poisson_bracket(poisson_bracket(q3, q1), q2).coeff
            )
            assert np.abs(total).max() < 1e-10

    def test_bracket_commutator_consistency(self):
        rng = np.random.default_rng(13)
        sp = SymplecticSpace(3)
        for _ in range(30):
            q1, q2 = random_form(sp, rng), random_form(sp, rng)
            M1 = hamiltonian_matrix(q1).mat
            M2 = hamiltonian_matrix(q2).mat
            Mbr = hamiltonian_matrix(poisson_bracket(q1, q2)).mat
            assert np.abs(Mbr - (M1 @ M2 - M2 @ M1)).max() < 1e-10


class TestHamiltonianMatrix:
    def test_hyperbolic_flow(self):
        M = hamiltonian_matrix(hyperbolic_form(SymplecticSpace(1), 0)).mat
        assert np.allclose(M, np.diag([1.0, -1.0]))

    def test_elliptic_eigenvalues(self):
        M = hamiltonian_matrix(elliptic_form(SymplecticSpace(1), 0)).mat
        assert np.allclose(M, [[0, 2], [-2, 0]])
        assert np.allclose(sorted(np.linalg.eigvals(M).imag), [-2, 2])

    def test_zero_form(self):
        sp = SymplecticSpace(2)
        M = hamiltonian_matrix(QuadraticForm(sp, np.zeros((4, 4)))).mat
        assert np.array_equal(M, np.zeros((4, 4)))

    def test_jm_symmetric(self):
        rng = np.random.default_rng(3)
        sp = SymplecticSpace(2)
        q = random_form(sp, rng)
        H = hamiltonian_matrix(q)
        JM = sp.form @ H.mat
        assert np.abs(JM - JM.T).max() < 1e-12


class TestCartan:
    def test_single_hyperbolic_is_cartan(self):
        sp = SymplecticSpace(1)
        assert is_cartan(CommutingFamily(sp, [hyperbolic_form(sp, 0)])).passed

    def test_dependent_family_fails_span(self):
        sp = SymplecticSpace(2)
        q = hyperbolic_form(sp, 0)
        diag = is_cartan(CommutingFamily(sp, [q, 2.0 * q]))
        assert not diag.passed
        assert diag.span_dim == 1

    def test_x2_squared_fails_regularity(self):
        # {x1 y1, x2^2} commute but x2^2 is in no Cartan subalgebra:
        # every combination has a double zero eigenvalue.
        sp = SymplecticSpace(2)
        A = np.zeros((4, 4))
        A[1, 1] = 1.0
        fam = CommutingFamily(sp, [hyperbolic_form(sp, 0), QuadraticForm(sp, A)])
        diag = is_cartan(fam)
        assert diag.commuting and diag.spans
        assert not diag.regular_found
        with pytest.raises(DegenerateFamilyError):
            williamson_type(fam)

    def test_empty_family_rejected(self):
        with pytest.raises(InputError):
            CommutingFamily(SymplecticSpace(1), [])

    def test_noncommuting_family_rejected(self):
        sp = SymplecticSpace(1)
        with pytest.raises(InputError):
            CommutingFamily(sp, [hyperbolic_form(sp, 0), elliptic_form(sp, 0)])


class TestWilliamsonType:
    def test_elliptic(self):
        sp = SymplecticSpace(1)
        fam = CommutingFamily(sp, [elliptic_form(sp, 0)])
        assert williamson_type(fam).as_tuple() == (1, 0, 0)

    def test_focus(self):
        sp = SymplecticSpace(2)
        fam = CommutingFamily(sp, list(focus_pair(sp, 0)))
        assert williamson_type(fam).as_tuple() == (0, 0, 1)

    def test_mixed_conjugated(self):
        rng = np.random.default_rng(21)
        sp = SymplecticSpace(2)
        fam = CommutingFamily(sp, [hyperbolic_form(sp, 0), elliptic_form(sp, 1)])
        S = random_symplectic(2, rng)
        assert williamson_type(fam.pullback(S)).as_tuple() == (1, 1, 0)

    def test_count_identity_all_types(self):
        rng = np.random.default_rng(5)
        for k_e in range(3):
            for k_h in range(3):
                for k_f in range(2):
                    wt = WilliamsonType(k_e, k_h, k_f)
                    if not 1 <= wt.corank <= 4:
                        continue
                    sp = SymplecticSpace(wt.corank)
                    fam = normal_form_family(sp, wt)
                    S = random_symplectic(wt.corank, rng)
                    out = williamson_type(fam.pullback(S))
                    assert out.as_tuple() == (k_e, k_h, k_f)
                    assert out.corank == sp.half_dim


class TestNormalizingTransform:
    def test_identity_on_normal_form(self):
        sp = SymplecticSpace(2)
        fam = normal_form_family(sp, WilliamsonType(1, 1, 0))
        S = normalizing_transform(fam)
        assert np.abs(S.T @ sp.form @ S - sp.form).max() <= 1e-8

    def test_recovers_hyperbolic(self):
        rng = np.random.default_rng(31)
        sp = SymplecticSpace(1)
        fam = CommutingFamily(sp, [hyperbolic_form(sp, 0)])
        conj = fam.pullback(random_symplectic(1, rng))
        S = normalizing_transform(conj)
        pulled = conj.forms[0].pullback(S).coeff
        # proportional to x1 y1: zero diagonal
        assert abs(pulled[0, 0]) < 1e-8 and abs(pulled[1, 1]) < 1e-8
        assert abs(pulled[0, 1]) > 1e-3

    def test_recovers_focus(self):
        rng = np.random.default_rng(37)
        sp = SymplecticSpace(2)
        fam = CommutingFamily(sp, list(focus_pair(sp, 0)))
        conj = fam.pullback(random_symplectic(2, rng))
        S = normalizing_transform(conj)
        assert np.abs(S.T @ sp.form @ S - sp.form).max() <= 1e-8
        groups = component_monomials(sp, WilliamsonType(0, 0, 1))
        basis = np.array([m.coeff.ravel() for _, g in groups for m in g])
        for q in conj.forms:
            target = q.pullback(S).coeff.ravel()
            sol, _, _, _ = np.linalg.lstsq(basis.T, target, rcond=None)
            assert np.abs(basis.T @ sol - target).max() < 1e-6

    def test_symplectic_residual_bound(self):
        rng = np.random.default_rng(41)
        for t in [(2, 0, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1)]:
            wt = WilliamsonType(*t)
            sp = SymplecticSpace(wt.corank)
            conj = normal_form_family(sp, wt).pullback(random_symplectic(wt.corank, rng))
            S = normalizing_transform(conj)
            assert np.abs(S.T @ sp.form @ S - sp.form).max() <= 1e-8


class TestSymmetryAndStrata:
    def test_symmetry_table(self):
        assert component_symmetry("elliptic").group_descriptor == "circle"
        assert component_symmetry("hyperbolic").group_descriptor == "Z2 x R"
        assert component_symmetry("focus").group_descriptor == "S1 x R"
        with pytest.raises(InputError):
            component_symmetry("parabolic")

    def test_single_hyperbolic_census(self):
        assert local_stratification(WilliamsonType(0, 1, 0)) == {0: 1, 1: 4}

    def test_single_focus_census(self):
        assert local_stratification(WilliamsonType(0, 0, 1)) == {0: 1, 2: 2}

    def test_two_hyperbolic_census(self):
        assert local_stratification(WilliamsonType(0, 2, 0)) == {0: 1, 1: 8, 2: 16}

    def test_elliptic_point_census(self):
        assert local_stratification(WilliamsonType(2, 0, 0)) == {0: 1}

    def test_regular_rank_shift(self):
        assert local_stratification(WilliamsonType(0, 1, 0), regular_rank=2) == {
            2: 1,
            3: 4,
        }


class TestAmbiguity:
    def test_near_axis_eigenvalue_refused(self):
        # With a coarse axis tolerance the regular element's eigenvalues land
        # in the refuse-to-classify gray zone [tol, 10 tol).
        from liouville.seqs import coefficient_sequence

        sp = SymplecticSpace(1)
        fam = CommutingFamily(sp, [hyperbolic_form(sp, 0)])
        c0 = abs(coefficient_sequence(16, 1)[0, 0])  # first certifying combo
        with pytest.raises(AmbiguousEigenvalueError):
            williamson_type(fam, axis_tol=c0 / 2.0)

    def test_tiny_family_fails_regularity_not_silently(self):
        # Eigenvalues below the separation threshold surface as a refusal.
        sp = SymplecticSpace(1)
        fam = CommutingFamily(sp, [hyperbolic_form(sp, 0, coeff=1e-9)])
        with pytest.raises(DegenerateFamilyError):
            williamson_type(fam)
