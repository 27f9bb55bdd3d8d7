"""Linear symplectic algebra of commuting quadratic forms.

Everything here lives on the standard symplectic R^{2k} with coordinates
ordered (x_1..x_k, y_1..y_k) and form matrix J, J(x_i, y_i) = 1.  A
quadratic form is stored as a symmetric matrix A with q(v) = v^T A v; its
linear Hamiltonian operator is M = 2 J A, fixed so that the flow of M is
the Hamiltonian flow of q (xdot = dq/dy, ydot = -dq/dx).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AmbiguousEigenvalueError,
    DegenerateFamilyError,
    DimensionMismatchError,
    InputError,
    NearDegenerateError,
)
from .seqs import coefficient_sequence

SYMMETRY_TOL = 1e-12
AXIS_TOL = 1e-9         # |Re| or |Im| below AXIS_TOL * scale counts as zero
AMBIGUOUS_FACTOR = 10.0  # gray zone [tol, 10*tol) refuses to classify
GAP_TOL = 1e-7          # eigenvalue separation needed for a regular element
REGULAR_TRIALS = 16


class SymplecticSpace:
    """Standard symplectic R^{2k} with coordinates (x_1..x_k, y_1..y_k)."""

    def __init__(self, half_dim):
        if half_dim < 1:
            raise InputError("half_dim must be a positive integer")
        self.half_dim = int(half_dim)
        self.dim = 2 * self.half_dim
        k = self.half_dim
        J = np.zeros((self.dim, self.dim))
        J[:k, k:] = np.eye(k)
        J[k:, :k] = -np.eye(k)
        self._J = J

    @property
    def form(self):
        """Matrix J of the symplectic form, antisymmetric with J^2 = -I."""
        return self._J

    def __eq__(self, other):
        return isinstance(other, SymplecticSpace) and other.half_dim == self.half_dim

    def __hash__(self):
        return hash(("SymplecticSpace", self.half_dim))

    def __repr__(self):
        return f"SymplecticSpace(half_dim={self.half_dim})"


class QuadraticForm:
    """Quadratic form q(v) = v^T A v given by a symmetric matrix A."""

    def __init__(self, space, coeff):
        coeff = np.asarray(coeff, dtype=float)
        if coeff.shape != (space.dim, space.dim):
            raise DimensionMismatchError(
                f"coefficient matrix must be {space.dim}x{space.dim}, got {coeff.shape}"
            )
        scale = max(1.0, np.abs(coeff).max())
        if np.abs(coeff - coeff.T).max() > SYMMETRY_TOL * scale:
            raise InputError("coefficient matrix is not symmetric within 1e-12")
        self.space = space
        self.coeff = 0.5 * (coeff + coeff.T)

    def __call__(self, v):
        v = np.asarray(v, dtype=float)
        return float(v @ self.coeff @ v)

    def __add__(self, other):
        _check_same_space(self, other)
        return QuadraticForm(self.space, self.coeff + other.coeff)

    def __sub__(self, other):
        _check_same_space(self, other)
        return QuadraticForm(self.space, self.coeff - other.coeff)

    def __neg__(self):
        return QuadraticForm(self.space, -self.coeff)

    def __mul__(self, scalar):
        return QuadraticForm(self.space, float(scalar) * self.coeff)

    __rmul__ = __mul__

    def pullback(self, S):
        """Form composed with the linear map S, coefficient S^T A S."""
        S = np.asarray(S, dtype=float)
        return QuadraticForm(self.space, S.T @ self.coeff @ S)

    def __repr__(self):
        return f"QuadraticForm(half_dim={self.space.half_dim})"


class HamiltonianMatrix:
    """Linear Hamiltonian operator: M with J M symmetric."""

    def __init__(self, space, mat):
        mat = np.asarray(mat, dtype=float)
        if mat.shape != (space.dim, space.dim):
            raise DimensionMismatchError("matrix size does not match the space")
        JM = space.form @ mat
        scale = max(1.0, np.abs(mat).max())
        if np.abs(JM - JM.T).max() > 1e-10 * scale:
            raise InputError("J M is not symmetric: not a Hamiltonian matrix")
        self.space = space
        self.mat = mat

    def __repr__(self):
        return f"HamiltonianMatrix(half_dim={self.space.half_dim})"


def _check_same_space(a, b):
    if a.space != b.space:
        raise DimensionMismatchError("operands live on different symplectic spaces")


def poisson_bracket(q1: QuadraticForm, q2: QuadraticForm) -> QuadraticForm:
    """Poisson bracket {q1, q2} = sum_i dq1/dx_i dq2/dy_i - dq1/dy_i dq2/dx_i.

    On symmetric matrices this is 2 (A1 J A2 - A2 J A1); the Hamiltonian
    matrix of the result equals the commutator [M1, M2].
    """
    _check_same_space(q1, q2)
    J = q1.space.form
    A1, A2 = q1.coeff, q2.coeff
    return QuadraticForm(q1.space, 2.0 * (A1 @ J @ A2 - A2 @ J @ A1))


def hamiltonian_matrix(q: QuadraticForm) -> HamiltonianMatrix:
    """Hamiltonian operator M = 2 J A; the flow of M is the flow of q."""
    return HamiltonianMatrix(q.space, 2.0 * q.space.form @ q.coeff)


class CommutingFamily:
    """Ordered family of pairwise Poisson-commuting quadratic forms."""

    def __init__(self, space, forms, tolerance=1e-9):
        if tolerance < 0:
            raise InputError("tolerance must be nonnegative")
        forms = list(forms)
        if not forms:
            raise InputError("empty family")
        for q in forms:
            if q.space != space:
                raise DimensionMismatchError("family member on a different space")
        self.space = space
        self.forms = forms
        self.tolerance = float(tolerance)
        resid = self.max_bracket_residual()
        scale = max(1.0, max(np.abs(q.coeff).max() for q in forms))
        if resid > max(self.tolerance, SYMMETRY_TOL) * scale:
            raise InputError(
                f"family does not commute: max bracket residual {resid:.3e}"
            )

    def __len__(self):
        return len(self.forms)

    def max_bracket_residual(self):
        worst = 0.0
        for i, qi in enumerate(self.forms):
            for qj in self.forms[i + 1:]:
                worst = max(worst, np.abs(poisson_bracket(qi, qj).coeff).max())
        return worst

    def combination(self, coeffs) -> QuadraticForm:
        A = sum(c * q.coeff for c, q in zip(coeffs, self.forms))
        return QuadraticForm(self.space, A)

    def span_dimension(self):
        vecs = np.array([q.coeff.ravel() for q in self.forms])
        sv = np.linalg.svd(vecs, compute_uv=False)
        return int(np.sum(sv > 1e-10 * max(1.0, sv[0])))

    def pullback(self, S):
        return CommutingFamily(
            self.space, [q.pullback(S) for q in self.forms], tolerance=self.tolerance
        )


@dataclass
class WilliamsonType:
    """Counts of elliptic, hyperbolic and focus-focus components."""

    k_e: int
    k_h: int
    k_f: int

    def __post_init__(self):
        if min(self.k_e, self.k_h, self.k_f) < 0:
            raise InputError("component counts must be nonnegative")

    @property
    def corank(self):
        return self.k_e + self.k_h + 2 * self.k_f

    def as_tuple(self):
        return (self.k_e, self.k_h, self.k_f)

    def __iter__(self):
        return iter(self.as_tuple())


@dataclass(frozen=True)
class ComponentSymmetry:
    """Local linear symmetry group of one simple component."""

    kind: str
    group_descriptor: str


_SYMMETRY_TABLE = {
    "elliptic": "circle",
    "hyperbolic": "Z2 x R",
    "focus": "S1 x R",
}


def component_symmetry(kind: str) -> ComponentSymmetry:
    """Local linear symmetry group of a simple fixed point of the given kind."""
    if kind not in _SYMMETRY_TABLE:
        raise InputError(f"unknown component kind {kind!r}")
    return ComponentSymmetry(kind, _SYMMETRY_TABLE[kind])


@dataclass
class CartanDiagnostics:
    """Outcome of the three Cartan-subalgebra checks."""

    commuting: bool
    max_bracket_residual: float
    span_dim: int
    expected_span: int
    regular_coeffs: object  # coefficient vector certifying a regular element
    regular_matrix: object

    @property
    def spans(self):
        return self.span_dim == self.expected_span

    @property
    def regular_found(self):
        return self.regular_coeffs is not None

    @property
    def passed(self):
        return self.commuting and self.spans and self.regular_found

    def __bool__(self):
        return self.passed

    def failure_reason(self):
        if not self.commuting:
            return f"brackets do not vanish (residual {self.max_bracket_residual:.3e})"
        if not self.spans:
            return f"span dimension {self.span_dim} != {self.expected_span}"
        if not self.regular_found:
            return "no regular element found (clustered eigenvalues in all trials)"
        return "ok"


def _eigenvalue_gap(vals):
    vals = np.sort_complex(vals)
    gap = np.inf
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            gap = min(gap, abs(vals[i] - vals[j]))
    return gap


def is_cartan(fam: CommutingFamily) -> CartanDiagnostics:
    """Certify that the family spans a Cartan subalgebra of sp(2k, R).

    Checks (a) pairwise brackets vanish, (b) the forms span a k-dimensional
    subspace, (c) some combination in a fixed deterministic trial sequence
    has 2k distinct eigenvalues.  All three must hold.
    """
    k = fam.space.half_dim
    resid = fam.max_bracket_residual()
    scale = max(1.0, max(np.abs(q.coeff).max() for q in fam.forms))
    commuting = resid <= max(fam.tolerance, SYMMETRY_TOL) * scale
    span_dim = fam.span_dimension()
    reg_coeffs = None
    reg_mat = None
    if commuting and span_dim == k:
        for coeffs in coefficient_sequence(REGULAR_TRIALS, len(fam)):
            M = hamiltonian_matrix(fam.combination(coeffs)).mat
            vals = np.linalg.eigvals(M)
            mscale = max(1.0, np.abs(vals).max())
            if _eigenvalue_gap(vals) > GAP_TOL * mscale:
                reg_coeffs = np.array(coeffs)
                reg_mat = M
                break
    return CartanDiagnostics(
        commuting=commuting,
        max_bracket_residual=resid,
        span_dim=span_dim,
        expected_span=k,
        regular_coeffs=reg_coeffs,
        regular_matrix=reg_mat,
    )


def _classify_eigenvalue(lam, scale, axis_tol):
    """Return 'elliptic' / 'hyperbolic' / 'focus' for one eigenvalue."""
    zero = axis_tol * scale
    gray = AMBIGUOUS_FACTOR * zero
    re, im = abs(lam.real), abs(lam.imag)
    for part in (re, im):
        if zero <= part < gray:
            raise AmbiguousEigenvalueError(
                f"eigenvalue {lam} is too close to a classification axis",
                eigenvalue=lam,
            )
    re_zero, im_zero = re < zero, im < zero
    if re_zero and im_zero:
        raise AmbiguousEigenvalueError(
            f"eigenvalue {lam} vanishes for a regular element", eigenvalue=lam
        )
    if re_zero:
        return "elliptic"
    if im_zero:
        return "hyperbolic"
    return "focus"


def williamson_type(fam: CommutingFamily, axis_tol=AXIS_TOL) -> WilliamsonType:
    """Williamson type (k_e, k_h, k_f) of a Cartan family.

    Eigenvalues of a regular element are grouped into pure-imaginary pairs
    (elliptic), pure-real pairs (hyperbolic) and complex quadruples
    (focus-focus).  Refuses degenerate families and near-axis eigenvalues.
    """
    diag = is_cartan(fam)
    if not diag:
        raise DegenerateFamilyError(
            f"not a Cartan family: {diag.failure_reason()}", diagnostics=diag
        )
    vals = np.linalg.eigvals(diag.regular_matrix)
    scale = max(1.0, np.abs(vals).max())
    counts = {"elliptic": 0, "hyperbolic": 0, "focus": 0}
    for lam in vals:
        counts[_classify_eigenvalue(lam, scale, axis_tol)] += 1
    if counts["elliptic"] % 2 or counts["hyperbolic"] % 2 or counts["focus"] % 4:
        raise AmbiguousEigenvalueError(
            f"eigenvalue groups do not pair up: {counts}"
        )
    t = WilliamsonType(
        counts["elliptic"] // 2, counts["hyperbolic"] // 2, counts["focus"] // 4
    )
    if t.corank != fam.space.half_dim:
        raise AmbiguousEigenvalueError(
            f"type {t.as_tuple()} inconsistent with half-dimension "
            f"{fam.space.half_dim}"
        )
    return t


# -- normal-form construction -------------------------------------------------

def elliptic_form(space, slot, coeff=1.0):
    """c (x_slot^2 + y_slot^2)."""
    k = space.half_dim
    A = np.zeros((space.dim, space.dim))
    A[slot, slot] = coeff
    A[k + slot, k + slot] = coeff
    return QuadraticForm(space, A)


def hyperbolic_form(space, slot, coeff=1.0):
    """c x_slot y_slot."""
    k = space.half_dim
    A = np.zeros((space.dim, space.dim))
    A[slot, k + slot] = coeff / 2.0
    A[k + slot, slot] = coeff / 2.0
    return QuadraticForm(space, A)


def focus_pair(space, slot, twist=1.0, stretch=1.0):
    """The focus-focus pair on slots (slot, slot+1).

    Returns (c1 (x_i y_{i+1} - x_{i+1} y_i), c2 (x_i y_i + x_{i+1} y_{i+1})).
    """
    k = space.half_dim
    if slot + 1 >= k:
        raise InputError("focus pair needs two consecutive slots")
    A1 = np.zeros((space.dim, space.dim))
    A1[slot, k + slot + 1] = twist / 2.0
    A1[k + slot + 1, slot] = twist / 2.0
    A1[slot + 1, k + slot] = -twist / 2.0
    A1[k + slot, slot + 1] = -twist / 2.0
    A2 = np.zeros((space.dim, space.dim))
    A2[slot, k + slot] = stretch / 2.0
    A2[k + slot, slot] = stretch / 2.0
    A2[slot + 1, k + slot + 1] = stretch / 2.0
    A2[k + slot + 1, slot + 1] = stretch / 2.0
    return QuadraticForm(space, A1), QuadraticForm(space, A2)


def component_monomials(space, wtype: WilliamsonType):
    """Normal-form monomial basis grouped by component.

    Components occupy slots in the order elliptic, hyperbolic, focus; each
    group is a list of QuadraticForm monomials spanning that component.
    """
    groups = []
    slot = 0
    for _ in range(wtype.k_e):
        groups.append(("elliptic", [elliptic_form(space, slot)]))
        slot += 1
    for _ in range(wtype.k_h):
        groups.append(("hyperbolic", [hyperbolic_form(space, slot)]))
        slot += 1
    for _ in range(wtype.k_f):
        q1, q2 = focus_pair(space, slot)
        groups.append(("focus", [q1, q2]))
        slot += 2
    return groups


def normal_form_family(space, wtype: WilliamsonType, frequencies=None):
    """A Cartan family in Williamson normal form of the given type.

    `frequencies` supplies one positive number per component (two per focus
    component); defaults keep all component frequencies distinct so the
    family is regular.
    """
    if wtype.corank != space.half_dim:
        raise InputError("type does not fill the space")
    n_freq = wtype.k_e + wtype.k_h + 2 * wtype.k_f
    if frequencies is None:
        frequencies = [1.0 + 0.37 * i for i in range(n_freq)]
    if len(frequencies) != n_freq:
        raise InputError(f"need {n_freq} frequencies")
    forms = []
    slot = 0
    it = iter(frequencies)
    for _ in range(wtype.k_e):
        forms.append(elliptic_form(space, slot, coeff=next(it)))
        slot += 1
    for _ in range(wtype.k_h):
        forms.append(hyperbolic_form(space, slot, coeff=next(it)))
        slot += 1
    for _ in range(wtype.k_f):
        q1, q2 = focus_pair(space, slot, twist=next(it), stretch=next(it))
        forms.extend([q1, q2])
        slot += 2
    return CommutingFamily(space, forms)


def random_symplectic(half_dim, rng, n_factors=4, max_cond=1e4):
    """Random symplectic matrix as a product of elementary symplectic factors.

    Factors are unit-triangular block shears [[I, B], [0, I]], [[I, 0], [C, I]]
    with symmetric B, C, and orthogonal block-diagonal rotations; resamples
    until the condition number is at most `max_cond`.
    """
    k = half_dim
    for _ in range(100):
        S = np.eye(2 * k)
        for i in range(n_factors):
            kind = i % 3
            if kind == 0:
                B = rng.uniform(-0.6, 0.6, size=(k, k))
                B = 0.5 * (B + B.T)
                F = np.block([[np.eye(k), B], [np.zeros((k, k)), np.eye(k)]])
            elif kind == 1:
                C = rng.uniform(-0.6, 0.6, size=(k, k))
                C = 0.5 * (C + C.T)
                F = np.block([[np.eye(k), np.zeros((k, k))], [C, np.eye(k)]])
            else:
                Q, _ = np.linalg.qr(rng.normal(size=(k, k)))
                F = np.block(
                    [[Q, np.zeros((k, k))], [np.zeros((k, k)), Q]]
                )
            S = S @ F
        if np.linalg.cond(S) <= max_cond:
            return S
    raise InputError("failed to draw a well-conditioned symplectic matrix")


def _realize_real_eigenvector(v):
    """Real eigenvector from a possibly complex one for a real eigenvalue."""
    idx = np.argmax(np.abs(v))
    w = (v / v[idx]).real
    return w / np.linalg.norm(w)


def _canonical_phase(v):
    idx = np.argmax(np.abs(v))
    return v * (abs(v[idx]) / v[idx]) / np.linalg.norm(v)


def _component_spectrum(M, axis_tol):
    """Eigen-data of a regular element grouped into typed components.

    Returns a list of dicts with kind, frequencies and chosen eigenvectors,
    sorted deterministically (elliptic, hyperbolic, focus; by frequency).
    """
    vals, vecs = np.linalg.eig(M)
    scale = max(1.0, np.abs(vals).max())
    if _eigenvalue_gap(vals) < GAP_TOL * scale:
        raise NearDegenerateError("near-degenerate: clustered eigenvalues")
    kinds = [_classify_eigenvalue(lam, scale, axis_tol) for lam in vals]

    def closest(target):
        return int(np.argmin(np.abs(vals - target)))

    used = set()
    comps = []
    order = sorted(range(len(vals)), key=lambda i: (vals[i].real, vals[i].imag))
    for i in order:
        if i in used:
            continue
        lam, kind = vals[i], kinds[i]
        if kind == "elliptic" and lam.imag > 0:
            j = closest(-lam)
            used.update({i, j})
            v = _canonical_phase(vecs[:, i])
            comps.append({"kind": "elliptic", "beta": lam.imag, "v": v})
        elif kind == "hyperbolic" and lam.real > 0:
            j = closest(-lam)
            used.update({i, j})
            comps.append({
                "kind": "hyperbolic",
                "alpha": lam.real,
                "v_plus": _realize_real_eigenvector(vecs[:, i]),
                "v_minus": _realize_real_eigenvector(vecs[:, j]),
            })
        elif kind == "focus" and lam.real > 0 and lam.imag > 0:
            jm = closest(-lam)
            used.update({i, jm, closest(np.conj(lam)), closest(-np.conj(lam))})
            comps.append({
                "kind": "focus",
                "alpha": lam.real,
                "beta": lam.imag,
                "v": _canonical_phase(vecs[:, i]),
                "w": _canonical_phase(vecs[:, jm]),
            })
    key = {"elliptic": 0, "hyperbolic": 1, "focus": 2}
    comps.sort(key=lambda c: (key[c["kind"]], c.get("beta", 0), c.get("alpha", 0)))
    return comps


def _normal_frame(space, comps):
    """Exact eigenvector frame of the matching normal-form regular element.

    For each component returns the complex eigenvector columns in the slot
    layout of `component_monomials`, in the same order as the input frame.
    """
    k = space.half_dim
    cols = []
    slot = 0
    for comp in comps:
        if comp["kind"] == "elliptic":
            e_x = np.zeros(2 * k, dtype=complex)
            e_y = np.zeros(2 * k, dtype=complex)
            e_x[slot] = 1.0
            e_y[k + slot] = 1.0
            sign = comp["sign"]
            v0 = e_x + 1j * sign * e_y  # eigenvector for +i*beta of sign*(x^2+y^2)
            cols.append(("pair_conj", v0))
            slot += 1
        elif comp["kind"] == "hyperbolic":
            e_x = np.zeros(2 * k, dtype=complex)
            e_y = np.zeros(2 * k, dtype=complex)
            e_x[slot] = 1.0
            e_y[k + slot] = 1.0
            cols.extend([("pair_real", e_x, e_y)])
            slot += 1
        else:
            # v: eigenvalue alpha + i beta; w: eigenvalue -alpha - i beta
            v = np.zeros(2 * k, dtype=complex)
            w = np.zeros(2 * k, dtype=complex)
            v[slot] = 1.0
            v[slot + 1] = -1j
            w[k + slot] = 1.0
            w[k + slot + 1] = 1j
            cols.append(("quad", v, w))
            slot += 2
    return cols


def normalizing_transform(fam: CommutingFamily, axis_tol=AXIS_TOL):
    """Symplectic S pulling the family back to Williamson normal form.

    S satisfies S^T J S = J; each form of the family, pulled back by S, is
    a linear combination of the normal-form monomials grouped by component.
    Built by matching eigenvector frames of a regular element against the
    exact frame of a normal-form element with the same spectrum.
    """
    diag = is_cartan(fam)
    if not diag:
        raise DegenerateFamilyError(
            f"not a Cartan family: {diag.failure_reason()}", diagnostics=diag
        )
    space = fam.space
    J = space.form
    comps = _component_spectrum(diag.regular_matrix, axis_tol)

    def omega(u, v):
        return u @ J @ v

    # Krein sign of each elliptic plane decides the sign of its normal form.
    for comp in comps:
        if comp["kind"] == "elliptic":
            theta = omega(comp["v"], np.conj(comp["v"])).imag
            comp["sign"] = 1.0 if theta < 0 else -1.0

    frame0 = _normal_frame(space, comps)

    V_cols = []
    W_cols = []
    for comp, ref in zip(comps, frame0):
        if comp["kind"] == "elliptic":
            v = comp["v"]
            v0 = ref[1]
            theta = omega(v, np.conj(v)).imag
            theta0 = omega(v0, np.conj(v0)).imag
            v = v * np.sqrt(theta0 / theta)  # same sign by construction
            V_cols.extend([v, np.conj(v)])
            W_cols.extend([v0, np.conj(v0)])
        elif comp["kind"] == "hyperbolic":
            vp, vm = comp["v_plus"], comp["v_minus"]
            _, e_x, e_y = ref
            pairing = omega(vp, vm)
            target = omega(e_x, e_y).real
            vm = vm * (target / pairing)
            V_cols.extend([vp.astype(complex), vm.astype(complex)])
            W_cols.extend([e_x, e_y])
        else:
            v, w = comp["v"], comp["w"]
            _, v0, w0 = ref
            w = w * (omega(v0, w0) / omega(v, w))
            V_cols.extend([v, np.conj(v), w, np.conj(w)])
            W_cols.extend([v0, np.conj(v0), w0, np.conj(w0)])

    V = np.column_stack(V_cols)
    W0 = np.column_stack(W_cols)
    S_c = V @ np.linalg.inv(W0)
    S = S_c.real
    if np.abs(S_c.imag).max() > 1e-6 * max(1.0, np.abs(S).max()):
        raise NearDegenerateError("normalizing transform failed to realify")
    resid = np.abs(S.T @ J @ S - J).max()
    if resid > 1e-8:
        raise NearDegenerateError(
            f"normalizing transform not symplectic (residual {resid:.3e})"
        )
    _check_normal_form_residual(fam, S)
    return S


def _check_normal_form_residual(fam, S, tol=1e-6):
    """Verify pullbacks lie in the span of component monomials."""
    wtype = williamson_type(fam)
    groups = component_monomials(fam.space, wtype)
    basis = np.array([m.coeff.ravel() for _, group in groups for m in group])
    for q in fam.forms:
        target = q.pullback(S).coeff.ravel()
        sol, _, _, _ = np.linalg.lstsq(basis.T, target, rcond=None)
        resid = np.abs(basis.T @ sol - target).max()
        scale = max(1.0, np.abs(target).max())
        if resid > tol * scale:
            raise NearDegenerateError(
                f"pullback misses the normal-form span (residual {resid:.3e})"
            )


def local_stratification(wtype: WilliamsonType, regular_rank=0):
    """Stratum census by dimension of the local singular level set.

    Product rule over components: a hyperbolic cross contributes one
    0-stratum and four 1-strata, a focus 2D-cross one 0-stratum and two
    2-strata, an elliptic component a single point; a rank-r regular factor
    shifts every dimension by r.
    """
    census = {0: 1}
    atoms = (
        [{0: 1}] * wtype.k_e
        + [{0: 1, 1: 4}] * wtype.k_h
        + [{0: 1, 2: 2}] * wtype.k_f
    )
    for atom in atoms:
        new = {}
        for d1, c1 in census.items():
            for d2, c2 in atom.items():
                new[d1 + d2] = new.get(d1 + d2, 0) + c1 * c2
        census = new
    if regular_rank:
        census = {d + regular_rank: c for d, c in census.items()}
    return dict(sorted(census.items()))
