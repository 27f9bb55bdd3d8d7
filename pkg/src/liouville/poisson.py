"""Polynomial Poisson manifolds, moment maps and singular-point analysis.

The classification pipeline at a point p of a symplectic leaf:

1. leaf tangent space T = image of the Poisson tensor at p,
2. rank of the commuting vector fields X_i = Pi grad F_i at p,
3. the symplectic quotient K/I realized as an explicit subspace R of T,
4. Hessians of the vanishing combinations of the F_i (with Casimir
   multiplier corrections) restricted to R,
5. Cartan / Williamson classification of the resulting quadratic family.

All sampling (Newton seeds, scan grids, residual checks) runs on fixed
low-discrepancy sequences so repeated runs are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatchError,
    InputError,
    NonGenericLeafPointError,
    OffLeafError,
    RegularPointError,
)
from .polynomial import PolynomialFunction
from .seqs import box_samples, unit_box_samples
from .symplectic import (
    CommutingFamily,
    ComponentSymmetry,
    QuadraticForm,
    SymplecticSpace,
    component_symmetry,
    is_cartan,
    williamson_type,
)

RANK_TOL = 1e-8          # singular values below RANK_TOL * max(s_max, 1) vanish
LEAF_TOL = 1e-8          # Casimir residual allowed for "on the leaf"
COMMUTE_TOL = 1e-10      # numeric residual for first-integral checks
JACOBI_SAMPLES = 1000


def _numeric_rank(matrix, tol=RANK_TOL):
    if matrix.size == 0:
        return 0
    s = np.linalg.svd(matrix, compute_uv=False)
    return int(np.sum(s > tol * max(s[0], 1.0)))


class PoissonManifold:
    """Polynomial Poisson structure: d x d antisymmetric matrix Pi(x)."""

    def __init__(self, dim, structure, validate=True):
        if dim < 1:
            raise InputError("dim must be positive")
        self.dim = int(dim)
        if len(structure) != dim or any(len(row) != dim for row in structure):
            raise InputError("structure matrix must be dim x dim")
        for row in structure:
            for entry in row:
                if entry.num_vars != dim:
                    raise DimensionMismatchError(
                        "structure entries must be polynomials in dim variables"
                    )
        self.structure = [list(row) for row in structure]
        if validate:
            self._validate()

    def _validate(self):
        for i in range(self.dim):
            for j in range(i, self.dim):
                if not (self.structure[i][j] + self.structure[j][i]).is_zero:
                    raise InputError(f"structure is not antisymmetric at ({i},{j})")
        resid = self.jacobi_residual()
        if resid > COMMUTE_TOL:
            raise InputError(f"Jacobi identity fails: residual {resid:.3e}")

    def _jacobi_polynomials(self):
        polys = []
        Pi = self.structure
        d = self.dim
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    total = PolynomialFunction.zero(d)
                    for l in range(d):
                        total = total + (
                            Pi[i][l] * Pi[j][k].diff(l)
                            + Pi[j][l] * Pi[k][i].diff(l)
                            + Pi[k][l] * Pi[i][j].diff(l)
                        )
                    polys.append(total)
        return polys

    def jacobi_residual(self, sample_count=JACOBI_SAMPLES):
        """Max Jacobi residual over deterministic samples in the unit box.

        Exact-zero cyclic sums short-circuit to 0.0 without sampling.
        """
        polys = [p for p in self._jacobi_polynomials() if not p.is_zero]
        if not polys:
            return 0.0
        pts = unit_box_samples(sample_count, self.dim)
        return max(float(np.abs(p(pts)).max()) for p in polys)

    def tensor_at(self, points):
        """Evaluate Pi at a point (d,) or batch (..., d)."""
        points = np.asarray(points, dtype=float)
        batch = points.shape[:-1]
        out = np.zeros(batch + (self.dim, self.dim))
        for i in range(self.dim):
            for j in range(self.dim):
                if not self.structure[i][j].is_zero:
                    out[..., i, j] = self.structure[i][j](points)
        return out


def bracket_fn(f, g, manifold) -> PolynomialFunction:
    """Exact polynomial Poisson bracket {f, g} = (grad f)^T Pi (grad g)."""
    if f.num_vars != manifold.dim or g.num_vars != manifold.dim:
        raise DimensionMismatchError("functions must match the manifold dimension")
    out = PolynomialFunction.zero(manifold.dim)
    fg = f.gradient()
    gg = g.gradient()
    for i in range(manifold.dim):
        if fg[i].is_zero:
            continue
        for j in range(manifold.dim):
            entry = manifold.structure[i][j]
            if entry.is_zero or gg[j].is_zero:
                continue
            out = out + fg[i] * entry * gg[j]
    return out


def hamiltonian_vector_field(f, manifold):
    """Components of X_f = Pi grad f, as exact polynomials.

    Note the sign relation X_f(g) = {g, f}: the flow convention matches the
    linear algebra module (xdot = dH/dy on a symplectic leaf).
    """
    if f.num_vars != manifold.dim:
        raise DimensionMismatchError("function must match the manifold dimension")
    grads = f.gradient()
    comps = []
    for i in range(manifold.dim):
        comp = PolynomialFunction.zero(manifold.dim)
        for j in range(manifold.dim):
            entry = manifold.structure[i][j]
            if not entry.is_zero and not grads[j].is_zero:
                comp = comp + entry * grads[j]
        comps.append(comp)
    return comps


def standard_symplectic_manifold(half_dim):
    """R^{2k} with the constant standard Poisson tensor ({x_i, y_i} = 1)."""
    d = 2 * half_dim
    zero = PolynomialFunction.zero(d)
    one = PolynomialFunction.constant(d, 1)
    structure = [[zero for _ in range(d)] for _ in range(d)]
    for i in range(half_dim):
        structure[i][half_dim + i] = one
        structure[half_dim + i][i] = -one
    return PoissonManifold(d, structure)


def _commutes(f, g, manifold):
    br = bracket_fn(f, g, manifold)
    if br.is_zero:
        return 0.0
    pts = unit_box_samples(JACOBI_SAMPLES, manifold.dim)
    return float(np.abs(br(pts)).max())


class IntegrableSystem:
    """Poisson manifold with Casimirs and a commuting moment map.

    `leaf_values` fixes a symplectic leaf by assigning a value to each
    Casimir; `hamiltonians` are the moment map components F_1..F_n with
    n = half the generic leaf dimension.
    """

    def __init__(self, manifold, casimirs, hamiltonians, leaf_values,
                 validate=True):
        self.manifold = manifold
        self.casimirs = list(casimirs)
        self.hamiltonians = list(hamiltonians)
        self.leaf_values = [float(v) for v in leaf_values]
        if len(self.leaf_values) != len(self.casimirs):
            raise InputError("need one leaf value per Casimir")
        leaf_dim = manifold.dim - len(self.casimirs)
        if leaf_dim <= 0 or leaf_dim % 2:
            raise InputError("generic leaf dimension must be positive and even")
        if len(self.hamiltonians) != leaf_dim // 2:
            raise InputError(
                f"need {leaf_dim // 2} hamiltonians for leaf dimension {leaf_dim}"
            )
        if validate:
            self._validate()
        self._fields = [
            hamiltonian_vector_field(F, manifold) for F in self.hamiltonians
        ]
        self._field_jacs = [
            [[comp.diff(b) for b in range(manifold.dim)] for comp in fld]
            for fld in self._fields
        ]

    @property
    def n(self):
        return len(self.hamiltonians)

    def _validate(self):
        M = self.manifold
        for i, F in enumerate(self.hamiltonians):
            for G in self.hamiltonians[i + 1:]:
                resid = _commutes(F, G, M)
                if resid > COMMUTE_TOL:
                    raise InputError(f"moment map does not commute: {resid:.3e}")
            for c in self.casimirs:
                resid = _commutes(c, F, M)
                if resid > COMMUTE_TOL:
                    raise InputError(f"casimir fails to commute: {resid:.3e}")

    # -- pointwise data ----------------------------------------------------

    def moment_map(self, points):
        points = np.asarray(points, dtype=float)
        out = [F(points) for F in self.hamiltonians]
        if points.ndim == 1:
            return np.array(out)
        return np.stack(out, axis=-1)

    def casimir_residual(self, points):
        points = np.asarray(points, dtype=float)
        if not self.casimirs:
            return np.zeros(points.shape[:-1]) if points.ndim > 1 else 0.0
        res = [np.abs(c(points) - v) for c, v in zip(self.casimirs, self.leaf_values)]
        if points.ndim == 1:
            return max(float(r) for r in res)
        return np.max(np.stack(res, axis=-1), axis=-1)

    def on_leaf(self, point, tol=LEAF_TOL):
        return self.casimir_residual(point) <= tol

    def field_matrix(self, points):
        """Columns X_{F_1}..X_{F_n} at a point (d, n) or batch (..., d, n)."""
        points = np.asarray(points, dtype=float)
        batch = points.shape[:-1]
        out = np.zeros(batch + (self.manifold.dim, self.n))
        for i, fld in enumerate(self._fields):
            for a, comp in enumerate(fld):
                if not comp.is_zero:
                    out[..., a, i] = comp(points)
        return out

    def field_jacobian(self, points, coeffs=None):
        """Jacobian of sum_i c_i X_{F_i} at points; c defaults to all fields.

        With `coeffs` of shape (..., n) returns (..., d, d); without, returns
        the stacked per-field Jacobians of shape (..., n, d, d).
        """
        points = np.asarray(points, dtype=float)
        batch = points.shape[:-1]
        d = self.manifold.dim
        stacked = np.zeros(batch + (self.n, d, d))
        for i, jac in enumerate(self._field_jacs):
            for a in range(d):
                for b in range(d):
                    if not jac[a][b].is_zero:
                        stacked[..., i, a, b] = jac[a][b](points)
        if coeffs is None:
            return stacked
        return np.einsum("...i,...iab->...ab", np.asarray(coeffs), stacked)


# -- rank and transversal linearization -------------------------------------


def rank_at(sys: IntegrableSystem, point, tol=RANK_TOL):
    """(rank, corank) of the moment map at an on-leaf point."""
    point = np.asarray(point, dtype=float)
    if not sys.on_leaf(point):
        raise OffLeafError(
            f"point violates Casimir constraints by {sys.casimir_residual(point):.3e}"
        )
    rank = _numeric_rank(sys.field_matrix(point), tol)
    return rank, sys.n - rank


def _leaf_data(sys, point):
    """Leaf tangent basis, leaf form and field data at a point."""
    d = sys.manifold.dim
    m = len(sys.casimirs)
    Pi = sys.manifold.tensor_at(point)
    U, s, _ = np.linalg.svd(Pi)
    rank_pi = int(np.sum(s > RANK_TOL * max(s[0], 1.0))) if s.size else 0
    if rank_pi != d - m:
        raise NonGenericLeafPointError(
            f"Poisson tensor rank {rank_pi} != {d - m}: "
            "rank-deficient beyond the Casimir corank"
        )
    T = U[:, :rank_pi]
    omega = -np.linalg.pinv(Pi, rcond=RANK_TOL)
    return Pi, T, omega


def _symplectic_gram_schmidt(cols, omega):
    """Split `cols` into a Darboux basis (e_1..e_k, f_1..f_k) for omega."""
    pool = [cols[:, i].copy() for i in range(cols.shape[1])]
    es, fs = [], []
    while pool:
        e = pool.pop(0)
        if not pool:
            raise NonGenericLeafPointError("odd-dimensional transversal candidate")
        vals = [abs(e @ omega @ v) for v in pool]
        j = int(np.argmax(vals))
        pairing = e @ omega @ pool[j]
        if abs(pairing) < 1e-10:
            raise NonGenericLeafPointError(
                "leaf symplectic form degenerates on the transversal space"
            )
        f = pool.pop(j) / pairing
        reduced = []
        for v in pool:
            v = v + (v @ omega @ e) * f - (v @ omega @ f) * e
            reduced.append(v)
        pool = reduced
        es.append(e)
        fs.append(f)
    return np.column_stack(es + fs)


def transversal_family(sys: IntegrableSystem, point, tol=RANK_TOL):
    """Transversal linearization at a singular point, as a CommutingFamily.

    Returns the family of quadratic forms on the symplectic quotient K/I
    (K = kernel of DF on the leaf, I = span of the fields), expressed in an
    explicit Darboux basis.  Hessians of the vanishing combinations carry
    Casimir multiplier corrections so that they agree with the intrinsic
    leaf Hessians.
    """
    point = np.asarray(point, dtype=float)
    if not sys.on_leaf(point):
        raise OffLeafError("point violates Casimir constraints")
    _, T, omega = _leaf_data(sys, point)
    X = sys.field_matrix(point)
    r = _numeric_rank(X, tol)
    k = sys.n - r
    if k == 0:
        raise RegularPointError("regular point: corank 0")

    grads = np.column_stack([
        np.array([g(point) for g in F.gradient()]) for F in sys.hamiltonians
    ])  # (d, n)

    # K = vectors of T annihilated by every dF_i
    GT = grads.T @ T  # (n, 2n)
    _, s, Vt = np.linalg.svd(GT)
    rank_g = int(np.sum(s > tol * max(s[0] if s.size else 0.0, 1.0)))
    K = T @ Vt[rank_g:].T  # (d, 2n - rank_g), orthonormal

    # complement of I = span{X_i} inside K (any complement carries the
    # quotient form exactly; take the Euclidean one)
    if r > 0:
        Ux, sx, _ = np.linalg.svd(X, full_matrices=False)
        I_basis = Ux[:, :r]
        proj = K - I_basis @ (I_basis.T @ K)
        Uc, sc, _ = np.linalg.svd(proj, full_matrices=False)
        C = Uc[:, : 2 * k]
        if sc[2 * k - 1] < 1e-8:
            raise NonGenericLeafPointError("transversal complement collapsed")
    else:
        C = K
    if C.shape[1] != 2 * k:
        raise NonGenericLeafPointError(
            f"transversal space has dimension {C.shape[1]}, expected {2 * k}"
        )

    R = _symplectic_gram_schmidt(C, omega)

    # vanishing combinations of the moment map
    _, sX, VtX = np.linalg.svd(X, full_matrices=True)
    xis = VtX[r:].T  # (n, k)

    cas_grads = (
        np.column_stack([
            np.array([g(point) for g in c.gradient()]) for c in sys.casimirs
        ])
        if sys.casimirs
        else np.zeros((sys.manifold.dim, 0))
    )
    cas_hess = [c.hessian_at(point) for c in sys.casimirs]
    ham_hess = [F.hessian_at(point) for F in sys.hamiltonians]

    space = SymplecticSpace(k)
    forms = []
    for idx in range(k):
        xi = xis[:, idx]
        H = sum(c * Hf for c, Hf in zip(xi, ham_hess))
        grad_xi = grads @ xi
        if sys.casimirs:
            a, _, _, _ = np.linalg.lstsq(cas_grads, grad_xi, rcond=None)
            H = H - sum(c * Hc for c, Hc in zip(a, cas_hess))
            resid = np.abs(cas_grads @ a - grad_xi).max()
            if resid > 1e-6 * max(1.0, np.abs(grad_xi).max()):
                raise NonGenericLeafPointError(
                    "vanishing combination has a gradient outside the Casimir span"
                )
        A = 0.5 * R.T @ H @ R
        forms.append(QuadraticForm(space, 0.5 * (A + A.T)))
    scale = max(1.0, max(np.abs(q.coeff).max() for q in forms))
    return CommutingFamily(space, forms, tolerance=1e-7 * scale)


@dataclass
class SingularPointReport:
    """Full classification record for one point."""

    point: np.ndarray
    rank: int
    corank: int
    leaf_basis: np.ndarray | None = None
    transversal: CommutingFamily | None = None
    classification: object = "regular"  # WilliamsonType | "regular" | "degenerate"
    symmetry: list = field(default_factory=list)
    diagnostics: object = None

    @property
    def is_regular(self):
        return self.classification == "regular"

    @property
    def is_degenerate(self):
        return self.classification == "degenerate"

    def type_tuple(self):
        if isinstance(self.classification, str):
            return None
        return self.classification.as_tuple()


def classify_singular_point(sys: IntegrableSystem, point) -> SingularPointReport:
    """Rank, transversal family and Williamson type at an on-leaf point."""
    point = np.asarray(point, dtype=float)
    rank, corank = rank_at(sys, point)
    _, T, _ = _leaf_data(sys, point)
    if corank == 0:
        return SingularPointReport(point=point, rank=rank, corank=corank,
                                   leaf_basis=T, classification="regular")
    fam = transversal_family(sys, point)
    diag = is_cartan(fam)
    if not diag:
        return SingularPointReport(
            point=point, rank=rank, corank=corank, leaf_basis=T,
            transversal=fam, classification="degenerate", diagnostics=diag,
        )
    wtype = williamson_type(fam)
    symmetry = (
        [component_symmetry("elliptic")] * wtype.k_e
        + [component_symmetry("hyperbolic")] * wtype.k_h
        + [component_symmetry("focus")] * wtype.k_f
    )
    return SingularPointReport(
        point=point, rank=rank, corank=corank, leaf_basis=T,
        transversal=fam, classification=wtype, symmetry=symmetry,
        diagnostics=diag,
    )


# -- equilibrium search ------------------------------------------------------


def _as_box(region, dim):
    box = np.asarray(region, dtype=float)
    if box.shape != (dim, 2) or np.any(box[:, 0] > box[:, 1]):
        raise InputError(f"region must be {dim} (lo, hi) pairs")
    return box


def _augmented_residual(sys, points):
    """[all field components; casimir residuals] stacked, shape (..., n*d+m)."""
    V = sys.field_matrix(points)
    parts = [V.reshape(V.shape[:-2] + (-1,))]
    for c, v in zip(sys.casimirs, sys.leaf_values):
        parts.append(np.asarray(c(points) - v)[..., None])
    return np.concatenate(parts, axis=-1)


def _augmented_jacobian(sys, points):
    points = np.asarray(points, dtype=float)
    batch = points.shape[:-1]
    d = sys.manifold.dim
    J_fields = sys.field_jacobian(points)  # (..., n, d, d)
    rows = [J_fields.reshape(batch + (sys.n * d, d))]
    for c in sys.casimirs:
        g = np.stack([gc(points) if not gc.is_zero else np.zeros(batch)
                      for gc in c.gradient()], axis=-1)
        rows.append(g[..., None, :])
    return np.concatenate(rows, axis=-2)


def find_fixed_points(sys: IntegrableSystem, region, seed_count,
                      residual_tol=1e-10, dedup_tol=1e-6, max_iter=60):
    """Common equilibria of all moment-map fields on the chosen leaf.

    Gauss-Newton from `seed_count` deterministic seeds in the box `region`;
    converged roots are deduplicated (pairwise distance > dedup_tol),
    restricted to the box and returned sorted lexicographically.  No roots
    is a valid outcome, not an error.
    """
    d = sys.manifold.dim
    box = _as_box(region, d)
    if seed_count <= 0 or np.any(box[:, 0] >= box[:, 1]):
        return []
    P = box_samples(seed_count, box)
    span = float(np.max(box[:, 1] - box[:, 0]))
    alive = np.ones(len(P), dtype=bool)
    for _ in range(max_iter):
        res = _augmented_residual(sys, P[alive])
        if res.size == 0:
            break
        jac = _augmented_jacobian(sys, P[alive])
        step = -np.einsum("bej,be->bj", np.linalg.pinv(jac), res)
        norms = np.linalg.norm(step, axis=-1)
        cap = np.minimum(1.0, span / np.maximum(norms, 1e-300))
        P[alive] += step * cap[:, None]
        bad = ~np.isfinite(P).all(axis=1) | (np.abs(P).max(axis=1) > 1e6)
        alive &= ~bad
        if np.max(np.abs(res)) < residual_tol * 1e-2:
            break
    final = _augmented_residual(sys, P)
    ok = alive & (np.max(np.abs(final), axis=-1) <= residual_tol)
    inside = np.all((P >= box[:, 0] - 1e-9) & (P <= box[:, 1] + 1e-9), axis=1)
    roots = P[ok & inside]
    roots = sorted(map(tuple, roots))
    out = []
    for root in roots:
        arr = np.array(root)
        if all(np.abs(arr - prev).max() > dedup_tol for prev in out):
            out.append(arr)
    return out


# -- bifurcation scan --------------------------------------------------------


@dataclass
class BifurcationCloud:
    """Moment-map images of detected rank-deficient points."""

    samples: np.ndarray  # (count, n), sorted lexicographically
    resolution: object
    region: np.ndarray

    def __len__(self):
        return len(self.samples)


def _singular_point_newton(sys, seeds, max_iter=40, tol=1e-9):
    """Gauss-Newton for (p, xi): V(p) xi = 0, |xi| = 1, Casimirs fixed.

    Returns (points, xi, converged mask).  The null direction xi is part of
    the unknowns (variable-projection form of smallest-singular-value
    descent); seeds for xi are the smallest right singular vectors at the
    seed points.
    """
    d = sys.manifold.dim
    n = sys.n
    P = np.array(seeds, dtype=float)
    V = sys.field_matrix(P)
    _, _, Vt = np.linalg.svd(V)
    Xi = Vt[..., -1, :].copy()
    alive = np.ones(len(P), dtype=bool)
    for _ in range(max_iter):
        V = sys.field_matrix(P)
        res_main = np.einsum("...dn,...n->...d", V, Xi)
        res_norm = 0.5 * (np.sum(Xi**2, axis=-1) - 1.0)
        parts = [res_main, res_norm[..., None]]
        for c, v in zip(sys.casimirs, sys.leaf_values):
            parts.append((c(P) - v)[..., None])
        res = np.concatenate(parts, axis=-1)
        Jp = sys.field_jacobian(P, coeffs=Xi)  # (..., d, d)
        zeros_n = np.zeros(P.shape[:-1] + (1, n))
        top = np.concatenate([Jp, V], axis=-1)  # (..., d, d+n)
        norm_row = np.concatenate([np.zeros(P.shape[:-1] + (1, d)),
                                   Xi[..., None, :]], axis=-1)
        blocks = [top, norm_row]
        for c in sys.casimirs:
            g = np.stack([gc(P) if not gc.is_zero else np.zeros(P.shape[:-1])
                          for gc in c.gradient()], axis=-1)
            blocks.append(np.concatenate([g[..., None, :], zeros_n], axis=-1))
        jac = np.concatenate(blocks, axis=-2)
        step = -np.einsum("bej,be->bj", np.linalg.pinv(jac), res)
        norms = np.linalg.norm(step, axis=-1)
        cap = np.minimum(1.0, 1.0 / np.maximum(norms, 1e-300))
        step = step * cap[:, None]
        P += step[..., :d]
        Xi += step[..., d:]
        alive &= np.isfinite(P).all(axis=1) & (np.abs(P).max(axis=1) < 1e6)
    V = sys.field_matrix(P)
    res_main = np.einsum("...dn,...n->...d", V, Xi)
    final = np.abs(res_main).max(axis=-1)
    final = np.maximum(final, np.abs(np.sum(Xi**2, axis=-1) - 1.0))
    for c, v in zip(sys.casimirs, sys.leaf_values):
        final = np.maximum(final, np.abs(c(P) - v))
    return P, Xi, alive & (final <= tol)


def bifurcation_scan(sys: IntegrableSystem, phase_region, resolution) -> BifurcationCloud:
    """Scan a phase-space box for rank-deficient points of the moment map.

    The box is split into `resolution` cells per axis; from each cell center
    a local search drives the fields toward a common null direction.  Each
    cell whose search converges within 1.5 cell half-widths emits the
    moment-map image of the detection.  Output rows are sorted, so the scan
    is deterministic for fixed inputs.
    """
    d = sys.manifold.dim
    box = _as_box(phase_region, d)
    if np.isscalar(resolution):
        resolution = [int(resolution)] * d
    resolution = [int(r) for r in resolution]
    if len(resolution) != d or min(resolution) < 2:
        raise InputError("resolution must be at least 2 per axis")
    axes = [
        lo + (np.arange(r) + 0.5) * (hi - lo) / r
        for (lo, hi), r in zip(box, resolution)
    ]
    centers = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, d)
    half_widths = (box[:, 1] - box[:, 0]) / (2 * np.array(resolution))
    P, _, ok = _singular_point_newton(sys, centers)
    near = np.all(np.abs(P - centers) <= 1.5 * half_widths, axis=1)
    hits = P[ok & near]
    if len(hits) == 0:
        samples = np.zeros((0, sys.n))
    else:
        images = sys.moment_map(hits)
        samples = np.array(sorted(map(tuple, images)))
    return BifurcationCloud(samples=samples, resolution=resolution, region=box)


# -- stability probe ---------------------------------------------------------


@dataclass
class StabilityProbe:
    """Heuristic estimate of the local singular-value set near a point."""

    status: str                      # "ok" | "inconclusive"
    sheets: list                     # [{"codim": int, "count": int}]
    predicted: list
    consistent_with_stable: bool
    detections: int
    note: str = "heuristic estimate from sampled singular values"


def _cluster_directions(xis, images, deep, image_scale):
    """Group detections by degenerating combination; deep corank by image."""
    clusters = []
    for i in range(len(xis)):
        xi = xis[i]
        lead = np.flatnonzero(np.abs(xi) > 1e-6)
        if lead.size:
            xi = xi * np.sign(xi[lead[0]])
        placed = False
        for cl in clusters:
            if cl["deep"] != deep[i]:
                continue
            if deep[i]:
                if np.abs(cl["image"] - images[i]).max() < 0.05 * image_scale:
                    cl["members"].append(i)
                    placed = True
                    break
            elif np.abs(cl["xi"] - xi).max() < 0.2:
                cl["members"].append(i)
                placed = True
                break
        if not placed:
            clusters.append({
                "xi": xi, "image": images[i], "deep": bool(deep[i]),
                "members": [i],
            })
    return clusters


def stability_probe(sys: IntegrableSystem, report: SingularPointReport,
                    radius, sample_count) -> StabilityProbe:
    """Estimate the dimension structure of the singular value set near a point.

    Samples seeds around the point, reruns the singular-point search,
    clusters the detections into sheets and compares their codimensions in
    moment-map space with the pattern predicted by the Williamson type
    (one codimension-1 sheet per elliptic or hyperbolic component, one
    codimension-2 sheet per focus component).  Explicitly a heuristic.
    """
    if report.corank < 1:
        raise InputError("stability probe needs a singular point report")
    wtype = report.classification
    if isinstance(wtype, str):
        raise InputError("stability probe needs a classified (nondegenerate) point")
    predicted = sorted([1] * (wtype.k_e + wtype.k_h) + [2] * wtype.k_f)
    if sample_count <= 0:
        return StabilityProbe("inconclusive", [], predicted, False, 0)
    d = sys.manifold.dim
    seeds = report.point + radius * unit_box_samples(sample_count, d)
    P, Xi, ok = _singular_point_newton(sys, seeds)
    near = np.linalg.norm(P - report.point, axis=1) <= 4.0 * radius
    keep = ok & near
    if keep.sum() < max(6, sample_count // 20):
        return StabilityProbe("inconclusive", [], predicted, False, int(keep.sum()))
    P, Xi = P[keep], Xi[keep]
    images = sys.moment_map(P)
    center = sys.moment_map(report.point)
    scale = max(float(np.abs(images - center).max()), 1e-12)
    V = sys.field_matrix(P)
    s = np.linalg.svd(V, compute_uv=False)
    deep = np.sum(s <= RANK_TOL * np.maximum(s[..., 0], 1.0)[..., None], axis=-1) >= 2
    clusters = _cluster_directions(Xi, images, deep, scale)
    sheets = []
    min_members = max(4, len(P) // 25)
    for cl in clusters:
        members = cl["members"]
        if len(members) < min_members:
            continue
        Y = images[members] - images[members].mean(axis=0)
        sv = np.linalg.svd(Y, compute_uv=False)
        if sv.size == 0 or sv[0] < 0.02 * scale:
            dim = 0
        else:
            dim = int(np.sum(sv > 0.15 * sv[0]))
        sheets.append({"codim": sys.n - dim, "count": len(members)})
    found = sorted(sh["codim"] for sh in sheets)
    return StabilityProbe(
        status="ok",
        sheets=sheets,
        predicted=predicted,
        consistent_with_stable=found == predicted,
        detections=int(len(P)),
    )


# -- canned systems ----------------------------------------------------------


def linear_model_system(validate=False):
    """F = (x1 y1, x2 y2) on standard symplectic R^4: the exact oracle model."""
    manifold = standard_symplectic_manifold(2)
    x1 = PolynomialFunction.variable(0, 4)
    x2 = PolynomialFunction.variable(1, 4)
    y1 = PolynomialFunction.variable(2, 4)
    y2 = PolynomialFunction.variable(3, 4)
    return IntegrableSystem(manifold, [], [x1 * y1, x2 * y2], [],
                            validate=validate)


def linear_focus_system(validate=False):
    """The focus-focus normal-form pair on standard symplectic R^4."""
    manifold = standard_symplectic_manifold(2)
    x1 = PolynomialFunction.variable(0, 4)
    x2 = PolynomialFunction.variable(1, 4)
    y1 = PolynomialFunction.variable(2, 4)
    y2 = PolynomialFunction.variable(3, 4)
    f1 = x1 * y2 - x2 * y1
    f2 = x1 * y1 + x2 * y2
    return IntegrableSystem(manifold, [], [f1, f2], [], validate=validate)
