"""The Kovalevskaya top on e(3)* as a ready-made integrable system.

Coordinates (S1, S2, S3, R1, R2, R3) on the dual of the Euclidean Lie
algebra, with Lie-Poisson brackets

    {S_i, S_j} = eps_ijk S_k,   {S_i, R_j} = eps_ijk R_k,   {R_i, R_j} = 0,

Casimirs f1 = R1^2 + R2^2 + R3^2 and f2 = S.R, energy
H = (S1^2 + S2^2 + 2 S3^2)/2 + R1 and the Kovalevskaya integral
K = (S1^2/2 - S2^2/2 - R1)^2 + (S1 S2 - R2)^2.
"""

from fractions import Fraction

from .errors import InputError
from .polynomial import PolynomialFunction
from .poisson import IntegrableSystem, PoissonManifold

VARIABLES = ("S1", "S2", "S3", "R1", "R2", "R3")

_EPS = {
    (0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1,
    (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1,
}


def _levi_civita(i, j, k):
    return _EPS.get((i, j, k), 0)


def euclidean_poisson_manifold():
    """The e(3)* Lie-Poisson structure in coordinates (S, R)."""
    d = 6
    S = [PolynomialFunction.variable(i, d) for i in range(3)]
    R = [PolynomialFunction.variable(3 + i, d) for i in range(3)]
    zero = PolynomialFunction.zero(d)
    structure = [[zero for _ in range(d)] for _ in range(d)]
    for i in range(3):
        for j in range(3):
            entry_s = zero
            entry_r = zero
            for k in range(3):
                eps = _levi_civita(i, j, k)
                if eps:
                    entry_s = entry_s + eps * S[k]
                    entry_r = entry_r + eps * R[k]
            structure[i][j] = entry_s          # {S_i, S_j}
            structure[i][3 + j] = entry_r      # {S_i, R_j}
            structure[3 + i][j] = entry_r      # {R_i, S_j}
    return PoissonManifold(d, structure)


def kovalevskaya_system(g, validate=True):
    """Kovalevskaya top restricted to the leaf f1 = 1, f2 = g (0 < |g| < 1)."""
    g = float(g)
    if not 0.0 < abs(g) < 1.0:
        raise InputError("leaf parameter g must satisfy 0 < |g| < 1")
    manifold = euclidean_poisson_manifold()
    d = 6
    S1, S2, S3 = (PolynomialFunction.variable(i, d) for i in range(3))
    R1, R2, R3 = (PolynomialFunction.variable(3 + i, d) for i in range(3))
    half = Fraction(1, 2)
    f1 = R1 * R1 + R2 * R2 + R3 * R3
    f2 = S1 * R1 + S2 * R2 + S3 * R3
    H = half * (S1 * S1 + S2 * S2 + 2 * (S3 * S3)) + R1
    K = (half * (S1 * S1) - half * (S2 * S2) - R1) ** 2 + (S1 * S2 - R2) ** 2
    return IntegrableSystem(manifold, [f1, f2], [H, K], [1.0, g],
                            validate=validate)
