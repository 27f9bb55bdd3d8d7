"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as a map from exponent tuples to Fractions, so algebraic
identities (antisymmetry, Leibniz, commutation of first integrals) can be
checked exactly.  Evaluation at float points is compiled once into a
coefficient vector and exponent matrix and then vectorized over numpy
batches.

The text grammar is deliberately small: terms ``c * v1^a1 * ... * vk^ak``
joined by ``+`` / ``-``, with integer, rational (``3/4``) or decimal
coefficients and declared variable names (default ``x1..xd``).
"""

from __future__ import annotations

import re
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatchError, InputError

_TOKEN = re.compile(r"\s*([+-]|[A-Za-z_][A-Za-z_0-9]*|\d+/\d+|\d*\.\d+|\d+|\*+|\^)")


def default_variables(num_vars):
    return [f"x{i + 1}" for i in range(num_vars)]


class PolynomialFunction:
    """Polynomial in `num_vars` variables with Fraction coefficients."""

    __slots__ = ("num_vars", "terms", "_compiled")

    def __init__(self, num_vars, terms=None):
        if num_vars < 1:
            raise InputError("num_vars must be positive")
        self.num_vars = int(num_vars)
        clean = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != self.num_vars:
                raise InputError("exponent vector length does not match num_vars")
            if any(e < 0 for e in expo):
                raise InputError("negative exponents are not polynomial")
            coeff = Fraction(coeff)
            if coeff:
                clean[expo] = clean.get(expo, Fraction(0)) + coeff
        self.terms = {e: c for e, c in clean.items() if c}
        self._compiled = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, num_vars):
        return cls(num_vars, {})

    @classmethod
    def constant(cls, num_vars, value):
        return cls(num_vars, {(0,) * num_vars: Fraction(value)})

    @classmethod
    def variable(cls, index, num_vars):
        expo = [0] * num_vars
        expo[index] = 1
        return cls(num_vars, {tuple(expo): Fraction(1)})

    @classmethod
    def parse(cls, text, num_vars, variables=None):
        """Parse the term grammar; see module docstring."""
        names = list(variables) if variables else default_variables(num_vars)
        if len(names) != num_vars:
            raise InputError("variable name list does not match num_vars")
        index = {name: i for i, name in enumerate(names)}
        pos = 0
        tokens = []
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise InputError(f"cannot tokenize polynomial at {text[pos:]!r}")
                break
            tokens.append(m.group(1))
            pos = m.end()
        terms = {}
        i = 0
        n = len(tokens)
        if n == 0:
            return cls.zero(num_vars)
        while i < n:
            sign = Fraction(1)
            while i < n and tokens[i] in "+-":
                if tokens[i] == "-":
                    sign = -sign
                i += 1
            if i >= n:
                raise InputError("dangling sign in polynomial")
            coeff = sign
            expo = [0] * num_vars
            expect_factor = True
            while i < n:
                tok = tokens[i]
                if tok in "+-":
                    break
                if tok.startswith("*"):
                    i += 1
                    expect_factor = True
                    continue
                if not expect_factor:
                    raise InputError(f"missing '*' before {tok!r}")
                if tok in index:
                    power = 1
                    if i + 1 < n and tokens[i + 1] == "^":
                        if i + 2 >= n or not tokens[i + 2].isdigit():
                            raise InputError("exponent must be a nonnegative integer")
                        power = int(tokens[i + 2])
                        i += 2
                    expo[index[tok]] += power
                elif re.fullmatch(r"\d+/\d+|\d*\.\d+|\d+", tok):
                    coeff *= Fraction(tok)
                else:
                    raise InputError(f"unknown symbol {tok!r} in polynomial")
                expect_factor = False
                i += 1
            key = tuple(expo)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(num_vars, terms)

    # -- algebra ---------------------------------------------------------

    def _check(self, other):
        if self.num_vars != other.num_vars:
            raise DimensionMismatchError("polynomials in different variable counts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolynomialFunction.constant(self.num_vars, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return PolynomialFunction(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return PolynomialFunction(
            self.num_vars, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolynomialFunction.constant(self.num_vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolynomialFunction(
                self.num_vars,
                {e: c * Fraction(other) for e, c in self.terms.items()},
            )
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return PolynomialFunction(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            raise InputError("negative powers are not polynomial")
        out = PolynomialFunction.constant(self.num_vars, 1)
        for _ in range(power):
            out = out * self
        return out

    def diff(self, index):
        """Partial derivative with respect to variable `index`."""
        terms = {}
        for e, c in self.terms.items():
            if e[index] == 0:
                continue
            new = list(e)
            new[index] -= 1
            terms[tuple(new)] = c * e[index]
        return PolynomialFunction(self.num_vars, terms)

    def gradient(self):
        return [self.diff(i) for i in range(self.num_vars)]

    def hessian_at(self, point):
        """Dense Hessian matrix evaluated at a float point."""
        d = self.num_vars
        H = np.zeros((d, d))
        for i in range(d):
            di = self.diff(i)
            for j in range(i, d):
                H[i, j] = H[j, i] = di.diff(j)(point)
        return H

    # -- predicates and evaluation ----------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialFunction)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def _compile(self):
        if self._compiled is None:
            if self.terms:
                expos = np.array(sorted(self.terms), dtype=np.int64)
                coeffs = np.array(
                    [float(self.terms[tuple(e)]) for e in expos], dtype=float
                )
            else:
                expos = np.zeros((0, self.num_vars), dtype=np.int64)
                coeffs = np.zeros(0)
            self._compiled = (expos, coeffs)
        return self._compiled

    def __call__(self, point):
        """Evaluate at a point (n,) or batch of points (..., n)."""
        point = np.asarray(point, dtype=float)
        if point.shape[-1] != self.num_vars:
            raise DimensionMismatchError("point dimension does not match num_vars")
        expos, coeffs = self._compile()
        if coeffs.size == 0:
            return np.zeros(point.shape[:-1]) if point.ndim > 1 else 0.0
        monomials = np.prod(
            point[..., None, :] ** expos[(None,) * (point.ndim - 1)], axis=-1
        )
        value = monomials @ coeffs
        return value if point.ndim > 1 else float(value)

    def to_string(self, variables=None):
        """Round-trippable text form in the term grammar."""
        if not self.terms:
            return "0"
        names = variables or default_variables(self.num_vars)
        parts = []
        for expo in sorted(self.terms, reverse=True):
            coeff = self.terms[expo]
            factors = [
                names[i] if p == 1 else f"{names[i]}^{p}"
                for i, p in enumerate(expo)
                if p
            ]
            mag = abs(coeff)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            term = "*".join(factors)
            parts.append(("- " if coeff < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self):
        return f"PolynomialFunction({self.to_string()!r})"
