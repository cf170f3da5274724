"""Univariate polynomials in ``T`` and the spectral polynomials of a matrix."""

from __future__ import annotations

import cmath
import math
import sys
from collections.abc import Iterable
from fractions import Fraction

from ..errors import ConvergenceError, DimensionError, UnsupportedFieldError
from .matrix import Matrix, solve_linear
from .scalars import EXACT, Field, Scalar, format_scalar, same_field

_EPS = sys.float_info.epsilon


class Polynomial:
    """Immutable polynomial with coefficients in ascending degree.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable[object], field: Field = EXACT) -> None:
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self.field = field

    @classmethod
    def monomial(cls, degree: int, coeff: object = 1, field: Field = EXACT) -> "Polynomial":
        return cls([0] * degree + [coeff], field)

    @classmethod
    def from_roots(cls, roots: Iterable[object], field: Field = EXACT) -> "Polynomial":
        p = cls([1], field)
        for r in roots:
            p = p * cls([-field.coerce(r), 1], field)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Polynomial([c / lc for c in self.coeffs], self.field)

    def _lift(self, other: object) -> "Polynomial":
        if isinstance(other, Polynomial):
            same_field(self.field, other.field)
            return other
        return Polynomial([other], self.field)

    def __add__(self, other: object) -> "Polynomial":
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        z = self.field.zero
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = o.coeffs + (z,) * (n - len(o.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)], self.field)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs], self.field)

    def __sub__(self, other: object) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other: object) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other: object) -> "Polynomial":
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return Polynomial([], self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Polynomial(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial([1], self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        same_field(self.field, other.field)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial([], self.field), self
        quot = [self.field.zero] * (dq + 1)
        lc = other.coeffs[-1]
        m = len(other.coeffs) - 1
        for k in range(dq, -1, -1):
            c = rem[k + m] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(quot, self.field), Polynomial(rem[:m], self.field)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        """True when ``self`` divides ``other`` exactly."""
        return (other % self).is_zero()

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:], self.field)

    def __call__(self, x: Scalar) -> Scalar:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_matrix(self, A: Matrix) -> Matrix:
        """Evaluate at a square matrix by Horner's rule."""
        same_field(self.field, A.field)
        if not A.is_square:
            raise DimensionError("polynomial of a non-square matrix")
        n = A.nrows
        I = Matrix.identity(n, A.field)
        acc = Matrix.zeros(n, n, A.field)
        for c in reversed(self.coeffs):
            acc = acc @ A + I.scale(c)
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field.kind == other.field.kind and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field.kind, self.coeffs))

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            if isinstance(c, Fraction):
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = mono if (mag == 1 and mono) else (
                    f"{mag}*{mono}" if mono else str(mag)
                )
            else:
                sign = "+"
                body = f"({format_scalar(c)})*{mono}" if mono else f"({format_scalar(c)})"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (exact field)."""
    _require_exact(a.field, "gcd")
    while b:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic."""
    _require_exact(a.field, "extended gcd")
    f = a.field
    r0, r1 = a, b
    s0, s1 = Polynomial([1], f), Polynomial([], f)
    t0, t1 = Polynomial([], f), Polynomial([1], f)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    lc = r0.leading
    inv = 1 / lc
    return r0 * inv, s0 * inv, t0 * inv


def _require_exact(field: Field, what: str) -> None:
    if not field.is_exact:
        raise UnsupportedFieldError(f"{what} is only supported over the exact field")


def char_poly(A: Matrix) -> Polynomial:
    """Monic ``det(T I - A)`` via the Faddeev-LeVerrier recurrence.

    Divisions are by the integers ``1..n`` only, so the result is exact over
    the rationals.
    """
    if not A.is_square:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    n = A.nrows
    field = A.field
    c = [field.zero] * (n + 1)
    c[n] = field.one
    I = Matrix.identity(n, field)
    M = Matrix.zeros(n, n, field)
    for k in range(1, n + 1):
        M = M + I.scale(c[n - k + 1])
        AM = A @ M
        c[n - k] = -AM.trace() / k
        M = AM
    return Polynomial(c, field)


def min_poly(A: Matrix) -> Polynomial:
    """Monic minimal polynomial from the first dependency among ``I, A, A^2, ...``."""
    _require_exact(A.field, "minimal polynomial")
    if not A.is_square:
        raise DimensionError("minimal polynomial of a non-square matrix")
    n = A.nrows
    field = A.field
    power = Matrix.identity(n, field)
    vecs = [power.vec()]
    for m in range(1, n + 1):
        power = power @ A
        target = power.vec()
        coeffs = solve_linear(Matrix.from_columns(vecs, field, nrows=n * n), target)
        if coeffs is not None:
            return Polynomial([-c for c in coeffs] + [1], field)
        vecs.append(target)
    raise AssertionError("Cayley-Hamilton guarantees a dependency by degree n")


def squarefree_part(p: Polynomial) -> Polynomial:
    """``p / gcd(p, p')`` made monic: same roots, each of multiplicity one."""
    _require_exact(p.field, "squarefree part")
    if not p:
        raise ValueError("squarefree part of the zero polynomial")
    return (p // poly_gcd(p, p.derivative())).monic()


def is_squarefree(p: Polynomial) -> bool:
    _require_exact(p.field, "squarefree test")
    return poly_gcd(p, p.derivative()).degree == 0


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Monic, pairwise coprime squarefree ``g_m`` with ``p = lc * prod g_m^m``.

    Only nonconstant factors are listed, in increasing multiplicity.
    """
    _require_exact(p.field, "squarefree decomposition")
    if not p:
        raise ValueError("squarefree decomposition of the zero polynomial")
    out = []
    c = poly_gcd(p, p.derivative())
    w = p.monic() // c
    m = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z.monic(), m))
        m += 1
        w = y
        c = c // y
    return out


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def roots_exact(p: Polynomial) -> tuple[list[tuple[Fraction, int]], Polynomial]:
    """Rational roots with multiplicities, plus the rational-root-free cofactor.

    Candidates come from the rational root theorem applied to the primitive
    integer multiple of ``p``; each hit is deflated as often as it divides.
    """
    _require_exact(p.field, "exact root finding")
    field = p.field
    found: list[tuple[Fraction, int]] = []
    rest = p
    if rest.degree < 1:
        return found, rest
    zero_mult = 0
    while rest.coeffs and rest.coeffs[0] == 0:
        rest = Polynomial(rest.coeffs[1:], field)
        zero_mult += 1
    if zero_mult:
        found.append((Fraction(0), zero_mult))
    if rest.degree >= 1:
        den = math.lcm(*(c.denominator for c in rest.coeffs))
        ints = [int(c * den) for c in rest.coeffs]
        g = math.gcd(*ints)
        ints = [i // g for i in ints]
        candidates = sorted(
            {Fraction(s * a, b) for a in _divisors(ints[0]) for b in _divisors(ints[-1]) for s in (1, -1)}
        )
        for r in candidates:
            mult = 0
            while rest.degree >= 1 and rest(r) == 0:
                rest = rest // Polynomial([-r, 1], field)
                mult += 1
            if mult:
                found.append((r, mult))
    found.sort(key=lambda rm: rm[0])
    return found, rest


def roots_numeric(p: Polynomial, tol: float = 1e-12, max_sweeps: int = 1000) -> list[complex]:
    """All complex roots by Durand-Kerner simultaneous iteration.

    Starts from points on a circle of Fujiwara-bound radius, rotated off the
    real axis so conjugate-symmetric stagnation cannot occur.  Converged when
    every correction is below ``tol * (1 + |z|)`` or every residual is at the
    rounding floor of the evaluation.  Roots are sorted by ``(re, im)``.
    """
    if p.degree < 1:
        raise ValueError("numeric roots need degree >= 1")
    cs = [complex(c) for c in p.coeffs]
    lead = cs[-1]
    cs = [c / lead for c in cs]
    n = len(cs) - 1
    if n == 1:
        return [-cs[0]]
    radius = 2 * max(abs(cs[n - k]) ** (1.0 / k) for k in range(1, n + 1))
    radius = max(radius, 1e-3)
    z = [radius * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]
    abs_cs = [abs(c) for c in cs]

    def evaluate(x: complex) -> tuple[complex, float]:
        acc = 0j
        bound = 0.0
        ax = abs(x)
        for c, ac in zip(reversed(cs), reversed(abs_cs)):
            acc = acc * x + c
            bound = bound * ax + ac
        return acc, bound

    for _ in range(max_sweeps):
        new = []
        max_step = 0.0
        at_floor = True
        for i, zi in enumerate(z):
            val, bound = evaluate(zi)
            if abs(val) > 8 * n * _EPS * bound:
                at_floor = False
            denom = 1 + 0j
            for j, zj in enumerate(z):
                if j != i:
                    denom *= zi - zj
            if denom == 0:
                denom = complex(_EPS, _EPS)
            step = val / denom
            max_step = max(max_step, abs(step) / (1 + abs(zi)))
            new.append(zi - step)
        if at_floor:
            break
        z = new
        if max_step <= tol:
            break
    else:
        raise ConvergenceError(f"Durand-Kerner did not converge in {max_sweeps} sweeps")
    return sorted(z, key=lambda w: (w.real, w.imag))
