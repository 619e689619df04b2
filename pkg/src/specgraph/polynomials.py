"""Exact polynomial arithmetic: integer polynomials, Sturm chains, root counting.

Coefficients run from the highest degree down.  Everything here is exact --
integers or fractions -- because cospectrality decisions and eigenvalue
counts at integer thresholds must never depend on floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import ParameterError

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial; coeffs highest degree first, no leading zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            object.__setattr__(self, "coeffs", (0,))
        if any(not isinstance(c, int) for c in self.coeffs):
            raise ParameterError("coefficients must be integers")
        if len(self.coeffs) > 1 and self.coeffs[0] == 0:
            trimmed = list(self.coeffs)
            while len(trimmed) > 1 and trimmed[0] == 0:
                trimmed.pop(0)
            object.__setattr__(self, "coeffs", tuple(trimmed))

    @classmethod
    def of(cls, *coeffs: int) -> "IntPolynomial":
        return cls(tuple(int(c) for c in coeffs))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((1, 0))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def is_monic(self) -> bool:
        return self.coeffs[0] == 1

    def coefficient(self, power: int) -> int:
        """Coefficient of x**power (0 if beyond the degree)."""
        if power < 0 or power > self.degree:
            return 0
        return self.coeffs[self.degree - power]

    def evaluate(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        d = self.degree
        if d == 0:
            return IntPolynomial((0,))
        return IntPolynomial(tuple(c * (d - i) for i, c in enumerate(self.coeffs[:-1])))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        pad = len(a) - len(b)
        return IntPolynomial(tuple(a[i] + (b[i - pad] if i >= pad else 0)
                                   for i in range(len(a))))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + IntPolynomial(tuple(-c for c in other.coeffs))

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return IntPolynomial((0,))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise ParameterError("negative polynomial power")
        result = IntPolynomial((1,))
        for _ in range(e):
            result = result * self
        return result

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = self.degree - i
            mag = abs(c)
            if p == 0:
                term = str(mag)
            else:
                var = "x" if p == 1 else f"x^{p}"
                term = var if mag == 1 else f"{mag}*{var}"
            parts.append(("- " if c < 0 else "+ ") + term)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass(frozen=True)
class FactoredIntPolynomial:
    """Product of integer polynomial factors with positive exponents."""

    factors: tuple[tuple[IntPolynomial, int], ...]

    def expand(self) -> IntPolynomial:
        result = IntPolynomial((1,))
        for base, exp in self.factors:
            result = result * base ** exp
        return result

    def to_json(self) -> list[dict]:
        return [{"coefficients": list(base.coeffs), "exponent": exp}
                for base, exp in self.factors]

    def __str__(self) -> str:
        return " * ".join(f"({base})^{exp}" if exp != 1 else f"({base})"
                          for base, exp in self.factors)


def divmod_by_monic(p: IntPolynomial, d: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Exact (quotient, remainder) of p by a monic integer divisor."""
    if not d.is_monic:
        raise ParameterError("divisor must be monic")
    rem = list(p.coeffs)
    dn = d.degree
    if p.degree < dn:
        return IntPolynomial((0,)), p
    quot = [0] * (p.degree - dn + 1)
    for i in range(len(quot)):
        q = rem[i]
        quot[i] = q
        if q:
            for j, c in enumerate(d.coeffs):
                rem[i + j] -= q * c
    return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[len(quot):]) or (0,))


# ---------------------------------------------------------------------------
# rational polynomial helpers (tuples of Fraction, highest degree first)
# ---------------------------------------------------------------------------

RatPoly = tuple[Fraction, ...]

_R_ZERO: RatPoly = (Fraction(0),)


def rat_poly(p: Union[IntPolynomial, Sequence[Scalar]]) -> RatPoly:
    coeffs = p.coeffs if isinstance(p, IntPolynomial) else p
    out = tuple(Fraction(c) for c in coeffs)
    return _r_trim(out)


def _r_trim(p: RatPoly) -> RatPoly:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return tuple(p[i:])


def _r_degree(p: RatPoly) -> int:
    return len(p) - 1


def _r_is_zero(p: RatPoly) -> bool:
    return len(p) == 1 and p[0] == 0


def _r_eval(p: RatPoly, x: Scalar) -> Fraction:
    acc = Fraction(0)
    for c in p:
        acc = acc * x + c
    return acc


def _r_derivative(p: RatPoly) -> RatPoly:
    d = _r_degree(p)
    if d == 0:
        return _R_ZERO
    return _r_trim(tuple(c * (d - i) for i, c in enumerate(p[:-1])))


def _r_monic(p: RatPoly) -> RatPoly:
    if _r_is_zero(p):
        return p
    lead = p[0]
    return tuple(c / lead for c in p)


def _r_divmod(p: RatPoly, d: RatPoly) -> tuple[RatPoly, RatPoly]:
    if _r_is_zero(d):
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dn = _r_degree(d)
    if _r_degree(p) < dn:
        return _R_ZERO, p
    quot = [Fraction(0)] * (_r_degree(p) - dn + 1)
    for i in range(len(quot)):
        q = rem[i] / d[0]
        quot[i] = q
        if q:
            for j, c in enumerate(d):
                rem[i + j] -= q * c
    return _r_trim(tuple(quot)), _r_trim(tuple(rem[len(quot):]) or (Fraction(0),))


def _r_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd via the Euclidean algorithm."""
    while not _r_is_zero(b):
        a, b = b, _r_divmod(a, b)[1]
    return _r_monic(a)


def _to_int_poly(p: RatPoly) -> IntPolynomial:
    if any(c.denominator != 1 for c in p):
        raise ParameterError(f"expected integer coefficients, got {p}")
    return IntPolynomial(tuple(int(c) for c in p))


def squarefree_factors(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Decompose a monic integer polynomial as prod(q_i ** i) with q_i squarefree.

    Returns the nontrivial (q_i, i) pairs.  Monic rational factors of a monic
    integer polynomial are integral, so the results stay integer polynomials.
    """
    if not p.is_monic:
        raise ParameterError("squarefree decomposition expects a monic polynomial")
    f = rat_poly(p)
    if _r_degree(f) == 0:
        return []
    g = _r_gcd(f, _r_derivative(f))          # prod q_i^(i-1)
    w = _r_divmod(f, g)[0]                   # prod q_i
    out = []
    i = 1
    while _r_degree(w) > 0:
        y = _r_gcd(w, g)                     # factors of multiplicity > i
        qi = _r_divmod(w, y)[0]
        if _r_degree(qi) > 0:
            out.append((_to_int_poly(_r_monic(qi)), i))
        w = y
        g = _r_divmod(g, y)[0]
        i += 1
    return out


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sturm_chain(q: RatPoly) -> list[RatPoly]:
    chain = [q, _r_derivative(q)]
    while _r_degree(chain[-1]) > 0:
        rem = _r_divmod(chain[-2], chain[-1])[1]
        if _r_is_zero(rem):
            break  # cannot happen for squarefree input
        chain.append(tuple(-c for c in rem))
    return chain


def _sign_changes(signs: list[int]) -> int:
    seq = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def _sturm_count_leq(q: RatPoly, a: Scalar) -> int:
    """Distinct real roots of squarefree q in (-inf, a]; requires q(a) != 0."""
    chain = _sturm_chain(q)
    at_minus_inf = [_sign(p[0]) * (-1 if _r_degree(p) % 2 else 1) for p in chain]
    at_a = [_sign(_r_eval(p, a)) for p in chain]
    return _sign_changes(at_minus_inf) - _sign_changes(at_a)


def root_multiplicity(p: IntPolynomial, a: Scalar) -> int:
    """Multiplicity of a as a root of p (0 if not a root)."""
    return sum(i for q, i in squarefree_factors(p) if q.evaluate(a) == 0)


def count_roots_leq(p: IntPolynomial, a: Scalar) -> int:
    """Real roots of p that are <= a, counted with multiplicity.  Exact."""
    total = 0
    for q, mult in squarefree_factors(p):
        qq = rat_poly(q)
        if _r_eval(qq, a) == 0:
            total += mult
            qq = _r_divmod(qq, (Fraction(1), -Fraction(a)))[0]
            if _r_degree(qq) == 0:
                continue
        total += mult * _sturm_count_leq(qq, a)
    return total


def count_roots_geq(p: IntPolynomial, a: Scalar) -> int:
    """Real roots of p that are >= a, counted with multiplicity.  Exact.

    Valid for polynomials with all roots real (symmetric-matrix spectra).
    """
    return p.degree - count_roots_leq(p, a) + root_multiplicity(p, a)
