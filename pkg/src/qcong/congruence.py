"""Congruence decisions modulo powers of cyclotomic polynomials.

The working ring is Q[q] localized at polynomials coprime to Phi_n.  A
rational expression u/s with gcd(s, Phi_n) = 1 is divisible by Phi_n^m in
that ring exactly when Phi_n^m divides u as a polynomial, so congruence of
two RatExpr reduces to one polynomial divisibility test after
cross-multiplying (or mere subtraction when the denominators coincide).
Inversion via the extended Euclidean algorithm backs Residue arithmetic
and failure reporting; the decision procedure itself never inverts.

Bivariate inputs are handled coefficient-wise in x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bivariate import BiPoly, RatExpr, as_ratexpr
from .cyclotomic import cyclotomic, cyclotomic_power
from .laurent import LaurentPoly, divides, divrem, ext_gcd, one, q

__all__ = [
    "NoncoprimeDenominatorError",
    "NotInvertibleError",
    "Residue",
    "reduce",
    "invert",
    "congruent",
    "coprime_certify",
    "residual",
]


class NotInvertibleError(ValueError):
    """The element shares a factor with the modulus; carries that gcd."""

    def __init__(self, message: str, gcd: LaurentPoly):
        super().__init__(message)
        self.gcd = gcd


class NoncoprimeDenominatorError(ValueError):
    """A denominator is divisible by Phi_n, so the congruence is ill-posed."""

    def __init__(self, den: LaurentPoly, n: int):
        super().__init__(f"denominator shares a factor with Phi_{n}: {den}")
        self.den = den
        self.n = n


def _check_modulus_params(n: int, m: int) -> None:
    if n < 2:
        raise ValueError("modulus requires n >= 2")
    if m < 1:
        raise ValueError("modulus requires m >= 1")


@lru_cache(maxsize=None)
def _q_inverse(n: int, m: int) -> LaurentPoly:
    # q is a unit mod Phi_n^m since Phi_n(0) is +-1
    g, u, _ = ext_gcd(q, cyclotomic_power(n, m))
    if g != one:
        raise NotInvertibleError("q is not invertible (impossible for n >= 2)", g)
    _, rep = divrem(u, cyclotomic_power(n, m))
    return rep


def _reduce_poly(p: LaurentPoly, n: int, m: int) -> LaurentPoly:
    """Canonical representative of p: negative exponents cleared, then remainder."""
    modulus = cyclotomic_power(n, m)
    if p.is_zero():
        return p
    v = p.valuation()
    if v < 0:
        p = p.shift(-v)
        qinv = _q_inverse(n, m)
        e = -v
        # square-and-multiply on the unit q^-1, reducing as we go
        acc = one
        base = qinv
        while e:
            if e & 1:
                acc = divrem(acc * base, modulus)[1]
            e >>= 1
            if e:
                base = divrem(base * base, modulus)[1]
        p = p * acc
    _, rep = divrem(p, modulus)
    return rep


@dataclass(frozen=True)
class Residue:
    """An element of Q[q]/(Phi_n^m) by its canonical representative."""

    n: int
    m: int
    rep: LaurentPoly

    def _coerce(self, other) -> "Residue | None":
        if isinstance(other, Residue):
            if (other.n, other.m) != (self.n, self.m):
                raise ValueError("mixed moduli in Residue arithmetic")
            return other
        if isinstance(other, (LaurentPoly, int, Fraction)):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.const(other)
            return reduce(other, self.n, self.m)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.n, self.m, _reduce_poly(self.rep + o.rep, self.n, self.m))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.n, self.m, _reduce_poly(self.rep - o.rep, self.n, self.m))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.n, self.m, _reduce_poly(o.rep - self.rep, self.n, self.m))

    def __neg__(self):
        return Residue(self.n, self.m, -self.rep)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.n, self.m, _reduce_poly(self.rep * o.rep, self.n, self.m))

    __rmul__ = __mul__

    def inverse(self) -> "Residue":
        return invert(self.rep, self.n, self.m)

    def is_zero(self) -> bool:
        return self.rep.is_zero()


def reduce(p: LaurentPoly, n: int, m: int = 1) -> Residue:
    """Canonical residue of p mod Phi_n^m; Laurent inputs allowed."""
    _check_modulus_params(n, m)
    if not isinstance(p, LaurentPoly):
        p = LaurentPoly.const(p)
    return Residue(n, m, _reduce_poly(p, n, m))


def invert(p: LaurentPoly, n: int, m: int = 1) -> Residue:
    """Residue u with u*p == 1 mod Phi_n^m; raises NotInvertibleError otherwise."""
    _check_modulus_params(n, m)
    if not isinstance(p, LaurentPoly):
        p = LaurentPoly.const(p)
    if p.is_zero():
        raise NotInvertibleError("zero is not invertible", cyclotomic_power(n, m))
    v = p.valuation()
    p0 = p.shift(-v) if v else p
    modulus = cyclotomic_power(n, m)
    g, u, _ = ext_gcd(p0, modulus)
    if g != one:
        raise NotInvertibleError(f"not invertible mod Phi_{n}^{m}, gcd = {g}", g)
    inv = _reduce_poly(u, n, m)
    if v:
        # p = q^v * p0, so the inverse picks up q^(-v)
        inv = _reduce_poly(inv * _power_of_q(-v, n, m), n, m)
    return Residue(n, m, inv)


def _power_of_q(e: int, n: int, m: int) -> LaurentPoly:
    # q**e reduced, e of either sign
    return _reduce_poly(LaurentPoly.monomial(e), n, m)


def coprime_certify(p: LaurentPoly, n: int) -> bool:
    """True iff gcd(p, Phi_n) = 1.

    Phi_n is irreducible over Q, so the gcd is 1 exactly when Phi_n does
    not divide p; a remainder test decides that without a gcd loop.
    """
    if not isinstance(p, LaurentPoly):
        p = LaurentPoly.const(p)
    if p.is_zero():
        raise ValueError("coprime_certify requires a nonzero polynomial")
    return not divides(cyclotomic(n), p)


def _certify_den(den: LaurentPoly, n: int) -> None:
    if den == one:
        return
    if not coprime_certify(den, n):
        raise NoncoprimeDenominatorError(den, n)


def _difference(lhs: RatExpr, rhs: RatExpr):
    if lhs.den == rhs.den:
        return lhs.num - rhs.num
    return lhs.num * rhs.den - rhs.num * lhs.den


def congruent(lhs, rhs, n: int, m: int) -> bool:
    """Decide lhs == rhs mod Phi_n^m.

    Inputs may be LaurentPoly, BiPoly, RatExpr, or scalars.  Denominators
    must be coprime to Phi_n (NoncoprimeDenominatorError otherwise, which
    is distinct from the congruence failing).  Bivariate differences are
    tested coefficient-wise in x.
    """
    _check_modulus_params(n, m)
    left, right = as_ratexpr(lhs), as_ratexpr(rhs)
    if left is None or right is None:
        raise TypeError("congruent expects polynomial or rational operands")
    _certify_den(left.den, n)
    _certify_den(right.den, n)
    diff = _difference(left, right)
    modulus = cyclotomic_power(n, m)
    if isinstance(diff, BiPoly):
        return all(divides(modulus, c) for c in diff.coeffs.values())
    return divides(modulus, diff)


def residual(lhs, rhs, n: int, m: int):
    """Canonical representative of lhs - rhs in Q[q]/(Phi_n^m).

    Returns a LaurentPoly for univariate inputs, or an x-degree -> residue
    map (nonzero entries only) for bivariate ones.  Zero / empty exactly
    when the congruence holds.
    """
    _check_modulus_params(n, m)
    left, right = as_ratexpr(lhs), as_ratexpr(rhs)
    if left is None or right is None:
        raise TypeError("residual expects polynomial or rational operands")
    _certify_den(left.den, n)
    _certify_den(right.den, n)
    diff = _difference(left, right)
    if left.den == right.den:
        den = left.den
    else:
        den = left.den * right.den
    scale = one if den == one else invert(den, n, m).rep
    if isinstance(diff, BiPoly):
        out: dict[int, LaurentPoly] = {}
        for j, c in diff.coeffs.items():
            rep = _reduce_poly(c * scale, n, m)
            if rep:
                out[j] = rep
        return out
    return _reduce_poly(diff * scale, n, m)
