"""Both sides of each symmetric-congruence statement, assembled and decided.

Each statement gets a side-builder returning the two expressions over a
shared denominator (so the decision usually reduces to one divisibility
test) and a check_* wrapper that times the decision and packages a report.
Side-builders are public on purpose: the negative-control tests perturb a
side and expect the congruence to break.

Parameter conventions:

  SymParams(n, d, r):  a is the unique residue in [0, n-1] with
      a*d + r == 0 (mod n); the exponent is
      E = d*C(a+1,2) + (a*d + r)*(n-1-2a)/2, always an integer (for odd n
      the second factor is even, for even n the first is a multiple of n);
      the sign is (-1)^a for odd n and (-1)^(a + (a*d+r)/n) for even n.

  AlphaParams(n, a, s):  alpha = a + s*n, F = C(a+1,2) + s*n*a - s*C(n,2),
      sign (-1)^a for odd n and (-1)^(a+s) for even n.

The summand weight in the first two statements is
T_k = (q^r;q^d)_k (q^(d-r);q^d)_k / (q^d;q^d)_k^2; both sides are built
over the common denominator (q^d;q^d)_{n-1}^2, turning T_k into the
polynomial P_k * G_k^2 with G_k the trailing factors of (q^d;q^d)_{n-1}.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .bivariate import BiPoly, RatExpr
from .congruence import congruent, residual
from .families import FamilySpec, generate
from .laurent import LaurentPoly, divides, one, qpow
from .cyclotomic import cyclotomic
from .qcalc import qbinom_int, qpoch, qpoch_x
from .transforms import RATIONAL, PolySeq, common_denominator, hat, tilde


def _tri(x: int) -> int:
    """The binomial C(x, 2)."""
    return x * (x - 1) // 2


@dataclass(frozen=True)
class SymParams:
    n: int
    d: int
    r: int
    a: int
    E: int
    sign: int
    branch: str

    @classmethod
    def create(cls, n: int, d: int, r: int) -> "SymParams":
        if n < 2:
            raise ValueError("n must be at least 2")
        if d < 1:
            raise ValueError("d must be at least 1")
        if math.gcd(n, d) != 1:
            raise ValueError(f"n and d must be coprime, gcd({n},{d}) != 1")
        a = next(a for a in range(n) if (a * d + r) % n == 0)
        prod = (a * d + r) * (n - 1 - 2 * a)
        if prod % 2:
            raise ArithmeticError(f"exponent not integral at n={n} d={d} r={r}")
        E = d * _tri(a + 1) + prod // 2
        if n % 2:
            branch, parity = "odd", a
        else:
            branch, parity = "even", a + (a * d + r) // n
        return cls(n, d, r, a, E, -1 if parity % 2 else 1, branch)


@dataclass(frozen=True)
class AlphaParams:
    n: int
    a: int
    s: int
    alpha: int
    F: int
    sign: int
    branch: str

    @classmethod
    def create(cls, n: int, a: int, s: int) -> "AlphaParams":
        if n < 2:
            raise ValueError("n must be at least 2")
        if not 0 <= a < n:
            raise ValueError(f"a must lie in [0, {n - 1}]")
        alpha = a + s * n
        F = _tri(a + 1) + s * n * a - s * _tri(n)
        if n % 2:
            branch, parity = "odd", a
        else:
            branch, parity = "even", a + s
        return cls(n, a, s, alpha, F, -1 if parity % 2 else 1, branch)


@dataclass(frozen=True)
class CheckReport:
    check: str
    params: dict
    holds: bool
    a: "int | None" = None
    exponent: "int | None" = None
    sign: "int | None" = None
    branch: "str | None" = None
    wall_time: float = 0.0
    residual: "str | None" = None


def _resolve_family(fam, n: int) -> tuple[PolySeq, str]:
    if isinstance(fam, PolySeq):
        return fam, "custom"
    if isinstance(fam, str):
        fam = FamilySpec.parse(fam)
    return generate(fam, n), fam.label()


def _subs(entry, d: int):
    if d == 1:
        return entry
    if isinstance(entry, BiPoly):
        return entry.subs_power(d)
    return entry.substitute_power(d)


def _sym_weights(p: SymParams) -> list[LaurentPoly]:
    """P_k * G_k^2, the numerator of T_k over the shared denominator."""
    n, d, r = p.n, p.d, p.r
    G: list[LaurentPoly] = [one] * n
    for k in range(n - 2, -1, -1):
        G[k] = G[k + 1] * (one - qpow(d * (k + 1)))
    weights = []
    P = one
    for k in range(n):
        if k:
            P = P * (one - qpow(r + d * (k - 1))) * (one - qpow(d - r + d * (k - 1)))
        weights.append(P * (G[k] * G[k]))
    return weights


def _sym_den(p: SymParams) -> LaurentPoly:
    D = qpoch(p.d, p.d, p.n - 1)
    return D * D


def _weighted_sum(weights, entries, d: int, extra_exp: int = 0):
    """Sum of weights[k] * q^(extra_exp*k) * entries[k](q^d)."""
    acc = None
    for k, f in enumerate(entries):
        w = weights[k] if extra_exp == 0 else weights[k].shift(extra_exp * k)
        term = _subs(f, d) * w
        acc = term if acc is None else acc + term
    return acc


def thm_1_1_sides(p: SymParams, seq: PolySeq) -> tuple[RatExpr, RatExpr]:
    """q^E * Sum T_k q^(dk) f_k(q^d)  vs  sign * Sum T_k q^(dk) hat(f)_k(q^d)."""
    if seq.kind == RATIONAL:
        raise ValueError("rational families are out of hypothesis here; use thm_1_2")
    if len(seq) != p.n:
        raise ValueError(f"need exactly n={p.n} entries, got {len(seq)}")
    weights = _sym_weights(p)
    hatted = hat(seq)
    lhs = _weighted_sum(weights, seq.entries, p.d, extra_exp=p.d) * qpow(p.E)
    rhs = _weighted_sum(weights, hatted.entries, p.d, extra_exp=p.d) * p.sign
    den = _sym_den(p)
    return RatExpr(lhs, den), RatExpr(rhs, den)


def thm_1_2_sides(p: SymParams, seq: PolySeq) -> tuple[RatExpr, RatExpr]:
    """Sum T_k f_k(q^d)  vs  sign * q^E * Sum T_k tilde(f)_k(q^d).

    Rational families are allowed: the sequence is rewritten over a common
    denominator first, which then multiplies the shared T_k denominator.
    """
    if len(seq) != p.n:
        raise ValueError(f"need exactly n={p.n} entries, got {len(seq)}")
    weights = _sym_weights(p)
    den = _sym_den(p)
    if seq.kind == RATIONAL:
        nums, fden = common_denominator(seq.entries)
        tilded = tilde(nums)
        den = den * fden.substitute_power(p.d)
    else:
        nums = list(seq.entries)
        tilded = tilde(nums)
    lhs = _weighted_sum(weights, nums, p.d)
    rhs = _weighted_sum(weights, tilded, p.d) * (p.sign * qpow(p.E))
    return RatExpr(lhs, den), RatExpr(rhs, den)


def thm_2_1_sides(p: AlphaParams, seq: PolySeq):
    """sign * q^F * Sum q^(k^2+k) [alpha,k][-1-alpha,k] f_k  vs  the hat sum.

    Both sides are plain (Laurent or bivariate) polynomials: the q-binomials
    with integer top are Laurent polynomials, so no denominators appear.
    """
    if seq.kind == RATIONAL:
        raise ValueError("rational families are out of hypothesis here")
    if len(seq) != p.n:
        raise ValueError(f"need exactly n={p.n} entries, got {len(seq)}")
    hatted = hat(seq)
    lhs = None
    rhs = None
    for k in range(p.n):
        B = qbinom_int(p.alpha, k) * qbinom_int(-1 - p.alpha, k)
        B = B.shift(k * k + k)
        tl = seq[k] * B
        tr = hatted[k] * B
        lhs = tl if lhs is None else lhs + tl
        rhs = tr if rhs is None else rhs + tr
    lhs = lhs * (p.sign * qpow(p.F))
    return lhs, rhs


def s0_sides(n: int, a: int, seq: PolySeq):
    """The exact identity behind the s = 0 case:

    Sum q^(k^2+k) [a,k][-1-a,k] hat(f)_k  ==  (-1)^a q^C(a+1,2) Sum q^(k^2+k) [a,k][-1-a,k] f_k.
    """
    if not 0 <= a < n:
        raise ValueError(f"a must lie in [0, {n - 1}]")
    if seq.kind == RATIONAL:
        raise ValueError("polynomial families only")
    hatted = hat(seq)
    lhs = None
    rhs = None
    for k in range(n):
        B = qbinom_int(a, k) * qbinom_int(-1 - a, k)
        B = B.shift(k * k + k)
        tl = hatted[k] * B
        tr = seq[k] * B
        lhs = tl if lhs is None else lhs + tl
        rhs = tr if rhs is None else rhs + tr
    sign = -1 if a % 2 else 1
    rhs = rhs * (sign * qpow(_tri(a + 1)))
    return lhs, rhs


def sun_p_sides(p: SymParams) -> tuple[RatExpr, RatExpr]:
    """P_n(-r/d, x; q^d)  vs  sign * q^E * P_n(-r/d, x q^(-d); q^(-d)), odd n.

    P_n(alpha, x; Q) = Sum q^(k^2+k maps to Q) [alpha,k]_Q [-1-alpha,k]_Q (x;Q)_k / (Q;Q)_k.
    With alpha = -r/d every q-exponent is an integer: the binomial
    numerators become ordinary Pochhammer products with step +-d.  Each
    side is built over the denominator (Q;Q)_{n-1}^3.
    """
    if p.n % 2 == 0:
        raise ValueError("this statement is for odd n >= 3 only")
    n, d, r = p.n, p.d, p.r

    def build(step: int) -> tuple[BiPoly, LaurentPoly]:
        d_alpha = -r if step == d else r  # step * alpha, alpha = -r/d
        H: list[LaurentPoly] = [one] * n
        for k in range(n - 2, -1, -1):
            H[k] = H[k + 1] * (one - qpow(step * (k + 1)))
        num = None
        for k in range(n):
            n1 = qpoch(d_alpha + step * (1 - k), step, k)
            n2 = qpoch(-d_alpha - step * k, step, k)
            w = n1 * n2 * (H[k] * H[k] * H[k])
            w = w.shift(step * (k * k + k))
            term = qpoch_x(0, k).subs_power(step) * w
            num = term if num is None else num + term
        D = qpoch(step, step, n - 1)
        return num, D * D * D

    lhs_num, lhs_den = build(d)
    rhs_num, rhs_den = build(-d)
    rhs_num = rhs_num.scale_x(qpow(-d)) * (p.sign * qpow(p.E))
    return RatExpr(lhs_num, lhs_den), RatExpr(rhs_num, rhs_den)


def _residual_text(lhs, rhs, n: int, m: int) -> str:
    res = residual(lhs, rhs, n, m)
    if isinstance(res, dict):
        return "; ".join(f"x^{j}: {res[j]}" for j in sorted(res))
    return str(res)


def _report(check: str, params: dict, p, lhs, rhs, n: int, started: float) -> CheckReport:
    holds = congruent(lhs, rhs, n, 2)
    return CheckReport(
        check=check,
        params=params,
        holds=holds,
        a=p.a,
        exponent=p.E if isinstance(p, SymParams) else p.F,
        sign=p.sign,
        branch=p.branch,
        wall_time=time.perf_counter() - started,
        residual=None if holds else _residual_text(lhs, rhs, n, 2),
    )


def check_thm_1_1(p: SymParams, fam) -> CheckReport:
    started = time.perf_counter()
    seq, label = _resolve_family(fam, p.n)
    lhs, rhs = thm_1_1_sides(p, seq)
    params = {"n": p.n, "d": p.d, "r": p.r, "family": label}
    return _report("thm1.1", params, p, lhs, rhs, p.n, started)


def check_thm_1_2(p: SymParams, fam) -> CheckReport:
    started = time.perf_counter()
    seq, label = _resolve_family(fam, p.n)
    lhs, rhs = thm_1_2_sides(p, seq)
    params = {"n": p.n, "d": p.d, "r": p.r, "family": label}
    return _report("thm1.2", params, p, lhs, rhs, p.n, started)


def check_thm_2_1(p: AlphaParams, fam) -> CheckReport:
    started = time.perf_counter()
    seq, label = _resolve_family(fam, p.n)
    lhs, rhs = thm_2_1_sides(p, seq)
    params = {"n": p.n, "a": p.a, "s": p.s, "family": label}
    rep = _report("thm2.1", params, p, lhs, rhs, p.n, started)
    return rep


def check_s0_identity(n: int, a: int, fam) -> bool:
    """Exact equality, not a congruence."""
    seq, _ = _resolve_family(fam, n)
    lhs, rhs = s0_sides(n, a, seq)
    return lhs == rhs


def check_lemma_sn_binom(n: int, s: int, j: int) -> bool:
    """Phi_n divides [s*n over j]_q for 1 <= j <= n-1, s != 0."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if s == 0:
        raise ValueError("s must be nonzero")
    if not 1 <= j <= n - 1:
        raise ValueError(f"j must lie in [1, {n - 1}]")
    return divides(cyclotomic(n), qbinom_int(s * n, j))


def check_lemma_sn_minus1(n: int, s: int, j: int) -> bool:
    """[s*n - 1 over j-1]_q == (-1)^(j-1) q^(-C(j,2)) mod Phi_n for 1 <= j <= n-1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 1 <= j <= n - 1:
        raise ValueError(f"j must lie in [1, {n - 1}]")
    closed = qpow(-_tri(j)) * (-1 if (j - 1) % 2 else 1)
    return divides(cyclotomic(n), qbinom_int(s * n - 1, j - 1) - closed)


def check_even_sign_fact(n: int) -> bool:
    """Phi_n divides (-1)^(n-1) q^C(n,2) - 1 for even n."""
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    value = qpow(_tri(n)) * (-1 if (n - 1) % 2 else 1) - one
    return divides(cyclotomic(n), value)


def check_guo_zeng(p: SymParams) -> CheckReport:
    """The bivariate instance f_k = x^k, after verifying hat(x^k) = (xq;q)_k."""
    started = time.perf_counter()
    seq = generate("monomial_x", p.n)
    hatted = hat(seq)
    params = {"n": p.n, "d": p.d, "r": p.r, "family": "monomial_x"}
    for k in range(p.n):
        if hatted[k] != qpoch_x(1, k):
            return CheckReport(
                check="guo_zeng", params=params, holds=False,
                a=p.a, exponent=p.E, sign=p.sign, branch=p.branch,
                wall_time=time.perf_counter() - started,
                residual=f"hat(x^k) != (xq;q)_k at k={k}",
            )
    lhs, rhs = thm_1_1_sides(p, seq)
    return _report("guo_zeng", params, p, lhs, rhs, p.n, started)


def check_sun_p_analogue(p: SymParams) -> CheckReport:
    started = time.perf_counter()
    lhs, rhs = sun_p_sides(p)
    params = {"n": p.n, "d": p.d, "r": p.r, "family": "sun_p_x"}
    return _report("sun_p", params, p, lhs, rhs, p.n, started)


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def _binom_frac(alpha: Fraction, k: int) -> Fraction:
    v = Fraction(1)
    for i in range(k):
        v *= alpha - i
    return v / math.factorial(k)


def check_classical_sun(p: int, alpha: "Fraction | int | str", fs) -> bool:
    """The integer-side oracle: the p^2 congruence on exact rationals.

    Decides whether Sum C(alpha,k) C(-1-alpha,k) f_k for k < p differs from
    (-1)^<alpha>_p times the hatted sum by a rational of p-adic valuation
    at least 2.  alpha must be p-integral; f needs at least p entries.
    """
    alpha = Fraction(alpha)
    if not _is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    if alpha.denominator % p == 0:
        raise ValueError("alpha must be p-integral")
    fs = list(fs)
    if len(fs) < p:
        raise ValueError(f"need at least p={p} sequence entries")
    a = alpha.numerator * pow(alpha.denominator, -1, p) % p
    hatted = [
        sum((-1) ** j * math.comb(k, j) * fs[j] for j in range(k + 1))
        for k in range(p)
    ]
    s_plain = Fraction(0)
    s_hat = Fraction(0)
    for k in range(p):
        w = _binom_frac(alpha, k) * _binom_frac(-1 - alpha, k)
        s_plain += w * fs[k]
        s_hat += w * hatted[k]
    diff = s_plain - (-1 if a % 2 else 1) * s_hat
    if diff == 0:
        return True
    if diff.denominator % p == 0:
        # cannot happen: k! for k < p and the p-integral alpha keep p out
        raise ArithmeticError("difference is not p-integral")
    num, v = diff.numerator, 0
    while num % p == 0:
        num //= p
        v += 1
    return v >= 2
