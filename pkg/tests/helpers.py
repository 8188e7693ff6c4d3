"""Independent oracles used to cross-check library results.

Everything here is deliberately written against plain dicts and dense
coefficient lists rather than the library's own arithmetic, so a bug in
the package cannot hide itself by appearing on both sides of an assert.
"""

from fractions import Fraction
from math import factorial

from qcong.laurent import LaurentPoly


def terms_of(p: LaurentPoly) -> dict:
    return {e: Fraction(c) for e, c in p.terms.items()}


def ref_mul(a: dict, b: dict) -> dict:
    """Schoolbook product of two exponent->coefficient dicts."""
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = out.get(e, Fraction(0)) + Fraction(ca) * Fraction(cb)
    return {e: c for e, c in out.items() if c != 0}


def ref_add(a: dict, b: dict) -> dict:
    out = {e: Fraction(c) for e, c in a.items()}
    for e, c in b.items():
        out[e] = out.get(e, Fraction(0)) + Fraction(c)
    return {e: c for e, c in out.items() if c != 0}


# -- dense ordinary-polynomial helpers (ascending coefficient lists) --------


def dense_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += Fraction(ca) * Fraction(cb)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def dense_divmod(num: list, den: list) -> tuple:
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while len(den) > 1 and den[-1] == 0:
        den.pop()
    quot = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    rem = num[:]
    for i in range(len(num) - len(den), -1, -1):
        coeff = rem[i + len(den) - 1] / den[-1]
        quot[i] = coeff
        if coeff:
            for j, dc in enumerate(den):
                rem[i + j] -= coeff * dc
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quot, rem


def mobius(n: int) -> int:
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def cyclotomic_by_mobius(n: int) -> LaurentPoly:
    """Phi_n as prod over d | n of (q^(n/d) - 1)^mobius(d), no recursion."""
    num = [Fraction(1)]
    den = [Fraction(1)]
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = mobius(d)
        if mu == 0:
            continue
        factor = [Fraction(-1)] + [Fraction(0)] * (n // d - 1) + [Fraction(1)]
        if mu == 1:
            num = dense_mul(num, factor)
        else:
            den = dense_mul(den, factor)
    quot, rem = dense_divmod(num, den)
    assert rem == [Fraction(0)], "mobius product must divide exactly"
    return LaurentPoly({i: c for i, c in enumerate(quot) if c != 0})


def qpascal(n: int, k: int) -> dict:
    """Gaussian binomial by the q-Pascal recurrence, as a dict."""
    if k < 0 or k > n:
        return {}
    row = [{0: Fraction(1)}]
    for m in range(1, n + 1):
        nxt = [{0: Fraction(1)}]
        for j in range(1, m):
            shifted = {e + j: c for e, c in row[j].items()}
            nxt.append(ref_add(row[j - 1], shifted))
        nxt.append({0: Fraction(1)})
        row = nxt
    return row[k]


def negative_top_qbinom(m: int, k: int) -> LaurentPoly:
    """Closed form for a Gaussian binomial with top index -m, m >= 1."""
    if k < 0:
        return LaurentPoly()
    sign = -1 if k % 2 else 1
    body = LaurentPoly(qpascal(m + k - 1, k))
    return body.shift(-m * k - k * (k - 1) // 2) * sign


def binom_frac(alpha: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= (alpha - i)
    return out / factorial(k)


def padic_val(x: Fraction, p: int) -> int:
    """p-adic valuation; huge sentinel for zero."""
    if x == 0:
        return 10**9
    num, den = x.numerator, x.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def solve_lower_triangular(matrix, gs):
    """Recover f from g = M f when M is lower triangular with unit monomial
    diagonal entries (exact division by a +-q^e monomial)."""
    fs = []
    for k, g in enumerate(gs):
        acc = g
        for j in range(k):
            acc = acc - matrix[k][j] * fs[j]
        diag = matrix[k][k]
        (e, c), = diag.terms.items()
        assert c in (1, -1), "diagonal must be a unit monomial"
        fs.append(acc.shift(-e) * c)
    return fs


def complex_eval(p: LaurentPoly, z: complex) -> complex:
    out = 0j
    for e, c in p.terms.items():
        out += complex(c) * z**e
    return out
