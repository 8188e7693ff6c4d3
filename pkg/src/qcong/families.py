"""Named generators of f-sequences for the theorem checks.

Family grammar (used verbatim on the command line and in reports):

    ones                          f_k = 1
    delta:M                       f_k = 1 if k == M else 0
    monomial_q:C                  f_k = q^(C*k)
    random_poly:SEED:DEGMAX       f_k = random integer polynomial, degree <= DEGMAX
    random_poly:SEED:DEGMAX:BOUND same with coefficients in [-BOUND, BOUND]
    monomial_x                    f_k = x^k                      (bivariate)
    sun_p_x                       f_k = q^k (x;q)_k / (q;q)_k    (rational)

Random coefficients come from SplitMix64, a fixed 64-bit generator chosen
for its platform-independent definition: the sequence below is part of the
report format, not an implementation detail free to drift.  Coefficients
are drawn row by row, k = 0..n-1 outer, exponent i = 0..DEGMAX inner, each
as (next() mod (2*BOUND+1)) - BOUND.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bivariate import BiPoly, RatExpr
from .laurent import LaurentPoly, one, qpow, zero
from .qcalc import qpoch, qpoch_x
from .transforms import BIVARIATE, RATIONAL, UNIVARIATE, PolySeq

DEFAULT_COEFF_BOUND = 9

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The SplitMix64 generator: a 64-bit state advanced by a fixed odd gamma."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_int(self, bound: int) -> int:
        """Uniform-ish integer in [-bound, bound] (modulo bias is irrelevant here)."""
        return self.next_u64() % (2 * bound + 1) - bound


def random_int_sequence(seed: int, length: int, bound: int = DEFAULT_COEFF_BOUND) -> list[int]:
    """Deterministic integer sequence for the classical-congruence checks."""
    rng = SplitMix64(seed)
    return [rng.next_int(bound) for _ in range(length)]


_ARITY = {
    "ones": (0, 0),
    "delta": (1, 1),
    "monomial_q": (1, 1),
    "random_poly": (2, 3),
    "monomial_x": (0, 0),
    "sun_p_x": (0, 0),
}

_KINDS = {
    "ones": UNIVARIATE,
    "delta": UNIVARIATE,
    "monomial_q": UNIVARIATE,
    "random_poly": UNIVARIATE,
    "monomial_x": BIVARIATE,
    "sun_p_x": RATIONAL,
}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    args: tuple[int, ...] = ()

    def __post_init__(self):
        if self.name not in _ARITY:
            raise ValueError(f"unknown family {self.name!r}")
        lo, hi = _ARITY[self.name]
        if not lo <= len(self.args) <= hi:
            raise ValueError(f"family {self.name} takes {lo}..{hi} parameters, got {len(self.args)}")
        if self.name == "delta" and self.args[0] < 0:
            raise ValueError("delta index must be non-negative")
        if self.name == "random_poly":
            if self.args[1] < 0:
                raise ValueError("random_poly degree bound must be non-negative")
            if len(self.args) == 3 and self.args[2] < 1:
                raise ValueError("random_poly coefficient bound must be at least 1")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        parts = text.strip().split(":")
        name = parts[0]
        try:
            args = tuple(int(p) for p in parts[1:])
        except ValueError:
            raise ValueError(f"malformed family parameter in {text!r}") from None
        return cls(name, args)

    def label(self) -> str:
        return ":".join([self.name, *map(str, self.args)])

    @property
    def kind(self) -> str:
        return _KINDS[self.name]


def generate(fam: "FamilySpec | str", n: int) -> PolySeq:
    """The sequence f_0..f_{n-1} for a family; n >= 2."""
    if isinstance(fam, str):
        fam = FamilySpec.parse(fam)
    if n < 2:
        raise ValueError("families generate sequences of length n >= 2")
    name, args = fam.name, fam.args
    if name == "ones":
        entries = [one] * n
    elif name == "delta":
        entries = [one if k == args[0] else zero for k in range(n)]
    elif name == "monomial_q":
        entries = [qpow(args[0] * k) for k in range(n)]
    elif name == "random_poly":
        seed, degmax = args[0], args[1]
        bound = args[2] if len(args) == 3 else DEFAULT_COEFF_BOUND
        rng = SplitMix64(seed)
        entries = [
            LaurentPoly({i: rng.next_int(bound) for i in range(degmax + 1)})
            for _ in range(n)
        ]
    elif name == "monomial_x":
        entries = [BiPoly.x_power(k) for k in range(n)]
    elif name == "sun_p_x":
        entries = [RatExpr(qpoch_x(0, k) * qpow(k), qpoch(1, 1, k)) for k in range(n)]
    else:  # unreachable, __post_init__ validated the name
        raise ValueError(f"unknown family {name!r}")
    return PolySeq(tuple(entries), fam.kind)
