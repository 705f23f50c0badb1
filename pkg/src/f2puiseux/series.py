"""Truncated formal power series over GF(2) in one variable t.

An F2Series is a pair (coeffs, prec): the series is known modulo
t**prec, and bit j of coeffs is the coefficient of t**j.  Bits at or
above prec are never stored.  Binary operations propagate precision as
the minimum of the operands' precisions; comparisons across different
precisions truncate both sides to the smaller one first.

Units (constant coefficient 1) support inversion and unique k-th roots
for odd k, both computed by Newton lifting with precision doubling.
In characteristic 2 the inversion step y <- a*y*y squares the error
exactly, because (1+e)**2 = 1+e*e; the odd-root step
b <- b + (b**k + a) / b**(k-1) likewise doubles the number of correct
coefficients per iteration since the derivative k*b**(k-1) = b**(k-1)
is a unit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitops import bit_indices, clmul, even_part, square, trunc_bits
from .errors import EvenK, NotAUnit, OddSupport


@dataclass(frozen=True, eq=False)
class F2Series:
    """Bit-packed series over GF(2), known modulo t**prec."""

    coeffs: int
    prec: int

    def __post_init__(self):
        if self.prec < 1:
            raise ValueError(f"prec must be >= 1, got {self.prec}")
        if self.coeffs < 0:
            raise ValueError("coefficient bits must be nonnegative")
        # canonical storage: construction truncates at prec
        object.__setattr__(self, "coeffs", trunc_bits(self.coeffs, self.prec))

    @classmethod
    def one(cls, prec: int) -> "F2Series":
        return cls(1, prec)

    def is_unit(self) -> bool:
        return bool(self.coeffs & 1)

    def truncate(self, prec: int) -> "F2Series":
        """Forget coefficients at or above prec (never extends knowledge)."""
        if prec >= self.prec:
            return self
        return F2Series(self.coeffs, prec)

    def __eq__(self, other):
        if not isinstance(other, F2Series):
            return NotImplemented
        p = min(self.prec, other.prec)
        return trunc_bits(self.coeffs ^ other.coeffs, p) == 0

    __hash__ = None  # equality is truncation-relative

    def __repr__(self):
        terms = [f"t^{j}" if j > 1 else ("t" if j else "1")
                 for j in bit_indices(self.coeffs)]
        body = " + ".join(terms) if terms else "0"
        return f"F2Series({body} + O(t^{self.prec}))"


def add(a: F2Series, b: F2Series) -> F2Series:
    """Coefficientwise XOR; precision is the minimum of the operands'."""
    p = min(a.prec, b.prec)
    return F2Series(a.coeffs ^ b.coeffs, p)


def mul(a: F2Series, b: F2Series) -> F2Series:
    """Carry-less product truncated to the minimum precision."""
    p = min(a.prec, b.prec)
    return F2Series(clmul(trunc_bits(a.coeffs, p), trunc_bits(b.coeffs, p)), p)


def pow_int(a: F2Series, e: int) -> F2Series:
    """a**e for e >= 0 by square and multiply, truncated to a.prec."""
    if e < 0:
        raise ValueError("exponent must be nonnegative; invert first")
    return F2Series(_pow(a.coeffs, e, a.prec), a.prec)


def inv(a: F2Series) -> F2Series:
    """Inverse of a unit, to the same precision."""
    if not a.is_unit():
        raise NotAUnit("series has constant coefficient 0")
    return F2Series(_inv(a.coeffs, a.prec), a.prec)


def sqrt(a: F2Series) -> F2Series:
    """Square root of an even-support series: bit j of the root is bit 2j.

    The result is known modulo t**ceil(prec/2).
    """
    root, clean = even_part(a.coeffs)
    if not clean:
        raise OddSupport("series has a nonzero coefficient at an odd exponent")
    return F2Series(root, (a.prec + 1) // 2)


def kth_root_odd(a: F2Series, k: int) -> F2Series:
    """The unique k-th root with constant coefficient 1, for odd k >= 1."""
    if k < 1 or k % 2 == 0:
        raise EvenK(f"k must be a positive odd integer, got {k}")
    if not a.is_unit():
        raise NotAUnit("series has constant coefficient 0")
    if k == 1:
        return a
    return F2Series(_kth_root_odd(a.coeffs, k, a.prec), a.prec)


# ---------------------------------------------------------------------------
# int-level implementations (operands already truncated to prec)

def _mul(a: int, b: int, prec: int) -> int:
    return trunc_bits(clmul(a, b), prec)


def _sqr(a: int, prec: int) -> int:
    return trunc_bits(square(trunc_bits(a, (prec + 1) // 2)), prec)


def _pow(a: int, e: int, prec: int) -> int:
    r, b = 1, trunc_bits(a, prec)
    while e:
        if e & 1:
            r = _mul(r, b, prec)
        b = _sqr(b, prec)
        e >>= 1
    return r


def _inv(a: int, prec: int) -> int:
    # y <- a*y*y doubles the error valuation each step
    y, cur = 1, 1
    while cur < prec:
        cur = min(2 * cur, prec)
        y = _mul(trunc_bits(a, cur), _sqr(y, cur), cur)
    return y


def _kth_root_odd(a: int, k: int, prec: int) -> int:
    ladder = [prec]
    while ladder[-1] > 1:
        ladder.append((ladder[-1] + 1) // 2)
    b = 1  # the root's residue; correct modulo t
    for m in ladder[-2::-1]:
        am = trunc_bits(a, m)
        bk1 = _pow(b, k - 1, m)
        residual = _mul(bk1, b, m) ^ am  # b**k + a
        b ^= _mul(residual, _inv(bk1, m), m)
    return b
