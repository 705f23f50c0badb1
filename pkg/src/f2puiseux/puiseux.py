"""Units of the fractional-exponent series ring over GF(2), and their
rational scalar action.

A PuiseuxUnit is a series with constant coefficient 1 living on the
exponent grid (1/den)*Z: bit j of the body is the coefficient of
x**(j/den).  The union over all den forms a multiplicative group on
which every integer power map is a bijection, which is exactly what
makes u**r well defined for rational r: square roots halve exponents
(double den), odd roots come from Newton lifting, and the two commute.

An L0Element adds an exact rational valuation: the pair (val, unit)
stands for x**val * unit.  Multiplication adds valuations and
multiplies units, so the element group splits as the direct product of
the rationals and the unit group; decompose/compose move between the
raw-series view and that product view.

Grid denominators are bounded by a per-call cap (default 2**16) so
that runaway exponent towers fail loudly instead of exhausting memory.
Values are immutable and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Union

from . import series
from .bitops import bit_indices, compress, spread, support_gcd, trunc_bits
from .errors import DenominatorOverflow, Indistinguishable, NotAUnit
from .series import F2Series

#: Exact rational scalars and exponents.
Rational = Fraction

RationalLike = Union[Rational, int]

DEFAULT_DEN_CAP = 1 << 16


def _check_den(den: int, den_cap: int | None) -> None:
    if den_cap is not None and den > den_cap:
        raise DenominatorOverflow(
            f"grid denominator {den} exceeds the cap {den_cap}")


@dataclass(frozen=True, eq=False)
class PuiseuxUnit:
    """Residue-1 unit on the grid (1/den)*Z; always stored normalized."""

    den: int
    body: F2Series

    def __post_init__(self):
        if self.den < 1:
            raise ValueError(f"den must be >= 1, got {self.den}")
        if not self.body.is_unit():
            raise NotAUnit("unit part must have constant coefficient 1")
        # canonical representative: contract the grid by the common divisor
        # of den, the support indices and the precision index, so that
        # re-gridding is exact and rendering round-trips.
        g = gcd(self.den, self.body.prec)
        if g > 1:
            g = support_gcd(self.body.coeffs, g)
        if g > 1:
            body = F2Series(compress(self.body.coeffs, g), self.body.prec // g)
            object.__setattr__(self, "den", self.den // g)
            object.__setattr__(self, "body", body)

    @classmethod
    def one(cls, prec: int = 1, den: int = 1) -> "PuiseuxUnit":
        return cls(den, F2Series.one(prec))

    @property
    def aprec(self) -> Rational:
        """The unit is known modulo x**aprec."""
        return Fraction(self.body.prec, self.den)

    def is_identity(self) -> bool:
        """True when the unit equals 1 as far as its precision can see."""
        return self.body.coeffs == 1

    def exponents(self) -> list[Rational]:
        """Exponents with coefficient 1, ascending (0 is always first)."""
        return [Fraction(j, self.den) for j in bit_indices(self.body.coeffs)]

    def __eq__(self, other):
        if not isinstance(other, PuiseuxUnit):
            return NotImplemented
        return units_agree(self, other)

    __hash__ = None

    def __repr__(self):
        terms = ["1"] + [f"x^({e})" for e in self.exponents()[1:]]
        return f"PuiseuxUnit({' + '.join(terms)} + O(x^({self.aprec})))"


def normalize(den: int, body: F2Series) -> PuiseuxUnit:
    """Canonical representative of a raw denominator-and-series pair."""
    return PuiseuxUnit(den, body)


def _on_grid(u: PuiseuxUnit, den: int) -> tuple[int, int]:
    """Body bits and precision index of u re-read on the grid 1/den."""
    m = den // u.den
    return spread(u.body.coeffs, m), u.body.prec * m


def units_agree(u: PuiseuxUnit, v: PuiseuxUnit) -> bool:
    """Equality on a common grid at the smaller of the two precisions."""
    d = lcm(u.den, v.den)
    cu, pu = _on_grid(u, d)
    cv, pv = _on_grid(v, d)
    p = min(pu, pv)
    return trunc_bits(cu ^ cv, p) == 0


def unit_mul(u: PuiseuxUnit, v: PuiseuxUnit, *,
             den_cap: int | None = DEFAULT_DEN_CAP) -> PuiseuxUnit:
    """Product in the unit group; precision is the minimum of the inputs'."""
    d = lcm(u.den, v.den)
    _check_den(d, den_cap)
    cu, pu = _on_grid(u, d)
    cv, pv = _on_grid(v, d)
    body = series.mul(F2Series(cu, pu), F2Series(cv, pv))
    return PuiseuxUnit(d, body)


def unit_inv(u: PuiseuxUnit) -> PuiseuxUnit:
    """Inverse at fixed grid and precision."""
    return PuiseuxUnit(u.den, series.inv(u.body))


def unit_sqrt(u: PuiseuxUnit, *,
              den_cap: int | None = DEFAULT_DEN_CAP) -> PuiseuxUnit:
    """The square root: same coefficients on a twice-finer grid.

    Always defined; the precision halves.
    """
    d = 2 * u.den
    _check_den(d, den_cap)
    return PuiseuxUnit(d, u.body)


def unit_pow(u: PuiseuxUnit, e: int) -> PuiseuxUnit:
    """u**e for any integer e; e = 0 gives 1 at the same precision."""
    body = u.body
    if e < 0:
        body = series.inv(body)
        e = -e
    return PuiseuxUnit(u.den, series.pow_int(body, e))


def unit_root(u: PuiseuxUnit, k: int, *,
              den_cap: int | None = DEFAULT_DEN_CAP) -> PuiseuxUnit:
    """The unique k-th root with residue 1, for k >= 1.

    The odd part of k lifts at full precision; each factor of 2 halves
    the precision, so the result is known modulo x**(aprec / 2**s).
    """
    if k < 1:
        raise ValueError(f"root index must be >= 1, got {k}")
    s = 0
    while k % 2 == 0:
        k //= 2
        s += 1
    r = PuiseuxUnit(u.den, series.kth_root_odd(u.body, k))
    for _ in range(s):
        r = unit_sqrt(r, den_cap=den_cap)
    return r


def scalar_mul_unit(r: RationalLike, u: PuiseuxUnit, *,
                    den_cap: int | None = DEFAULT_DEN_CAP) -> PuiseuxUnit:
    """The scalar action r . u := u**r = (u**num)**(1/den)."""
    r = Fraction(r)
    return unit_root(unit_pow(u, r.numerator), r.denominator,
                     den_cap=den_cap)


@dataclass(frozen=True, eq=False)
class L0Element:
    """x**val times a residue-1 unit; the canonical factored form."""

    val: Rational
    unit: PuiseuxUnit

    def __post_init__(self):
        object.__setattr__(self, "val", Fraction(self.val))

    @classmethod
    def one(cls, prec: int = 1) -> "L0Element":
        return cls(Fraction(0), PuiseuxUnit.one(prec))

    @property
    def aprec(self) -> Rational:
        return self.unit.aprec

    def __eq__(self, other):
        if not isinstance(other, L0Element):
            return NotImplemented
        return elements_agree(self, other)

    __hash__ = None

    def __repr__(self):
        return f"L0Element(x^({self.val}) * {self.unit!r})"


def elements_agree(a: L0Element, b: L0Element) -> bool:
    """Exact valuation match plus unit agreement at the common precision."""
    return a.val == b.val and units_agree(a.unit, b.unit)


def compose(val: RationalLike, unit: PuiseuxUnit) -> L0Element:
    """Pair a rational valuation with a unit; inverse of decompose."""
    return L0Element(Fraction(val), unit)


def decompose(a: L0Element) -> tuple[Rational, PuiseuxUnit]:
    """The (valuation, unit) coordinates of an element."""
    return a.val, a.unit


def decompose_raw(exponents: Iterable[RationalLike], aprec: RationalLike, *,
                  den_cap: int | None = DEFAULT_DEN_CAP) -> L0Element:
    """Factor a raw series sum(x**e) + O(x**aprec) as x**val * unit.

    Exponents may be negative and repeat (coefficients are mod 2); the
    least surviving exponent becomes the valuation and is divided out.
    """
    aprec = Fraction(aprec)
    support: set[Rational] = set()
    for e in exponents:
        e = Fraction(e)
        if e >= aprec:
            raise ValueError(
                f"term x^({e}) lies at or beyond the precision O(x^({aprec}))")
        support.symmetric_difference_update({e})
    if not support:
        raise Indistinguishable(
            "all coefficients within precision are zero")
    val = min(support)
    rel = [e - val for e in support]
    rel_prec = aprec - val
    d = 1
    for e in rel:
        d = lcm(d, e.denominator)
    d = lcm(d, rel_prec.denominator)
    _check_den(d, den_cap)
    bits = 0
    for e in rel:
        bits |= 1 << (e.numerator * (d // e.denominator))
    prec = rel_prec.numerator * (d // rel_prec.denominator)
    return L0Element(val, PuiseuxUnit(d, F2Series(bits, prec)))


def element_mul(a: L0Element, b: L0Element, *,
                den_cap: int | None = DEFAULT_DEN_CAP) -> L0Element:
    """Multiply: valuations add exactly, units multiply."""
    return L0Element(a.val + b.val,
                     unit_mul(a.unit, b.unit, den_cap=den_cap))


def element_inv(a: L0Element) -> L0Element:
    """Inverse: negate the valuation, invert the unit."""
    return L0Element(-a.val, unit_inv(a.unit))


def element_pow(a: L0Element, e: int) -> L0Element:
    """a**e for any integer e."""
    return L0Element(a.val * e, unit_pow(a.unit, e))


def element_scalar_mul(r: RationalLike, a: L0Element, *,
                       den_cap: int | None = DEFAULT_DEN_CAP) -> L0Element:
    """The scalar action on the product group, componentwise."""
    r = Fraction(r)
    return L0Element(r * a.val,
                     scalar_mul_unit(r, a.unit, den_cap=den_cap))


def element_root(a: L0Element, k: int, *,
                 den_cap: int | None = DEFAULT_DEN_CAP) -> L0Element:
    """The unique k-th root whose unit part has residue 1."""
    if k < 1:
        raise ValueError(f"root index must be >= 1, got {k}")
    return element_scalar_mul(Fraction(1, k), a, den_cap=den_cap)
