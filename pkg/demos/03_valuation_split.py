"""Splitting elements into a rational valuation times a unit.

A nonzero truncated series with fractional exponents factors uniquely
as x^val * (1 + higher terms): the least exponent is divided out.
Multiplication then works componentwise, which is the product
decomposition the whole element group carries.
"""

from fractions import Fraction as Q

from f2puiseux import (compose, decompose, decompose_raw, element_mul,
                       element_scalar_mul, format_element, parse_element)

# Factoring a raw sum of powers: the parser does it on sight.
raw = parse_element("x^(1/2) + x^(1) + x^(3/2) + O(x^(2))")
print("factored:", format_element(raw))
val, unit = decompose(raw)
print("valuation:", val, "  unit precision:", unit.aprec)

# Negative valuations are fine; they stay in the valuation slot.
deep = decompose_raw([Q(-5, 3), Q(-4, 3)], Q(2))
print("negative case:", format_element(deep))

# compose is the exact inverse of decompose.
rebuilt = compose(val, unit)
print("compose(decompose(a)) == a:", rebuilt.val == raw.val
      and rebuilt.unit.body.coeffs == raw.unit.body.coeffs)

# Products split componentwise: valuations add, units multiply.
a = parse_element("x^(1/2) * 1 + x^(1) + O(x^(4))")
b = parse_element("x^(-1/3) * 1 + x^(1/2) + O(x^(4))")
ab = element_mul(a, b)
print("a * b =", format_element(ab))
print("valuations added:", ab.val == a.val + b.val)

# Scalars act on both coordinates at once.
scaled = element_scalar_mul(Q(3, 2), a)
print("(3/2).a =", format_element(scaled))
