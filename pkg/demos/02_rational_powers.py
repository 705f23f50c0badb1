"""Raising series to rational powers.

Odd roots never leave the current exponent grid; square roots move to
a twice-finer grid by reinterpreting the same bits.  Composing the two
gives u**r for every rational r, which is what makes the unit group a
vector space over the rationals with 1 as the zero vector.
"""

from fractions import Fraction as Q

from f2puiseux import (format_unit, parse_unit, scalar_mul_unit, unit_mul,
                       unit_pow, unit_root, unit_sqrt, units_agree)

u = parse_unit("1 + x^(1) + O(x^(6))")
print("u            =", format_unit(u))

# The square root of 1 + x is 1 + x^(1/2): same coefficients, finer grid.
print("sqrt(u)      =", format_unit(unit_sqrt(u)))

# A 6th root factors as a cube root followed by one square root; each
# square root halves the usable precision.
print("u^(1/6)      =", format_unit(unit_root(u, 6)))

# The scalar action: (2/3).u means the cube root of u squared.
two_thirds = scalar_mul_unit(Q(2, 3), u)
print("(2/3).u      =", format_unit(two_thirds))
print("((2/3).u)^3  =", format_unit(unit_pow(two_thirds, 3)),
      " equals u^2 =", format_unit(unit_pow(u, 2)))

# Scalars distribute the way vector-space axioms demand.
v = parse_unit("1 + x^(1/2) + x^(2) + O(x^(6))")
r, s = Q(3, 4), Q(-1, 2)
lhs = scalar_mul_unit(r + s, v)
rhs = unit_mul(scalar_mul_unit(r, v), scalar_mul_unit(s, v))
print("(r+s).v == (r.v)(s.v):", units_agree(lhs, rhs))

lhs = scalar_mul_unit(r, unit_mul(u, v))
rhs = unit_mul(scalar_mul_unit(r, u), scalar_mul_unit(r, v))
print("r.(uv) == (r.u)(r.v):  ", units_agree(lhs, rhs))

# The zero vector of this space is the constant series 1.
print("0.v          =", format_unit(scalar_mul_unit(0, v)))
