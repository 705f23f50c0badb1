"""Census of finite fields whose multiplicative group is a linear space.

The group of nonzero elements of the q-element field is cyclic of
order q - 1, and a cyclic group is a linear space exactly when its
order is 1 or prime.  For even q that means q - 1 is a Mersenne prime;
on the odd side only q = 3 survives.  The scan confronts the
closed-form rule with a brute-force check of element orders.
"""

from f2puiseux import (PrimePower, elementary_abelian_oracle,
                       linear_space_verdict, mersenne_exponent,
                       prime_power_scan)

print("prime powers up to 300:")
for pp, verdict, oracle in prime_power_scan(300):
    if verdict.is_space:
        scalar = "any field" if verdict.scalar_order is None else \
            f"F{verdict.scalar_order}"
        print(f"  q = {pp.q:>4}  yes, dimension {verdict.dim} over {scalar}"
              f"   (oracle agrees: {verdict == oracle})")

# The Mersenne ladder drives the even side of the census.
found = [r for r in range(2, 21) if mersenne_exponent((1 << r) - 1)]
print("\nMersenne exponents among 2^r - 1 for r <= 20:", found)

# 2047 looks the part but factors; the census skips q = 2048.
print("2047 factors as 23 * 89; mersenne_exponent(2047) ->",
      mersenne_exponent(2047))

# The 9-element field fails: its group Z/8 holds an element of order 2
# (and one of order 8), so it cannot be a vector space over anything.
print("\nq = 9:", linear_space_verdict(PrimePower(3, 2)),
      "| oracle:", elementary_abelian_oracle(PrimePower(3, 2)))
