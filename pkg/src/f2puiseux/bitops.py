"""Bit-level kernel for polynomials over GF(2) packed into Python ints.

A polynomial c_0 + c_1 t + ... + c_n t^n is stored as the integer
sum(c_j << j): bit j is the coefficient of t^j.  Python ints are
word-packed little-endian internally, so XOR, shifts and masks act on
whole words at C speed; this module only adds the operations ints do
not provide natively.

The multiplication contract is sub-quadratic in the bit length.  Large
products are computed by embedding each bit into a guard field of 8*k
bits and using native integer multiplication (Karatsuba inside
CPython): column sums of a carry-less product are bounded by the
shorter operand's length, so with 2**(8k) above that bound no carry
crosses a field boundary and the GF(2) coefficient is the parity of
the field.  Spreading and gathering are table- and string-based, all
linear time (CPython converts to and from power-of-two bases in
linear time).
"""

from __future__ import annotations

_EMBED_CUTOFF = 512  # below this, shift/xor schoolbook wins on constants

# byte value -> b"0"/b"1" ASCII digit of its low bit
_PARITY_ASCII = bytes(48 + (v & 1) for v in range(256))

_SPREAD_TABLES: dict[int, list[bytes]] = {}


def _spread_table(k: int) -> list[bytes]:
    tbl = _SPREAD_TABLES.get(k)
    if tbl is None:
        tbl = []
        for v in range(256):
            chunk = bytearray(8 * k)
            for i in range(8):
                chunk[i * k] = (v >> i) & 1
            tbl.append(bytes(chunk))
        _SPREAD_TABLES[k] = tbl
    return tbl


def _embed(a: int, k: int) -> int:
    """Place bit j of a at bit position 8*k*j."""
    tbl = _spread_table(k)
    ab = a.to_bytes((a.bit_length() + 7) // 8, "little")
    return int.from_bytes(b"".join(map(tbl.__getitem__, ab)), "little")


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-packed GF(2) polynomials."""
    if a == 0 or b == 0:
        return 0
    la, lb = a.bit_length(), b.bit_length()
    if min(la, lb) <= _EMBED_CUTOFF:
        if a.bit_count() > b.bit_count():
            a, b = b, a
        acc = 0
        while a:
            low = a & -a
            acc ^= b << (low.bit_length() - 1)
            a ^= low
        return acc
    # guard fields of 8k bits hold the exact column sums
    k = (min(la, lb).bit_length() + 7) // 8
    prod = _embed(a, k) * _embed(b, k)
    lows = prod.to_bytes(k * (la + lb), "little")[0::k]
    return int(lows.translate(_PARITY_ASCII)[::-1], 2)


def trunc_bits(x: int, n: int) -> int:
    """x modulo 2**n, materializing a mask only when bits exceed n.

    Keeps sparse series with very large precision indices cheap: the
    shift probe is O(1) and any mask built is no larger than x itself.
    """
    return x if x >> n == 0 else x & ((1 << n) - 1)


def bit_indices(x: int):
    """Ascending indices of the set bits of x; cost scales with them."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def spread(x: int, m: int) -> int:
    """Move bit j to bit m*j (re-grid onto an m-times finer exponent grid)."""
    if m == 1 or x == 0:
        return x
    return int(("0" * (m - 1)).join(bin(x)[2:]), 2)


def compress(x: int, m: int) -> int:
    """Move bit m*j to bit j, discarding bits off the stride.

    Inverse of spread on its image; callers needing exactness must
    check the support first (or round-trip, as _on_stride does).
    """
    if m == 1 or x == 0:
        return x
    return int(bin(x)[:1:-1][0::m][::-1], 2)


def square(x: int) -> int:
    """Square in GF(2)[t]: the Frobenius map, a pure bit spread."""
    return spread(x, 2)


def even_part(x: int) -> tuple[int, bool]:
    """Gather bits at even positions; also report whether odd bits exist.

    Returns (y, clean) with bit j of y = bit 2j of x and clean true iff
    every odd-position bit of x is zero.
    """
    if x == 0:
        return 0, True
    rev = bin(x)[:1:-1]  # LSB-first digits
    odd = "1" in rev[1::2]
    return int(rev[0::2][::-1], 2), not odd


def _on_stride(x: int, m: int) -> bool:
    """True iff every set bit of x sits at a multiple of m."""
    return spread(compress(x, m), m) == x


def support_gcd(x: int, seed: int) -> int:
    """Largest divisor of seed dividing every set-bit index of x.

    Tested one prime-power factor of seed at a time with linear-time
    stride checks, so the cost does not grow with the number of set
    bits.  Bit 0 sits on every stride; x = 0 imposes no constraint.
    """
    if x == 0 or seed == 1:
        return seed
    d = 1
    rest = seed
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            while e > 0 and not _on_stride(x, p ** e):
                e -= 1
            d *= p ** e
        p += 1 if p == 2 else 2
    if rest > 1 and _on_stride(x, rest):
        d *= rest
    return d
