"""Cochain-level cohomology operations.

Cup products use the front-face/back-face (Alexander-Whitney) formula on
the fixed vertex order.  Cup-i products follow Steenrod's overlapping-block
formula over F_2, and squares are defined by Sq^k(x) = x cup_{p-k} x in
degree p.  The Bockstein lifts values to [0, m) and divides the integer
coboundary by m, landing in integral cochains.
"""

from __future__ import annotations

from itertools import combinations

from .simplicial import Cochain, CohomologyClass


def cup(a: Cochain, b: Cochain) -> Cochain:
    """Front-face/back-face cup product of a (deg p) and b (deg q)."""
    if a.complex != b.complex or a.modulus != b.modulus:
        raise ValueError("cup product needs a common complex and modulus")
    x = a.complex
    p, q = a.degree, b.degree
    out = []
    for s in x.simplices(p + q):
        front = s[: p + 1]
        back = s[p:]
        out.append(a.value_on(front) * b.value_on(back))
    return Cochain(x, p + q, a.modulus, tuple(out))


def cup_i(i: int, a: Cochain, b: Cochain) -> Cochain:
    """Steenrod cup-i product over F_2; cup_0 is the ordinary cup product.

    On a simplex [v_0..v_m] the value is the sum over cut sequences
    j_0 < ... < j_i of a(even blocks) * b(odd blocks), where consecutive
    blocks share their cut vertex.
    """
    if a.modulus != 2 or b.modulus != 2:
        raise ValueError("cup_i products are defined over Z/2 only")
    if a.complex != b.complex:
        raise ValueError("cup_i needs a common complex")
    if i < 0:
        raise ValueError("cup_i index must be >= 0")
    x = a.complex
    p, q = a.degree, b.degree
    deg = p + q - i
    if deg < 0:
        raise ValueError("cup_i target degree is negative")
    if deg > x.dim:
        return Cochain.zero(x, deg, 2)
    m = deg
    out = []
    for s in x.simplices(deg):
        acc = 0
        for cuts in combinations(range(m + 1), i + 1):
            blocks = []
            prev = 0
            for c in cuts:
                blocks.append(s[prev : c + 1])
                prev = c
            blocks.append(s[prev : m + 1])
            even = tuple(v for k in range(0, len(blocks), 2) for v in blocks[k])
            odd = tuple(v for k in range(1, len(blocks), 2) for v in blocks[k])
            if len(even) != p + 1 or len(odd) != q + 1:
                continue
            acc += a.value_on(even) * b.value_on(odd)
        out.append(acc & 1)
    return Cochain(x, deg, 2, tuple(out))


def sq(k: int, x: CohomologyClass) -> CohomologyClass:
    """Steenrod square Sq^k via the self cup-(p-k) product; zero for k > p."""
    if x.modulus != 2:
        raise ValueError("Steenrod squares act on mod-2 classes")
    if k < 0:
        raise ValueError("Sq^k needs k >= 0")
    p = x.degree
    if k > p:
        return CohomologyClass(Cochain.zero(x.complex, p + k, 2))
    return CohomologyClass(cup_i(p - k, x.cochain, x.cochain))


def reduce_mod(x: Cochain, n: int) -> Cochain:
    """Coefficient reduction Z -> Z/n or Z/m -> Z/n for n | m."""
    if n <= 0:
        raise ValueError("target modulus must be positive")
    if x.modulus and x.modulus % n:
        raise ValueError(f"{n} does not divide the source modulus {x.modulus}")
    return Cochain(x.complex, x.degree, n, tuple(v % n for v in x.values))


def bockstein(b: CohomologyClass) -> CohomologyClass:
    """Integral Bockstein of a mod-m class, for 0 -> Z -> Z -> Z/m -> 0.

    The representative lifts values to [0, m); the integer coboundary of the
    lift is divisible by m and the quotient is the output cocycle.  Its
    class is independent of the lift.
    """
    m = b.modulus
    if m <= 0:
        raise ValueError("bockstein needs a finite modulus")
    lift = Cochain(b.complex, b.degree, 0, b.cochain.values)
    d = lift.coboundary()
    if any(v % m for v in d.values):
        raise ValueError("input is not a mod-m cocycle")
    return CohomologyClass(
        Cochain(b.complex, b.degree + 1, 0, tuple(v // m for v in d.values))
    )


def sq1_via_bockstein(b: CohomologyClass) -> CohomologyClass:
    """Sq^1 computed as reduction mod 2 of the integral Bockstein."""
    if b.modulus != 2:
        raise ValueError("expects a mod-2 class")
    return CohomologyClass(reduce_mod(bockstein(b).cochain, 2))
