"""Square roots mod p and p**2, and x**2 + D*y**2 representations of primes."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .modarith import inv_mod, jacobi


class NonResidue(ValueError):
    """Raised when a quadratic non-residue is handed to a square-root routine."""


class Unsatisfiable(ValueError):
    """No sign choice makes the requested normalization hold."""


def sqrt_mod_p(a: int, p: int) -> int:
    """Canonical root r = min(r, p - r) with r*r = a (mod p); 0 maps to 0.

    Raises NonResidue when (a/p) = -1.
    """
    a %= p
    if a == 0:
        return 0
    if jacobi(a, p) != 1:
        raise NonResidue(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # Tonelli-Shanks: write p - 1 = s * 2**e with s odd.
    s, e = p - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    n = 2
    while jacobi(n, p) != -1:
        n += 1
    x = pow(a, (s + 1) // 2, p)
    b = pow(a, s, p)
    g = pow(n, s, p)
    r = e
    while b != 1:
        t, m = b, 0
        while t != 1:
            t = t * t % p
            m += 1
        gs = pow(g, 1 << (r - m - 1), p)
        g = gs * gs % p
        x = x * gs % p
        b = b * g % p
        r = m
    return min(x, p - x)


def sqrt_mod_p2(a: int, p: int) -> int:
    """Hensel lift of sqrt_mod_p to the modulus p**2, canonical min root."""
    q = p * p
    a %= q
    if a % p == 0:
        raise ValueError(f"{a} is divisible by {p}; lift needs a unit")
    r = sqrt_mod_p(a, p)
    r = (r - (r * r - a) * inv_mod(2 * r, q)) % q
    return min(r, q - r)


def cornacchia(p: int, d: int) -> tuple[int, int] | None:
    """Positive (x, y) with x*x + d*y*y = p, or None when p is not representable."""
    if p % d == 0:
        raise ValueError(f"p = {p} must not divide the form coefficient {d}")
    if jacobi(-d % p, p) != 1:
        return None
    r = sqrt_mod_p(-d % p, p)
    if 2 * r < p:
        r = p - r
    a, b = p, r
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    rem = p - b * b
    if rem % d != 0:
        return None
    y2, y = rem // d, isqrt(rem // d)
    if y * y != y2 or y == 0:
        return None
    return b, y


# Sign-normalization conditions used by the conjecture right-hand sides.
# Each maps a coordinate to the residues it must land in.
NORMALIZATIONS = {
    "x-1,3-mod-8": ("x", 8, (1, 3)),
    "y-1-mod-4": ("y", 4, (1,)),
    "y-1,3-mod-8": ("y", 8, (1, 3)),
    "x-1-mod-3": ("x", 3, (1,)),
}


@dataclass(frozen=True, slots=True)
class QuadRepr:
    """A representation p = x**2 + D*y**2 with recorded sign conditions.

    x and y are signed integers; flipping a sign preserves the form, so the
    conditions pick out one representative.
    """

    p: int
    D: int
    x: int
    y: int
    normalization: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.x * self.x + self.D * self.y * self.y != self.p:
            raise ValueError(
                f"({self.x})**2 + {self.D}*({self.y})**2 != {self.p}"
            )


def normalize_repr(p: int, D: int, x: int, y: int, conditions: tuple[str, ...]) -> QuadRepr:
    """Flip signs of x and/or y independently so every condition holds."""
    coords = {"x": x, "y": y}
    for name in conditions:
        coord, mod, targets = NORMALIZATIONS[name]
        v = coords[coord]
        if v % mod in targets:
            continue
        if (-v) % mod in targets:
            coords[coord] = -v
            continue
        raise Unsatisfiable(f"neither sign of {coord}={v} satisfies {name}")
    return QuadRepr(p, D, coords["x"], coords["y"], tuple(conditions))


def represent(p: int, D: int, conditions: tuple[str, ...]) -> QuadRepr | None:
    """Cornacchia plus normalization in one step; None when not representable."""
    sol = cornacchia(p, D)
    if sol is None:
        return None
    return normalize_repr(p, D, sol[0], sol[1], conditions)
