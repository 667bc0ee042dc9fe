"""Lucas sequences u_n(A, B), v_n(A, B) mod q and their half-index closed forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .modarith import inv_mod, jacobi


class DeltaDividesP(ValueError):
    """p divides delta, so the u-component cannot be recovered from the closed form."""


class Inapplicable(ValueError):
    """The closed form's hypotheses do not hold for these inputs."""


@dataclass(frozen=True, slots=True)
class LucasParams:
    """Recurrence coefficients: x_{n+1} = A*x_n - B*x_{n-1}."""

    A: int
    B: int

    @property
    def disc(self) -> int:
        """Discriminant A**2 - 4B, kept as an exact integer for Jacobi symbols."""
        return self.A * self.A - 4 * self.B


FIBONACCI = LucasParams(1, -1)  # u -> F_n, v -> L_n
PELL = LucasParams(2, -1)  # u -> P_n, v -> Q_n
SQUARE4 = LucasParams(4, 1)  # u -> S_n, v -> T_n
FIB_EVEN = LucasParams(3, 1)  # u_k -> F_{2k}, v_k -> L_{2k}
CHAR3 = LucasParams(-1, 1)  # u_k -> (k/3)


def _u_pair(n: int, A: int, B: int, q: int) -> tuple[int, int]:
    """(u_n, u_{n+1}) mod q by fast doubling, no division by 2."""
    if n == 0:
        return 0, 1 % q
    um, um1 = _u_pair(n >> 1, A, B, q)
    even = um * (2 * um1 - A * um) % q  # u_{2m}
    odd = (um1 * um1 - B * um * um) % q  # u_{2m+1}
    if n & 1:
        return odd, (A * odd - B * even) % q
    return even, odd


def lucas_pair(n: int, params: LucasParams, q: int) -> tuple[int, int]:
    """(u_n, v_n) mod q; (u_0, v_0) = (0, 2)."""
    if n < 0:
        raise ValueError("index must be non-negative")
    A, B = params.A % q, params.B % q
    un, un1 = _u_pair(n, A, B, q)
    return un, (2 * un1 - A * un) % q


def lucas_stream(params: LucasParams, q: int) -> Iterator[tuple[int, int]]:
    """Yields (u_k, v_k) mod q for k = 0, 1, 2, ... with constant work per step."""
    A, B = params.A % q, params.B % q
    u, u1 = 0, 1 % q
    v, v1 = 2 % q, A
    while True:
        yield u, v
        u, u1 = u1, (A * u1 - B * u) % q
        v, v1 = v1, (A * v1 - B * v) % q


def delta_reduction(n: int, params: LucasParams, p: int, delta: int) -> tuple[int, int]:
    """(u_n, v_n) mod p from the closed forms in terms of (A +- delta)/2.

    Requires delta**2 = disc (mod p).  Raises DeltaDividesP when p | delta,
    since then only delta*u_n (not u_n itself) is determined.
    """
    if (delta * delta - params.disc) % p != 0:
        raise ValueError(f"delta={delta} does not square to the discriminant mod {p}")
    if delta % p == 0:
        raise DeltaDividesP(f"p={p} divides delta; u_n is not recoverable")
    inv2 = inv_mod(2, p)
    alpha = (params.A + delta) * inv2 % p
    beta = (params.A - delta) * inv2 % p
    an, bn = pow(alpha, n, p), pow(beta, n, p)
    u = (an - bn) * inv_mod(delta % p, p) % p
    v = (an + bn) % p
    return u, v


def half_index_values(params: LucasParams, p: int, b: int) -> tuple[int, int, int]:
    """(u_{(p-1)/2}, u_{(p+1)/2}, v_{(p-1)/2}) mod p, given b with b**2 = B (mod p).

    Branches on the Jacobi symbol of the discriminant; requires (B/p) = 1.
    """
    if jacobi(params.B, p) != 1:
        raise Inapplicable(f"(B/p) != 1 for B={params.B}, p={p}")
    if (b * b - params.B) % p != 0:
        raise ValueError(f"b={b} does not square to B={params.B} mod {p}")
    jd = jacobi(params.disc, p)
    if jd == 0:
        raise Inapplicable(f"p={p} divides the discriminant")
    s = jacobi(params.A - 2 * b, p)
    if jd == 1:
        return 0, s % p, 2 * s % p
    binv = inv_mod(b % p, p)
    return binv * s % p, 0, (-params.A % p) * binv % p * s % p


def fib_lucas_half(p: int) -> tuple[int, int, int, int]:
    """(F_{(p-e)/2}, F_{(p+e)/2}, L_{(p-e)/2}, L_{(p+e)/2}) mod p, e = (p/5).

    Case-split closed forms in powers of 5; p must differ from 2 and 5.
    """
    if p in (2, 5):
        raise Inapplicable("closed forms need p distinct from 2 and 5")
    sign = -1 if ((p + 5) // 10) % 2 else 1
    j5 = jacobi(5, p)
    if p % 4 == 1:
        root = pow(5, (p - 1) // 4, p)
        f_minus = 0
        f_plus = sign * j5 * root % p
        l_minus = 2 * sign * j5 * root % p
        l_plus = sign * root % p
    else:
        low = pow(5, (p - 3) // 4, p)
        f_minus = 2 * sign * j5 * low % p
        f_plus = sign * j5 * low % p
        l_minus = 0
        l_plus = sign * j5 * pow(5, (p + 1) // 4, p) % p
    return f_minus, f_plus, l_minus, l_plus


def char3(k: int) -> int:
    """The period-3 character (k/3): 0, 1, -1 for k = 0, 1, 2 (mod 3)."""
    return (0, 1, -1)[k % 3]
