"""Central binomial coefficients, Catalan numbers, and friends mod prime powers.

Terms divisible by p are kept exact as p**e times a unit, so that sums mod
p**2 or p**3 receive the right contribution from k where p | binom(2k, k).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .modarith import PrimePower, batch_inv, inv_mod

_BLOCK = 512


class ValuedUnit(NamedTuple):
    """p**e times a unit u mod p**a; gcd(u, p) = 1."""

    e: int
    u: int

    def lift(self, p: int, a: int) -> int:
        """The represented value mod p**a (0 once e >= a)."""
        if self.e >= a:
            return 0
        return p**self.e * self.u % p**a


def _vp_unit(n: int, p: int, q: int) -> tuple[int, int]:
    """p-adic valuation of n and the cofactor n / p**e reduced mod q."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n % q


def _ratio_stream(
    pp: PrimePower, kmax: int, den_offset: int
) -> Iterator[ValuedUnit]:
    """Products of 2*(2k+1) / (k + den_offset), valuation-tracked, from 1.

    den_offset = 1 gives binom(2k, k); den_offset = 2 gives Catalan numbers.
    """
    p, a, q = pp.p, pp.a, pp.q
    e, u = 0, 1
    yield ValuedUnit(0, 1)
    k = 0
    while k < kmax:
        hi = min(k + _BLOCK, kmax)
        den_vals, den_units = [], []
        for j in range(k, hi):
            de, du = _vp_unit(j + den_offset, p, q)
            den_vals.append(de)
            den_units.append(du)
        invs = batch_inv(den_units, q)
        for i, j in enumerate(range(k, hi)):
            ne, nu = _vp_unit(2 * j + 1, p, q)
            e += ne - den_vals[i]
            u = u * (2 * nu % q) % q * invs[i] % q
            yield ValuedUnit(a, 1) if e >= a else ValuedUnit(e, u)
        k = hi


def central_binom_stream(pp: PrimePower, kmax: int) -> Iterator[ValuedUnit]:
    """binom(2k, k) mod p**a as ValuedUnits, k = 0..kmax."""
    return _ratio_stream(pp, kmax, 1)


def catalan_stream(pp: PrimePower, kmax: int) -> Iterator[ValuedUnit]:
    """Catalan numbers C_k = binom(2k, k)/(k+1) mod p**a, k = 0..kmax."""
    return _ratio_stream(pp, kmax, 2)


def factorial_vp(n: int, p: int, a: int) -> ValuedUnit:
    """n! as p**e times a unit mod p**a.

    Uses n! = p**(n//p) * (n//p)! * prod(i <= n, p does not divide i).
    """
    if a > 3:
        raise ValueError("prime-power factorials are supported for a <= 3 only")
    q = p**a
    e, u = 0, 1
    while n > 1:
        e += n // p
        for i in range(2, n + 1):
            if i % p:
                u = u * i % q
        n //= p
    return ValuedUnit(e, u)


def binom_vp(n: int, k: int, p: int, a: int) -> ValuedUnit:
    """binom(n, k) as p**e times a unit mod p**a; e >= 0 by Kummer's theorem."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    q = p**a
    en, un = factorial_vp(n, p, a)
    ek, uk = factorial_vp(k, p, a)
    em, um = factorial_vp(n - k, p, a)
    e = en - ek - em
    if e < 0:
        raise AssertionError("negative binomial valuation")
    return ValuedUnit(e, un * inv_mod(uk * um % q, q) % q)


@dataclass(frozen=True, slots=True)
class FactorialTable:
    """Factorials 0!..(p-1)! and their inverses mod p, built once per prime."""

    p: int
    fact: tuple[int, ...]
    invfact: tuple[int, ...]

    @classmethod
    def build(cls, p: int) -> "FactorialTable":
        fact = [1] * p
        for i in range(1, p):
            fact[i] = fact[i - 1] * i % p
        invfact = [1] * p
        invfact[p - 1] = inv_mod(fact[p - 1], p)
        for i in range(p - 1, 0, -1):
            invfact[i - 1] = invfact[i] * i % p
        return cls(p, tuple(fact), tuple(invfact))

    def binom(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            return 0
        return self.fact[n] * self.invfact[k] % self.p * self.invfact[n - k] % self.p


_table_cache: dict[int, FactorialTable] = {}


def _table_for(p: int) -> FactorialTable:
    # keep at most one table alive; sweeps visit primes one at a time
    if p not in _table_cache:
        _table_cache.clear()
        _table_cache[p] = FactorialTable.build(p)
    return _table_cache[p]


def binom_mod_p_lucas(n: int, k: int, p: int, table: FactorialTable | None = None) -> int:
    """binom(n, k) mod p as the digit-wise product of Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    if table is None:
        table = _table_for(p)
    out = 1
    while n or k:
        out = out * table.binom(n % p, k % p) % p
        if out == 0:
            return 0
        n //= p
        k //= p
    return out


def half_binom_stream(pp: PrimePower, kmax: int) -> Iterator[int]:
    """binom((p**a - 1)/2, k) mod p for k = 0..kmax.

    Random access through Lucas' theorem; the falling-factor recurrence is
    unusable here because denominators hit multiples of p.
    """
    if kmax > pp.q - 1:
        raise ValueError(f"kmax={kmax} exceeds p**a - 1 = {pp.q - 1}")
    n = (pp.q - 1) // 2
    table = _table_for(pp.p)
    for k in range(kmax + 1):
        yield binom_mod_p_lucas(n, k, pp.p, table)


def binom_pm1_stream(p: int, a: int = 2) -> Iterator[int]:
    """binom(p-1, k) mod p**a for k = 0..p-1."""
    q = p**a
    invs = batch_inv(list(range(1, p)), q) if p > 1 else []
    b = 1
    yield b
    for k in range(p - 1):
        b = b * (p - 1 - k) % q * invs[k] % q
        yield b
