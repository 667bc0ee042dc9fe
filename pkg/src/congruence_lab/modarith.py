"""Fixed-width modular arithmetic, Jacobi symbols, and prime generation."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Iterator

# Moduli are capped so that a product of two canonical residues fits in a
# 128-bit intermediate on any backend; Python ints never overflow, but the
# cap keeps the performance envelope explicit.
MAX_MODULUS = 1 << 40

_SIMPLE_SIEVE_LIMIT = 1 << 20
_SEGMENT = 1 << 16

# Deterministic Miller-Rabin witness set, valid for every n < 2**64.
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


class NotInvertible(ValueError):
    """Raised when gcd(a, q) > 1, so a has no inverse mod q."""


class EvenModulus(ValueError):
    """Jacobi symbols are only defined for odd moduli."""


@dataclass(frozen=True, slots=True)
class Residue:
    """An integer reduced to the canonical range [0, modulus)."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if self.modulus > MAX_MODULUS:
            raise ValueError(f"modulus {self.modulus} exceeds 2**40 cap")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True, slots=True)
class PrimePower:
    """An odd prime p together with an exponent a; q = p**a."""

    p: int
    a: int
    q: int = field(init=False)

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError(f"exponent must be >= 1, got {self.a}")
        if self.p == 2 or not is_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        q = self.p**self.a
        if q > MAX_MODULUS:
            raise ValueError(f"{self.p}**{self.a} exceeds 2**40 cap")
        object.__setattr__(self, "q", q)


def mod_pow(base: Residue, exp: int) -> Residue:
    """base**exp in the base's modulus, exp >= 0."""
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return Residue(pow(base.value, exp, base.modulus), base.modulus)


def mod_inv(a: Residue) -> Residue:
    """Multiplicative inverse; raises NotInvertible when gcd(a, q) > 1."""
    return Residue(inv_mod(a.value, a.modulus), a.modulus)


def inv_mod(a: int, q: int) -> int:
    """Inverse of a mod q as a plain int."""
    try:
        return pow(a, -1, q)
    except ValueError as exc:
        raise NotInvertible(f"{a} is not invertible mod {q}") from exc


def batch_inv(values: list[int], q: int) -> list[int]:
    """Inverses of all values mod q with a single extended-gcd call."""
    n = len(values)
    if n == 0:
        return []
    prefix = [0] * n
    acc = 1
    for i, v in enumerate(values):
        acc = acc * v % q
        prefix[i] = acc
    inv = inv_mod(acc, q)
    out = [0] * n
    for i in range(n - 1, 0, -1):
        out[i] = inv * prefix[i - 1] % q
        inv = inv * values[i] % q
    out[0] = inv
    return out


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1; equals the Legendre symbol for prime n."""
    if n < 1 or n % 2 == 0:
        raise EvenModulus(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def jacobi_pp(a: int, pp: PrimePower) -> int:
    """The symbol (a / p**a), i.e. jacobi(a, p) raised to the exponent."""
    j = jacobi(a, pp.p)
    return j if pp.a % 2 == 1 else j * j


def is_prime(n: int) -> bool:
    """Deterministic primality test for 64-bit inputs."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _sieve_upto(n: int) -> bytearray:
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            start = i * i
            sieve[start : n + 1 : i] = b"\x00" * ((n - start) // i + 1)
    return sieve


def primes_in(lo: int, hi: int) -> list[int]:
    """Ascending primes in [lo, hi]; segmented sieve above 2**20."""
    if lo > hi:
        raise ValueError(f"empty-range bounds must satisfy lo <= hi, got {lo} > {hi}")
    if hi < 2:
        return []
    lo = max(lo, 2)
    if hi <= _SIMPLE_SIEVE_LIMIT:
        sieve = _sieve_upto(hi)
        return [i for i in range(lo, hi + 1) if sieve[i]]
    return list(_segmented(lo, hi))


def _segmented(lo: int, hi: int) -> Iterator[int]:
    base_sieve = _sieve_upto(isqrt(hi))
    base = [i for i, flag in enumerate(base_sieve) if flag]
    for p in base:
        if lo <= p <= hi:
            yield p
    start = max(lo, base[-1] + 1 if base else 2)
    for seg_lo in range(start, hi + 1, _SEGMENT):
        seg_hi = min(seg_lo + _SEGMENT - 1, hi)
        seg = bytearray([1]) * (seg_hi - seg_lo + 1)
        for p in base:
            first = max(p * p, (seg_lo + p - 1) // p * p)
            if first > seg_hi:
                continue
            seg[first - seg_lo :: p] = b"\x00" * ((seg_hi - first) // p + 1)
        for i, flag in enumerate(seg):
            if flag:
                yield seg_lo + i
