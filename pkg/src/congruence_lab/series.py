"""Exact integer q-series: Euler products and the weight-3 eta-product coefficients."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class QSeries:
    """A truncated power series with exact integer coefficients."""

    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]


def euler_product(step: int, order: int) -> QSeries:
    """prod_{n>=1} (1 - q**(step*n)) to the given order, via pentagonal numbers."""
    if step < 1:
        raise ValueError("step must be >= 1")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    j = 1
    while True:
        g1 = step * j * (3 * j - 1) // 2
        g2 = step * j * (3 * j + 1) // 2
        if g1 > order and g2 > order:
            break
        sign = -1 if j % 2 else 1
        if g1 <= order:
            coeffs[g1] += sign
        if g2 <= order:
            coeffs[g2] += sign
        j += 1
    return QSeries(tuple(coeffs))


def series_mul(s: QSeries, t: QSeries) -> QSeries:
    """Truncated convolution; truncation orders must match."""
    if s.order != t.order:
        raise ValueError("truncation orders differ")
    order = s.order
    out = [0] * (order + 1)
    for i, a in enumerate(s.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(t.coeffs[: order + 1 - i]):
            if b:
                out[i + j] += a * b
    return QSeries(tuple(out))


def series_pow(s: QSeries, e: int) -> QSeries:
    """s**e by repeated squaring."""
    if e < 1:
        raise ValueError("exponent must be >= 1")
    result = None
    base = s
    while e:
        if e & 1:
            result = base if result is None else series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def a_coeffs(order: int) -> list[int]:
    """Coefficients a(1..order) of q * prod(1 - q**(4n))**6, padded so a[n] = a(n).

    a(n) vanishes unless n = 1 (mod 4); the returned list has length order + 1
    with a dummy zero at index 0.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    eta4 = euler_product(4, order - 1)
    sixth = series_pow(eta4, 6)
    return [0] + list(sixth.coeffs)
