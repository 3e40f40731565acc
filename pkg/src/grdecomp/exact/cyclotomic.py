"""Cyclotomic polynomials with integer coefficients."""
from __future__ import annotations

from functools import lru_cache


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_coeffs(e: int) -> tuple[int, ...]:
    """Coefficients of the e-th cyclotomic polynomial, constant term first."""
    if e < 1:
        raise ValueError(f"cyclotomic index must be positive, got {e}")
    # x^e - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (e - 1) + [1]
    for d in _divisors(e)[:-1]:
        num = _exact_div_monic(num, list(cyclotomic_coeffs(d)))
    return tuple(num)


def _exact_div_monic(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a[: len(b) - 1]):
        raise ArithmeticError("cyclotomic division left a remainder")
    return q


def euler_phi(e: int) -> int:
    return len(cyclotomic_coeffs(e)) - 1


def cyclotomic_poly(e: int):
    """The e-th cyclotomic polynomial as an element of Q[x]."""
    from .rings import QQ, PolynomialRing

    ring = PolynomialRing(QQ, ("x",))
    return ring.from_exponent_map({(i,): c for i, c in enumerate(cyclotomic_coeffs(e)) if c})
