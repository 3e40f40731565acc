"""Univariate Laurent polynomials with arbitrary exact coefficients.

Used for graded characters (variable ``t``), graded multiplicities
(``q``, plain ``int`` coefficients) and characteristic polynomials (``X``).
"""
from __future__ import annotations


class LaurentPoly:
    __slots__ = ("var", "coeffs")

    def __init__(self, var="q", coeffs=None):
        self.var = var
        self.coeffs = {int(k): c for k, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, var, exponent, coeff=1):
        return cls(var, {exponent: coeff})

    @classmethod
    def from_list(cls, var, coeffs, start=0):
        """Dense coefficients, lowest exponent first."""
        return cls(var, {start + i: c for i, c in enumerate(coeffs)})

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs.get(k, 0)

    def items(self):
        return sorted(self.coeffs.items())

    def exponents(self):
        return sorted(self.coeffs)

    @property
    def degree(self):
        return max(self.coeffs) if self.coeffs else None

    @property
    def low_degree(self):
        return min(self.coeffs) if self.coeffs else None

    def _check(self, other):
        if isinstance(other, LaurentPoly):
            if other.var != self.var and other.coeffs and self.coeffs:
                raise TypeError(f"cannot combine polynomials in {self.var} and {other.var}")
            return other
        return LaurentPoly(self.var, {0: other})

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return LaurentPoly(self.var, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.var, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                out[k] = out[k] + a * b if k in out else a * b
        return LaurentPoly(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of Laurent polynomials are not supported")
        result = LaurentPoly(self.var, {0: 1})
        for _ in range(n):
            result = result * self
        return result

    def shift(self, j):
        """Multiply by ``var**j``."""
        return LaurentPoly(self.var, {k + j: c for k, c in self.coeffs.items()})

    def map_coeffs(self, f):
        return LaurentPoly(self.var, {k: f(c) for k, c in self.coeffs.items()})

    def rename(self, var):
        return LaurentPoly(var, self.coeffs)

    def evaluate(self, x):
        total = 0
        for k, c in self.coeffs.items():
            total = total + c * (x ** k)
        return total

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.coeffs == other.coeffs and (self.var == other.var or not self.coeffs)
        if other == 0:
            return not self.coeffs
        return self.coeffs == {0: other}

    def __hash__(self):
        return hash((self.var, frozenset(self.coeffs.items())))

    def to_json(self):
        """``{"exponent": coefficient}`` with integer or string coefficients."""
        return {str(k): (c if isinstance(c, int) else str(c)) for k, c in self.items()}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        # characteristic polynomials read best from the top, Laurent series from the bottom
        for k, c in sorted(self.coeffs.items(), reverse=self.var == "X"):
            cs = str(c)
            if k == 0:
                mono = ""
            elif k == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{k}"
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            elif cs == "-1":
                body = "-" + mono
            elif any(ch in cs.lstrip("-") for ch in "+- /") :
                body = f"({cs})*{mono}"
            else:
                body = f"{cs}*{mono}"
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__
