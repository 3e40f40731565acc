"""Graded characters, fingerprints and the multiplicity solver.

An *evaluation word* is a tuple of algebra basis indices whose degrees sum
to 0; it names the degree-0 element ``b_{w0} b_{w1} ...``.  Single-letter
words over the degree-0 basis are the default everywhere.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import AlgebraMismatch, FieldMismatch, NegativeMultiplicity, NoSolution
from .exact import linalg
from .exact.laurent import LaurentPoly


def evaluation_words(alg, depth=1):
    """Words of length <= depth with total degree 0.

    The unit only appears as the one-letter word; longer words never
    contain it since it would be redundant.
    """
    words = [(m,) for m in alg.degree_zero()]
    others = [m for m in range(alg.dim) if m != alg.unit]
    for n in range(2, depth + 1):
        for w in product(others, repeat=n):
            if sum(alg.degrees[m] for m in w) == 0:
                words.append(w)
    return words


def word_label(alg, word):
    return "*".join(alg.basis[m] for m in word)


def _block(mat, idx):
    return [[mat[r][s] for s in idx] for r in idx]


class GradedCharacter:
    """``values[m]`` is the Laurent polynomial in ``t`` attached to ``b_m``."""

    def __init__(self, algebra, field, values):
        self.algebra = algebra
        self.field = field
        self.values = {m: v for m, v in values.items()}

    def __getitem__(self, m):
        return self.values.get(m, LaurentPoly("t"))

    def keys(self):
        return sorted(self.values)

    def _compatible(self, other):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("characters of different algebras")
        if self.field != other.field:
            raise FieldMismatch(f"characters over {self.field} and {other.field}")

    def __add__(self, other):
        self._compatible(other)
        keys = set(self.values) | set(other.values)
        return GradedCharacter(self.algebra, self.field, {m: self[m] + other[m] for m in keys})

    def __neg__(self):
        return GradedCharacter(self.algebra, self.field, {m: -v for m, v in self.values.items()})

    def __sub__(self, other):
        return self + (-other)

    def times(self, poly):
        """Multiply every value by a Laurent polynomial with integer coefficients."""
        f = self.field
        p = LaurentPoly("t", {k: f.from_int(c) for k, c in poly.coeffs.items()})
        return GradedCharacter(self.algebra, f, {m: (v * p).rename("t") for m, v in self.values.items()})

    def shift(self, j):
        return GradedCharacter(self.algebra, self.field, {m: v.shift(j) for m, v in self.values.items()})

    def at_one(self):
        """Values at ``t = 1``: the ordinary character on the degree-0 basis."""
        z = self.field.zero()
        return {m: sum((c for _, c in v.items()), z) for m, v in self.values.items()}

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return self.algebra == other.algebra and all(self[m] == other[m] for m in keys)

    def to_json(self):
        return {self.algebra.basis[m]: {str(k): str(c) for k, c in self[m].items()} for m in self.keys()}

    def __str__(self):
        return "\n".join(f"{self.algebra.basis[m]}: {self[m]}" for m in self.keys())


def graded_character(mod):
    """``b -> sum_i t^i trace(b on M_i)`` for every degree-0 basis element ``b``."""
    blocks = mod.blocks()
    values = {}
    for m in mod.algebra.degree_zero():
        a = mod.action[m]
        coeffs = {}
        for d, idx in blocks.items():
            tr = mod.field.zero()
            for r in idx:
                tr = tr + a[r][r]
            coeffs[d] = tr
        values[m] = LaurentPoly("t", coeffs)
    return GradedCharacter(mod.algebra, mod.field, values)


def ungraded_character(mod):
    """Traces of all basis elements (graded or ungraded module)."""
    return tuple(linalg.trace(a, mod.field) for a in mod.action)


def character_sort_key(chi):
    return tuple(c.sort_key() for c in chi)


class Fingerprint:
    """``values[word][i]`` is the characteristic polynomial of ``word`` on ``M_i``.

    Degrees with ``M_i = 0`` are absent (their polynomial is 1).
    """

    def __init__(self, algebra, field, values):
        self.algebra = algebra
        self.field = field
        self.values = {w: {i: p for i, p in v.items() if p.degree} for w, v in values.items()}

    def words(self):
        return sorted(self.values, key=lambda w: (len(w), w))

    def poly(self, word, degree):
        p = self.values.get(word, {}).get(degree)
        return p if p is not None else LaurentPoly("X", {0: self.field.one()})

    def degrees(self, word):
        return sorted(self.values.get(word, {}))

    def __mul__(self, other):
        """Pointwise product: the fingerprint of a direct sum."""
        _check_same(self, other)
        out = {}
        for w in set(self.values) | set(other.values):
            degs = set(self.values.get(w, {})) | set(other.values.get(w, {}))
            out[w] = {i: self.poly(w, i) * other.poly(w, i) for i in degs}
        return Fingerprint(self.algebra, self.field, out)

    def shift(self, j):
        return Fingerprint(
            self.algebra, self.field, {w: {i + j: p for i, p in v.items()} for w, v in self.values.items()}
        )

    def map_coefficients(self, f, field, algebra=None):
        """Apply a ring morphism to every coefficient (the map ``t_theta``)."""
        out = {w: {i: p.map_coeffs(f) for i, p in v.items()} for w, v in self.values.items()}
        return Fingerprint(algebra or self.algebra, field, out)

    def first_difference(self, other):
        """``None`` if equal, else ``(word, degree, mine, theirs)`` at the first mismatch."""
        for w in sorted(set(self.values) | set(other.values), key=lambda w: (len(w), w)):
            degs = sorted(set(self.values.get(w, {})) | set(other.values.get(w, {})))
            for i in degs:
                a, b = self.poly(w, i), other.poly(w, i)
                if a != b:
                    return w, i, a, b
        return None

    def __eq__(self, other):
        if not isinstance(other, Fingerprint):
            return NotImplemented
        return set(self.values) == set(other.values) and self.first_difference(other) is None

    def __hash__(self):
        return hash(
            tuple(
                (w, tuple(sorted(self.values[w].items(), key=lambda x: x[0])))
                for w in self.words()
            )
        )

    def to_json(self):
        return {
            word_label(self.algebra, w): {str(i): str(self.values[w][i]) for i in sorted(self.values[w])}
            for w in self.words()
        }

    def __str__(self):
        lines = []
        for w in self.words():
            parts = [f"deg {i}: {self.values[w][i]}" for i in sorted(self.values[w])]
            lines.append(f"{word_label(self.algebra, w)}: " + ("; ".join(parts) or "1"))
        return "\n".join(lines)


def fingerprint(mod, words=None, depth=1):
    """Per evaluation word and degree, the characteristic polynomial of its block."""
    if words is None:
        words = evaluation_words(mod.algebra, depth)
    blocks = mod.blocks()
    values = {}
    for w in words:
        mat = mod.word_matrix(w) if mod.dim else ()
        values[w] = {d: linalg.charpoly(_block(mat, idx), mod.field) for d, idx in blocks.items()}
    return Fingerprint(mod.algebra, mod.field, values)


def _check_same(f1, f2):
    if f1.algebra != f2.algebra:
        raise AlgebraMismatch("fingerprints of modules over different algebras")
    if f1.field != f2.field:
        raise FieldMismatch(f"fingerprints over {f1.field} and {f2.field}")


def fingerprint_equal(f1, f2):
    """Bit-exact comparison over every evaluation word and degree."""
    _check_same(f1, f2)
    if set(f1.values) != set(f2.values):
        raise ValueError("fingerprints were taken on different evaluation words")
    return f1.first_difference(f2) is None


def character_matrix(chars, shifts=(0,)):
    """Rows: ``chars[k]`` shifted by ``j``; columns: (basis element, t-degree)."""
    rows_data = [c.shift(j) for c in chars for j in shifts]
    cols = sorted({(m, k) for c in rows_data for m in c.keys() for k in c[m].exponents()})
    field = chars[0].field
    z = field.zero()
    rows = [[c[m][k] or z for (m, k) in cols] for c in rows_data]
    return rows, cols


def _as_multiplicity(x, field):
    """Integer value of a solution entry, or ``None`` if not an integer."""
    if field.characteristic:
        return int(x.data)
    q = x.data if not isinstance(x.data, tuple) else (x.data[0] if not any(x.data[1:]) else None)
    if q is None:
        return None
    q = Fraction(q)
    return int(q) if q.denominator == 1 else None


def solve_multiplicities(target, simples):
    """Unique ``(d_M(q))_M`` with ``target = sum_M d_M(t) chi_M``.

    Solved by exact linear algebra on the coefficients of ``t``.  In
    characteristic ``p`` the answer is only determined modulo ``p`` and the
    least non-negative residues are returned.
    """
    if not simples:
        if any(target[m] for m in target.keys()):
            raise NoSolution("no simple characters given for a nonzero target")
        return []
    field = target.field
    for s in simples:
        target._compatible(s)
    keys = sorted(set(target.keys()).union(*(s.keys() for s in simples)))
    texps = [k for m in keys for k in target[m].exponents()]
    if not texps:
        return [LaurentPoly("q") for _ in simples]
    sexps = [k for s in simples for m in keys for k in s[m].exponents()]
    if not sexps:
        raise NoSolution("all simple characters vanish")
    lo, hi = min(texps) - max(sexps), max(texps) - min(sexps)
    shifts = list(range(lo, hi + 1))
    unknowns = [(i, j) for i in range(len(simples)) for j in shifts]
    t_lo = min(min(texps), lo + min(sexps))
    t_hi = max(max(texps), hi + max(sexps))
    z = field.zero()
    rows, rhs = [], []
    for m in keys:
        for k in range(t_lo, t_hi + 1):
            rows.append([simples[i][m][k - j] or z for (i, j) in unknowns])
            rhs.append(target[m][k] or z)
    sol = linalg.solve(rows, rhs, field)
    if sol is None:
        raise NoSolution("target character is not a combination of the given simple characters")
    if linalg.nullspace(rows, field, len(unknowns)):
        raise NoSolution("the given simple characters are linearly dependent; multiplicities are not unique")
    out = [dict() for _ in simples]
    for (i, j), x in zip(unknowns, sol):
        if not x:
            continue
        n = _as_multiplicity(x, field)
        if n is None or n < 0:
            raise NegativeMultiplicity(
                f"coefficient of q^{j} for simple #{i + 1} is {x}, not a non-negative integer"
            )
        out[i][j] = n
    return [LaurentPoly("q", d) for d in out]
