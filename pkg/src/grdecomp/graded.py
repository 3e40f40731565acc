"""Graded algebras given by structure constants and their graded modules.

Conventions used throughout the package:

* algebras and modules come with homogeneous bases; degrees are plain lists;
* the algebra acts on the LEFT and ``action[m][r][s]`` is the ``r``-th
  coordinate of ``b_m . e_s`` (columns are images of basis vectors);
* matrices are tuples of tuples of :class:`~grdecomp.exact.Scalar`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import AlgebraMismatch, FieldMismatch
from .exact import linalg
from .exact.hom import hom_apply
from .exact.laurent import LaurentPoly


def freeze_matrix(m):
    return tuple(tuple(r) for r in m)


class GradedAlgebra:
    """Finite-dimensional graded algebra, free over ``ring`` on ``basis``.

    ``structure`` maps ``(m, m2)`` to a dict ``{r: c}`` meaning
    ``b_m b_m2 = sum_r c b_r``; missing pairs multiply to zero.
    """

    def __init__(self, ring, basis, degrees, unit, structure, name="H"):
        self.ring = ring
        self.basis = tuple(basis)
        self.degrees = tuple(int(d) for d in degrees)
        self.unit = unit
        self.name = name
        self.structure = {
            (int(m), int(n)): {int(r): c for r, c in vec.items() if c}
            for (m, n), vec in structure.items()
        }
        self.structure = {k: v for k, v in self.structure.items() if v}
        if len(self.degrees) != len(self.basis):
            raise ValueError("one degree per basis element is required")
        if len(set(self.basis)) != len(self.basis):
            raise ValueError(f"duplicate basis labels in {self.basis}")
        if not 0 <= unit < len(self.basis):
            raise ValueError(f"unit index {unit} out of range")

    @property
    def dim(self):
        return len(self.basis)

    def index(self, label):
        return self.basis.index(label)

    def product(self, m, n):
        return self.structure.get((m, n), {})

    def degree_zero(self):
        return [i for i, d in enumerate(self.degrees) if d == 0]

    def multiply(self, u, v):
        """Product of two coordinate vectors (lists of Scalars)."""
        z = self.ring.zero()
        out = [z] * self.dim
        for m, a in enumerate(u):
            if not a:
                continue
            for n, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for r, c in self.product(m, n).items():
                    out[r] = out[r] + ab * c
        return out

    def basis_vector(self, m):
        z, o = self.ring.zero(), self.ring.one()
        return [o if i == m else z for i in range(self.dim)]

    @cached_property
    def left_matrices(self):
        """Matrices of left multiplication by each basis element."""
        z = self.ring.zero()
        mats = []
        for m in range(self.dim):
            rows = [[z] * self.dim for _ in range(self.dim)]
            for s in range(self.dim):
                for r, c in self.product(m, s).items():
                    rows[r][s] = c
            mats.append(freeze_matrix(rows))
        return tuple(mats)

    def map_coefficients(self, f, ring, name=None):
        """The algebra with every structure constant sent through ``f``."""
        structure = {k: {r: f(c) for r, c in vec.items()} for k, vec in self.structure.items()}
        return GradedAlgebra(ring, self.basis, self.degrees, self.unit, structure, name or self.name)

    def _key(self):
        return (
            self.ring,
            self.basis,
            self.degrees,
            self.unit,
            tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.structure.items())),
        )

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, GradedAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GradedAlgebra({self.name!r}, dim={self.dim}, over {self.ring})"


@dataclass
class Violation:
    kind: str
    where: str
    detail: str

    def to_json(self):
        return {"kind": self.kind, "where": self.where, "detail": self.detail}

    def __str__(self):
        return f"{self.kind} at {self.where}: {self.detail}"


@dataclass
class ValidationReport:
    subject: str
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def add(self, kind, where, detail):
        self.violations.append(Violation(kind, where, detail))

    def kinds(self):
        return {v.kind for v in self.violations}

    def to_json(self):
        return {"subject": self.subject, "ok": self.ok, "violations": [v.to_json() for v in self.violations]}

    def __str__(self):
        if self.ok:
            return f"{self.subject}: OK"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines += [f"  - {v}" for v in self.violations]
        return "\n".join(lines)


def _fmt_vec(alg, vec):
    parts = [f"({c})*{alg.basis[r]}" for r, c in enumerate(vec) if c]
    return " + ".join(parts) or "0"


def validate_algebra(alg):
    """Check grading closure, the unit law and associativity."""
    rep = ValidationReport(f"algebra {alg.name}")
    b, deg = alg.basis, alg.degrees
    for (m, n), vec in sorted(alg.structure.items()):
        want = deg[m] + deg[n]
        for r in sorted(vec):
            if deg[r] != want:
                rep.add(
                    "grading",
                    f"({b[m]},{b[n]})",
                    f"product has degree {want} but is supported on {b[r]} of degree {deg[r]}",
                )
    u = alg.unit
    if deg[u] != 0:
        rep.add("unit", b[u], f"unit has degree {deg[u]}, expected 0")
    one = alg.ring.one()
    for m in range(alg.dim):
        for left, prod in (("left", alg.product(u, m)), ("right", alg.product(m, u))):
            if prod != {m: one}:
                rep.add("unit", f"({b[u]},{b[m]})" if left == "left" else f"({b[m]},{b[u]})",
                        f"{left} multiplication by the unit does not fix {b[m]}")
    vecs = [alg.basis_vector(i) for i in range(alg.dim)]
    prods = {(m, n): alg.multiply(vecs[m], vecs[n]) for m in range(alg.dim) for n in range(alg.dim)}
    for l in range(alg.dim):
        for m in range(alg.dim):
            lm = prods[l, m]
            for n in range(alg.dim):
                lhs = alg.multiply(lm, vecs[n])
                rhs = alg.multiply(vecs[l], prods[m, n])
                if lhs != rhs:
                    rep.add(
                        "associativity",
                        f"({b[l]},{b[m]},{b[n]})",
                        f"({b[l]}{b[m]}){b[n]} = {_fmt_vec(alg, lhs)} but {b[l]}({b[m]}{b[n]}) = {_fmt_vec(alg, rhs)}",
                    )
    return rep


class GradedModuleRep:
    """A graded left module over ``algebra`` with coefficients in ``field``."""

    def __init__(self, algebra, field, degrees, action, name="M"):
        if not field.is_field:
            raise FieldMismatch(f"module coefficients must lie in a field, got {field}")
        self.algebra = algebra
        self.field = field
        self.degrees = tuple(int(d) for d in degrees)
        self.action = tuple(freeze_matrix(a) for a in action)
        self.name = name
        if len(self.action) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} action matrices, got {len(self.action)}")

    @property
    def dim(self):
        return len(self.degrees)

    def blocks(self):
        """``{degree: [basis indices]}`` in increasing degree."""
        out = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return dict(sorted(out.items()))

    def graded_dimension(self):
        return LaurentPoly("t", {d: len(ix) for d, ix in self.blocks().items()})

    def matrix(self, m):
        return self.action[m]

    def word_matrix(self, word):
        """Action matrix of the product ``b_{w0} b_{w1} ...``."""
        mat = self.action[word[0]]
        for m in word[1:]:
            mat = linalg.matmul(mat, self.action[m], self.field)
        return mat

    def with_degrees(self, degrees, name=None):
        return GradedModuleRep(self.algebra, self.field, degrees, self.action, name or self.name)

    def _key(self):
        return (self.field, self.degrees, self.action)

    def __eq__(self, other):
        return (
            isinstance(other, GradedModuleRep)
            and self.algebra == other.algebra
            and self._key() == other._key()
        )

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GradedModuleRep({self.name!r}, dim={self.dim}, degrees={list(self.degrees)}, over {self.field})"


class ModuleRep:
    """An ungraded module: action matrices only."""

    def __init__(self, algebra, field, action, name="M"):
        self.algebra = algebra
        self.field = field
        self.action = tuple(freeze_matrix(a) for a in action)
        self.name = name

    @property
    def dim(self):
        return len(self.action[self.algebra.unit])

    def __eq__(self, other):
        return (
            isinstance(other, ModuleRep)
            and self.algebra == other.algebra
            and (self.field, self.action) == (other.field, other.action)
        )

    def __hash__(self):
        return hash((self.field, self.action))

    def __repr__(self):
        return f"ModuleRep({self.name!r}, dim={self.dim}, over {self.field})"


def validate_module(mod):
    """Check shapes, homogeneity of every action matrix and the representation law."""
    alg, fld, n = mod.algebra, mod.field, mod.dim
    rep = ValidationReport(f"module {mod.name}")
    labels = alg.basis
    for m, a in enumerate(mod.action):
        if len(a) != n or any(len(r) != n for r in a):
            rep.add("shape", labels[m], f"action matrix is not {n}x{n}")
    if not rep.ok:
        return rep
    degs = mod.degrees
    for m, a in enumerate(mod.action):
        for r in range(n):
            for s in range(n):
                if a[r][s] and degs[r] != alg.degrees[m] + degs[s]:
                    rep.add(
                        "homogeneity",
                        f"{labels[m]}[{r + 1},{s + 1}]",
                        f"nonzero entry {a[r][s]} maps degree {degs[s]} to degree {degs[r]} "
                        f"but {labels[m]} has degree {alg.degrees[m]}",
                    )
    _check_representation(mod.algebra, fld, mod.action, rep)
    return rep


def _check_representation(alg, fld, action, rep):
    n = len(action[alg.unit])
    labels = alg.basis
    if action[alg.unit] != freeze_matrix(linalg.identity(fld, n)):
        rep.add("representation", labels[alg.unit], "the unit does not act as the identity")
    consts = {}
    for m in range(alg.dim):
        for k in range(alg.dim):
            lhs = linalg.matmul(action[m], action[k], fld)
            rhs = linalg.zeros(fld, n, n)
            for r, c in alg.product(m, k).items():
                key = (r, c)
                if key not in consts:
                    consts[key] = fld.coerce(c)
                rhs = linalg.mat_add(rhs, linalg.mat_scale(action[r], consts[key]))
            if freeze_matrix(lhs) != freeze_matrix(rhs):
                bad = next((r, s) for r in range(n) for s in range(n) if lhs[r][s] != rhs[r][s])
                rep.add(
                    "representation",
                    f"({labels[m]},{labels[k]})",
                    f"rho({labels[m]})rho({labels[k]}) differs from rho({labels[m]}{labels[k]}) "
                    f"at entry [{bad[0] + 1},{bad[1] + 1}]: {lhs[bad[0]][bad[1]]} vs {rhs[bad[0]][bad[1]]}",
                )


def validate_ungraded(mod):
    rep = ValidationReport(f"module {mod.name}")
    _check_representation(mod.algebra, mod.field, mod.action, rep)
    return rep


def shift(mod, j):
    """``mod<j>``: same matrices, every degree raised by ``j``."""
    return mod.with_degrees([d + j for d in mod.degrees], name=mod.name if j == 0 else f"{mod.name}<{j}>")


def direct_sum(m1, m2, name=None):
    if m1.algebra != m2.algebra:
        raise AlgebraMismatch(f"{m1.name} and {m2.name} are modules over different algebras")
    if m1.field != m2.field:
        raise FieldMismatch(f"{m1.name} is over {m1.field} but {m2.name} is over {m2.field}")
    action = [linalg.block_diag(a, b, m1.field) for a, b in zip(m1.action, m2.action)]
    return GradedModuleRep(
        m1.algebra, m1.field, m1.degrees + m2.degrees, action, name or f"{m1.name}+{m2.name}"
    )


def zero_module(algebra, field, name="0"):
    return GradedModuleRep(algebra, field, [], [()] * algebra.dim, name)


def forget_grading(mod):
    return ModuleRep(mod.algebra, mod.field, mod.action, mod.name)


def trivially_graded(mod):
    """View an ungraded module as concentrated in degree 0 (no homogeneity check)."""
    return GradedModuleRep(mod.algebra, mod.field, [0] * mod.dim, mod.action, mod.name)


def regular_module(alg, name=None):
    """The graded left regular module of an algebra over a field."""
    return GradedModuleRep(alg, alg.ring, alg.degrees, alg.left_matrices, name or f"{alg.name}_reg")


def extend_scalars(mod, target, assignments=None):
    """Base change of ``mod`` along the field morphism given by ``assignments``.

    With no assignments the canonical embedding (e.g. QQ into a cyclotomic
    field) is used.  If the algebra is defined over the module's field it is
    carried along; otherwise it is kept as is.
    """
    assignments = dict(assignments or {})

    def f(x):
        return hom_apply(assignments, x, target)

    alg = mod.algebra
    if alg.ring == mod.field:
        alg = alg.map_coefficients(f, target)
    action = [linalg.map_matrix(a, f) for a in mod.action]
    return GradedModuleRep(alg, target, mod.degrees, action, mod.name)


class GradedClass:
    """A finitely supported map ``simple label -> N[q, q^-1]``."""

    def __init__(self, entries=None, order=None):
        self.entries = {k: v for k, v in (entries or {}).items() if v}
        self.order = list(order) if order is not None else sorted(self.entries)

    def __getitem__(self, label):
        return self.entries.get(label, LaurentPoly("q"))

    def labels(self):
        return list(self.order)

    def shift(self, j):
        return GradedClass({k: v.shift(j) for k, v in self.entries.items()}, self.order)

    def at_one(self):
        return {k: self[k].evaluate(1) for k in self.order}

    def __eq__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def to_json(self):
        return {k: self[k].to_json() for k in self.order}

    def __str__(self):
        parts = [f"[{k}]*({self[k]})" for k in self.order if self[k]]
        return " + ".join(parts) or "0"

    __repr__ = __str__
