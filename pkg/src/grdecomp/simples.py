"""Simple modules of a specialized algebra and graded multiplicities.

The splitting engine is a small graded MeatAxe: modules are presented by
homogeneous bases, submodules are spun from homogeneous vectors, and only
degree-0 algebra elements are used to produce candidate vectors, so every
submodule and quotient it builds comes with a homogeneous basis again.
Ungraded work runs the same code with all degrees set to 0.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .characters import (
    character_sort_key,
    graded_character,
    solve_multiplicities,
    ungraded_character,
)
from .errors import (
    DimensionBound,
    FieldMismatch,
    MeatAxeFailure,
    NotGradable,
    NotSplit,
    OracleMismatch,
    UnsupportedField,
)
from .exact import linalg
from .exact.factor import factor
from .exact.laurent import LaurentPoly
from .exact.rings import PrimeField
from .graded import GradedClass, GradedModuleRep, ModuleRep, regular_module

DEFAULT_DIMENSION_BOUND = 64


# ---------------------------------------------------------------- radical


def _field_algebra(alg, field=None):
    field = field or alg.ring
    if not field.is_field:
        raise UnsupportedField(f"radical and simples need an algebra over a field, got {alg.ring}")
    if alg.ring == field:
        return alg
    return alg.map_coefficients(field.coerce, field)


def _lift_power_trace(mat, p, i):
    """``(Tr(lift(mat)^(p^i)) mod p^(i+1)) / p^i``, entries lifted to [0, p)."""
    n = len(mat)
    a = [[int(x.data) for x in row] for row in mat]
    mod = p ** (i + 1)
    result = [[int(r == c) for c in range(n)] for r in range(n)]
    base = a
    e = p ** i
    while e:
        if e & 1:
            result = [[sum(x * y for x, y in zip(row, col)) % mod for col in zip(*base)] for row in result]
        e >>= 1
        if e:
            base = [[sum(x * y for x, y in zip(row, col)) % mod for col in zip(*base)] for row in base]
    tr = sum(result[k][k] for k in range(n)) % mod
    return tr // p ** i


def _left_matrix(alg, vec):
    f = alg.ring
    n = alg.dim
    out = linalg.zeros(f, n, n)
    for m, c in enumerate(vec):
        if c:
            out = linalg.mat_add(out, linalg.mat_scale(alg.left_matrices[m], c))
    return out


def _homogeneous_basis(alg, vectors):
    """Split a basis of a graded subspace into homogeneous pieces."""
    f = alg.ring
    out = []
    for d in sorted(set(alg.degrees)):
        idx = [i for i, dd in enumerate(alg.degrees) if dd == d]
        proj = [[v[i] if i in idx else f.zero() for i in range(alg.dim)] for v in vectors]
        out.extend(linalg.span_basis([p for p in proj if any(p)], f))
    if len(out) != (len(linalg.span_basis(vectors, f)) if vectors else 0):
        raise ArithmeticError("radical is not spanned by homogeneous elements")
    return out


def radical(alg):
    """Basis of the Jacobson radical as homogeneous coordinate vectors.

    Characteristic 0: kernel of the trace form of the regular
    representation, computed degree by degree.  Characteristic ``p``: the
    iterated power-trace chain on integer lifts.
    """
    f = alg.ring
    if not f.is_field:
        raise UnsupportedField(f"radical needs an algebra over a field, got {f}")
    n = alg.dim
    tr = [linalg.trace(m, f) for m in alg.left_matrices]
    if not f.characteristic:
        out = []
        for d in sorted(set(alg.degrees)):
            idx = [i for i in range(n) if alg.degrees[i] == d]
            dual = [j for j in range(n) if alg.degrees[j] == -d]
            rows = []
            for j in dual:
                row = []
                for i in idx:
                    s = f.zero()
                    for r, c in alg.product(i, j).items():
                        s = s + c * tr[r]
                    row.append(s)
                rows.append(row)
            for v in linalg.nullspace(rows, f, len(idx)):
                full = [f.zero()] * n
                for i, c in zip(idx, v):
                    full[i] = c
                out.append(full)
        return out
    if not isinstance(f, PrimeField):
        raise UnsupportedField(f"positive characteristic is supported over prime fields only, got {f}")
    p = f.p
    basis = [alg.basis_vector(i) for i in range(n)]
    level = 0
    while p ** (level + 1) <= n:
        level += 1
    current = basis
    for i in range(level + 1):
        if not current:
            break
        rows = []
        for x in current:
            row = []
            for y in basis:
                z = alg.multiply(x, y)
                row.append(f.from_int(_lift_power_trace(_left_matrix(alg, z), p, i)))
            rows.append(row)
        combos = linalg.left_nullspace(rows, f)
        current = [
            [sum((c * x[k] for c, x in zip(combo, current)), f.zero()) for k in range(n)] for combo in combos
        ]
    return _homogeneous_basis(alg, current)


# ---------------------------------------------------------------- spinning


class _Echelon:
    """Incremental semi-echelon basis (rows normalized at their pivot)."""

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self.rows = []
        self.pivots = []

    def reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, v):
        v = self.reduce(v)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = v[p].inverse()
        self.rows.append([x * inv for x in v])
        self.pivots.append(p)
        return True

    def __len__(self):
        return len(self.rows)


def _spin(seeds, mats, field, n):
    """Basis of the smallest subspace containing ``seeds`` stable under ``mats``."""
    ech = _Echelon(field, n)
    queue = list(seeds)
    while queue:
        v = queue.pop()
        w = ech.reduce(v)
        if not any(w):
            continue
        ech.add(w)
        row = ech.rows[-1]
        for a in mats:
            queue.append(linalg.matvec(a, row, field))
        if len(ech) == n:
            break
    return ech.rows


def _standard(field, n, i):
    return [field.one() if j == i else field.zero() for j in range(n)]


def _subquotient(mod, sub):
    """Split ``mod`` along the graded submodule spanned by ``sub``."""
    f, n = mod.field, mod.dim
    ech = _Echelon(f, n)
    for v in sub:
        ech.add(v)
    basis = [list(v) for v in sub]
    for i in range(n):
        e = _standard(f, n, i)
        if ech.add(e):
            basis.append(e)
    k = len(sub)
    p = linalg.transpose(basis)
    pinv = linalg.inverse(p, f)
    degs = [mod.degrees[next(i for i, x in enumerate(v) if x)] for v in basis]
    new = [linalg.matmul(pinv, linalg.matmul(a, p, f), f) for a in mod.action]
    s_act = [[r[:k] for r in a[:k]] for a in new]
    q_act = [[r[k:] for r in a[k:]] for a in new]
    sub_mod = GradedModuleRep(mod.algebra, f, degs[:k], s_act, f"{mod.name}/sub")
    quo_mod = GradedModuleRep(mod.algebra, f, degs[k:], q_act, f"{mod.name}/quo")
    return sub_mod, quo_mod


def _poly_at_matrix(poly, mat, field):
    n = len(mat)
    out = linalg.zeros(field, n, n)
    for k in range(poly.degree, -1, -1):
        out = linalg.matmul(out, mat, field)
        c = poly[k]
        if c:
            for i in range(n):
                out[i][i] = out[i][i] + c
    return out


def _burnside(mod):
    """True iff the image of the algebra is the full matrix algebra."""
    n = mod.dim
    rows = [[x for r in a for x in r] for a in mod.action]
    return linalg.rank(rows, mod.field) == n * n


def commutant_dimension(mod):
    """``dim End_H(M)``: solutions ``X`` of ``X rho(b) = rho(b) X`` for every basis ``b``."""
    f, n = mod.field, mod.dim
    if n == 0:
        return 0
    rows = []
    for a in mod.action:
        for i in range(n):
            for j in range(n):
                # (X a - a X)[i][j] = sum_k X[i][k] a[k][j] - a[i][k] X[k][j]
                row = [f.zero()] * (n * n)
                for k in range(n):
                    if a[k][j]:
                        row[i * n + k] = row[i * n + k] + a[k][j]
                    if a[i][k]:
                        row[k * n + j] = row[k * n + j] - a[i][k]
                if any(row):
                    rows.append(row)
    return len(linalg.nullspace(rows, f, n * n))


@dataclass
class _Context:
    field: object
    rad: list
    rng: random.Random
    tries: int
    graded: bool


def _radical_action(mod, ctx):
    out = []
    for x in ctx.rad:
        m = linalg.zeros(ctx.field, mod.dim, mod.dim)
        for i, c in enumerate(x):
            if c:
                m = linalg.mat_add(m, linalg.mat_scale(mod.action[i], c))
        out.append(m)
    return out


def _degree_zero_indices(mod, ctx):
    alg = mod.algebra
    if ctx.graded:
        return alg.degree_zero()
    return list(range(alg.dim))


def _find_submodule(mod, ctx):
    """A proper nonzero graded submodule, or ``"absolute"`` / ``"irreducible"``."""
    f, n = ctx.field, mod.dim
    if n == 1:
        return "absolute"
    gens = [a for i, a in enumerate(mod.action) if i != mod.algebra.unit]
    # the radical kills every simple module
    seeds = []
    for r in _radical_action(mod, ctx):
        for i in range(n):
            v = [r[k][i] for k in range(n)]
            if any(v):
                seeds.append(v)
    if seeds:
        sub = _spin(seeds, gens, f, n)
        if 0 < len(sub) < n:
            return sub
    if _burnside(mod):
        return "absolute"
    gens_t = [linalg.transpose(a) for a in gens]

    def dual_to_sub(rows):
        return linalg.nullspace([list(r) for r in rows], f, n)

    for i in range(n):
        sub = _spin([_standard(f, n, i)], gens, f, n)
        if len(sub) < n:
            return sub
        dual = _spin([_standard(f, n, i)], gens_t, f, n)
        if len(dual) < n:
            return dual_to_sub(dual)
    zero_idx = _degree_zero_indices(mod, ctx)
    blocks = mod.blocks() if ctx.graded else {0: list(range(n))}
    candidates = [{i: f.one()} for i in zero_idx if i != mod.algebra.unit]
    for _ in range(ctx.tries):
        coeffs = {}
        for i in zero_idx:
            c = ctx.rng.randint(-3, 3)
            if c:
                coeffs[i] = f.from_int(c)
        if coeffs:
            candidates.append(coeffs)
    for coeffs in candidates:
        a = linalg.zeros(f, n, n)
        for i, c in coeffs.items():
            a = linalg.mat_add(a, linalg.mat_scale(mod.action[i], c))
        factors = []
        for idx in blocks.values():
            block = [[a[r][s] for s in idx] for r in idx]
            for g, _ in factor(linalg.charpoly(block, f), f):
                if g not in factors:
                    factors.append(g)
        for g in factors:
            ga = _poly_at_matrix(g, a, f)
            kernel = []
            kernel_t = []
            for idx in blocks.values():
                block = [[ga[r][s] for s in idx] for r in idx]
                for v in linalg.nullspace(block, f, len(idx)):
                    full = [f.zero()] * n
                    for k, c in zip(idx, v):
                        full[k] = c
                    kernel.append(full)
                for v in linalg.nullspace(linalg.transpose(block), f, len(idx)):
                    full = [f.zero()] * n
                    for k, c in zip(idx, v):
                        full[k] = c
                    kernel_t.append(full)
            for v in kernel:
                sub = _spin([v], gens, f, n)
                if len(sub) < n:
                    return sub
            if len(kernel) == g.degree:
                dual = _spin([kernel_t[0]], gens_t, f, n)
                if len(dual) < n:
                    return dual_to_sub(dual)
                # Norton's criterion: the module is irreducible
                return "irreducible"
    raise MeatAxeFailure(f"no submodule found and irreducibility not certified for {mod.name} (dim {n})")


def _factors(mod, ctx, allow_nonsplit=False):
    if mod.dim == 0:
        return []
    found = _find_submodule(mod, ctx)
    if found == "absolute":
        return [(mod, True)]
    if found == "irreducible":
        if not allow_nonsplit:
            raise NotSplit(
                f"a composition factor of dimension {mod.dim} has endomorphism algebra of dimension "
                f"{commutant_dimension(mod)} > 1 over {mod.field}; the algebra is not split"
            )
        return [(mod, False)]
    sub, quo = _subquotient(mod, found)
    return _factors(sub, ctx, allow_nonsplit) + _factors(quo, ctx, allow_nonsplit)


def _prepare(mod, graded, seed, tries, bound):
    if mod.dim > bound:
        raise DimensionBound(f"module {mod.name} has dimension {mod.dim} > bound {bound}")
    alg = _field_algebra(mod.algebra, mod.field)
    if alg is not mod.algebra:
        mod = GradedModuleRep(alg, mod.field, mod.degrees, mod.action, mod.name)
    ctx = _Context(mod.field, radical(alg), random.Random(seed), tries, graded)
    return mod, ctx


def graded_composition_factors(mod, seed=0, tries=60, bound=DEFAULT_DIMENSION_BOUND, allow_nonsplit=False):
    """Graded simple factors of a graded module, each with its own degrees."""
    mod, ctx = _prepare(mod, True, seed, tries, bound)
    return [m for m, _ in _factors(mod, ctx, allow_nonsplit)]


def _ungraded_factors(mod, seed, tries, bound, allow_nonsplit=False):
    if isinstance(mod, ModuleRep):
        mod = GradedModuleRep(mod.algebra, mod.field, [0] * mod.dim, mod.action, mod.name)
    else:
        mod = mod.with_degrees([0] * mod.dim)
    mod, ctx = _prepare(mod, False, seed, tries, bound)
    return _factors(mod, ctx, allow_nonsplit)


def normalize_grading(mod):
    """Shift so that the smallest degree is 0."""
    if not mod.dim:
        return mod
    low = min(mod.degrees)
    return mod.with_degrees([d - low for d in mod.degrees])


# ---------------------------------------------------------------- simple sets


class SimpleSet:
    """The simple graded modules of an algebra over a field, in canonical order.

    Each simple carries the grading with smallest degree 0; the order is by
    dimension, then by the ungraded character on the basis.
    """

    def __init__(self, algebra, simples, radical_basis, seed=0):
        self.algebra = algebra
        self.radical_basis = radical_basis
        self.seed = seed
        keyed = sorted(simples, key=lambda s: (s.dim, character_sort_key(ungraded_character(s))))
        self.simples = [s.with_degrees(s.degrees, name=f"L{i + 1}") for i, s in enumerate(keyed)]
        self._chars = [ungraded_character(s) for s in self.simples]

    @property
    def field(self):
        return self.algebra.ring

    @property
    def labels(self):
        return [s.name for s in self.simples]

    def __len__(self):
        return len(self.simples)

    def __iter__(self):
        return iter(self.simples)

    def __getitem__(self, i):
        return self.simples[i]

    def identify(self, mod):
        """Index of the simple isomorphic to the (simple) ``mod``."""
        chi = ungraded_character(mod)
        for i, c in enumerate(self._chars):
            if c == chi and self.simples[i].dim == mod.dim:
                return i
        raise OracleMismatch(f"composition factor of dimension {mod.dim} matches no known simple module")

    def describe(self):
        lines = []
        for s, chi in zip(self.simples, self._chars):
            vals = ", ".join(f"{b}: {c}" for b, c in zip(self.algebra.basis, chi))
            lines.append(f"{s.name}: dim {s.dim}, degrees {list(s.degrees)}, character ({vals})")
        return "\n".join(lines)


def compute_simples(alg, seed=0, tries=60):
    """All simple graded modules of ``alg`` (over a field), up to shift.

    Raises :class:`NotSplit` if some simple is not absolutely irreducible.
    """
    alg = _field_algebra(alg)
    reg = regular_module(alg)
    rad = radical(alg)
    found = []
    chars = []
    for m in graded_composition_factors(reg, seed=seed, tries=tries):
        m = normalize_grading(m)
        chi = ungraded_character(m)
        if chi not in chars:
            chars.append(chi)
            found.append(m)
    total = sum(s.dim ** 2 for s in found)
    if total != alg.dim - len(rad):
        raise NotSplit(
            f"sum of squared simple dimensions is {total} but dim H - dim J = {alg.dim - len(rad)}"
        )
    return SimpleSet(alg, found, rad, seed)


def check_split(alg, seed=0):
    """True iff every simple module has a one-dimensional endomorphism algebra."""
    alg = _field_algebra(alg)
    reg = regular_module(alg)
    reg, ctx = _prepare(reg, False, seed, 60, DEFAULT_DIMENSION_BOUND)
    for m, _ in _factors(reg, ctx, allow_nonsplit=True):
        if commutant_dimension(m) != 1:
            return False
    return True


def composition_factors(mod, simples=None, seed=0, bound=DEFAULT_DIMENSION_BOUND):
    """Ungraded composition multiplicities as ``{simple label: count}``.

    With ``simples=None`` the factors are grouped by character and labelled
    ``F1, F2, ...`` in order of appearance.
    """
    facs = [m for m, _ in _ungraded_factors(mod, seed, 60, bound)]
    counts = {}
    if simples is not None:
        for label in simples.labels:
            counts[label] = 0
        for m in facs:
            counts[simples.labels[simples.identify(m)]] += 1
        return counts
    reps = []
    for m in facs:
        chi = ungraded_character(m)
        for k, (c, _) in enumerate(reps):
            if c == chi:
                counts[f"F{k + 1}"] += 1
                break
        else:
            reps.append((chi, m))
            counts[f"F{len(reps)}"] = 1
    return counts


def grade_simple(mod, simples=None, root=0):
    """Find degrees making the basis of ``mod`` homogeneous (smallest degree 0).

    Propagates ``d_r = deg(b) + d_s`` along nonzero entries from ``root``.
    If the given basis admits no grading and ``simples`` (a
    :class:`SimpleSet`) is available, returns the graded simple isomorphic
    to ``mod`` instead, in that simple's own homogeneous basis.
    """
    alg = mod.algebra
    n = mod.dim
    if n == 0:
        return GradedModuleRep(alg, mod.field, [], mod.action, mod.name)
    edges = {}
    for m, a in enumerate(mod.action):
        for r in range(n):
            for s in range(n):
                if a[r][s]:
                    edges.setdefault(s, []).append((r, alg.degrees[m], m))
                    edges.setdefault(r, []).append((s, -alg.degrees[m], m))
    deg = {}
    order = [root % n] + [i for i in range(n) if i != root % n]
    conflict = None
    for start in order:
        if start in deg:
            continue
        deg[start] = 0
        stack = [start]
        while stack and conflict is None:
            u = stack.pop()
            for w, d, m in edges.get(u, []):
                if w not in deg:
                    deg[w] = deg[u] + d
                    stack.append(w)
                elif deg[w] != deg[u] + d:
                    conflict = (u, w, m)
                    break
    if conflict is None:
        graded = GradedModuleRep(alg, mod.field, [deg[i] for i in range(n)], mod.action, mod.name)
        return normalize_grading(graded)
    if simples is not None:
        return simples[simples.identify(mod)].with_degrees(simples[simples.identify(mod)].degrees, name=mod.name)
    u, w, m = conflict
    raise NotGradable(
        f"{mod.name}: {alg.basis[m]} links basis vectors {u + 1} and {w + 1} inconsistently "
        "with the degrees forced along the other edges of the cycle"
    )


# ---------------------------------------------------------------- multiplicities


def _class_from_factors(facs, simples):
    entries = {label: {} for label in simples.labels}
    for m in facs:
        i = simples.identify(m)
        j = min(m.degrees)
        d = entries[simples.labels[i]]
        d[j] = d.get(j, 0) + 1
    return GradedClass({k: LaurentPoly("q", v) for k, v in entries.items()}, simples.labels)


def graded_multiplicities(mod, simples, seed=0, oracle=True):
    """``[mod : L<j>]`` for every simple ``L`` of ``simples``, as a :class:`GradedClass`.

    Characteristic 0: solved from graded characters.  Characteristic ``p``:
    characters only see residues mod ``p``, so a graded composition series
    is used and the character solve is checked against it modulo ``p``.
    With ``oracle`` set, the value at ``q = 1`` is compared with an
    independent ungraded composition series.
    """
    field = simples.field
    if mod.field != field:
        raise FieldMismatch(f"module over {mod.field}, simples over {field}")
    chars = [graded_character(s) for s in simples]
    target = graded_character(mod)
    if not field.characteristic:
        sol = solve_multiplicities(target, chars)
        cls = GradedClass(dict(zip(simples.labels, sol)), simples.labels)
    else:
        facs = graded_composition_factors(mod, seed=seed)
        cls = _class_from_factors(facs, simples)
        residues = solve_multiplicities(target, chars)
        p = field.characteristic
        for label, r in zip(simples.labels, residues):
            got = cls[label]
            want = {k: c % p for k, c in got.coeffs.items() if c % p}
            if dict(r.coeffs) != want:
                raise OracleMismatch(
                    f"{mod.name}: graded composition series gives {got} for {label} "
                    f"but characters give {r} modulo {p}"
                )
    if oracle and mod.dim:
        counts = composition_factors(mod, simples, seed=seed)
        at_one = cls.at_one()
        if counts != at_one:
            raise OracleMismatch(
                f"{mod.name}: graded multiplicities at q=1 {at_one} differ from composition factors {counts}"
            )
    return cls


__all__ = [
    "SimpleSet",
    "check_split",
    "commutant_dimension",
    "composition_factors",
    "compute_simples",
    "grade_simple",
    "graded_composition_factors",
    "graded_multiplicities",
    "normalize_grading",
    "radical",
]

