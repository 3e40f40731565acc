"""Graded decomposition maps and matrices, the fingerprint diagram and towers.

Matrices are stored with one row per module being reduced and one column
per simple module of the specialized algebra.  With this orientation the
matrices of a tower multiply as ``D_theta' = D_theta * D_phi``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .characters import character_sort_key, evaluation_words, fingerprint, ungraded_character, word_label
from .errors import FactorizationFailure, NegativeMultiplicity, OracleMismatch
from .exact.laurent import LaurentPoly
from .graded import GradedClass
from .simples import composition_factors, compute_simples, graded_multiplicities
from .specialize import clear_denominators, modular_reduce

NORMALIZATION = "each simple module is graded with smallest degree 0"


@dataclass
class Decomposition:
    """The class of one reduced module together with how it was obtained."""

    module: object
    reduced: object
    rescaling: object
    graded_class: GradedClass


def decompose_module(mod, theta, simples, seed=0, oracle=True):
    """Class of the reduction of ``mod`` at ``theta`` in the basis of ``simples``."""
    if mod.dim == 0:
        return Decomposition(mod, None, None, GradedClass({}, simples.labels))
    lattice, rec = clear_denominators(mod, theta)
    reduced = modular_reduce(lattice, theta, algebra=simples.algebra)
    cls = graded_multiplicities(reduced, simples, seed=seed, oracle=oracle)
    return Decomposition(mod, reduced, rec, cls)


def canonical_order(mods):
    return sorted(mods, key=lambda m: (m.dim, character_sort_key(ungraded_character(m)), m.name))


@dataclass
class GradedDecompMatrix:
    theta: object
    row_labels: list
    col_labels: list
    entries: list
    col_dims: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    simples: object = None
    metadata: dict = field(default_factory=dict)

    @property
    def shape(self):
        return len(self.row_labels), len(self.col_labels)

    def entry(self, r, c):
        return self.entries[r][c]

    def to_json(self):
        return {
            "specialization": self.theta.name,
            "rows": list(self.row_labels),
            "columns": list(self.col_labels),
            "matrix": [[e.to_json() for e in row] for row in self.entries],
            "metadata": dict(self.metadata),
        }

    def format(self):
        cells = [[str(e) for e in row] for row in self.entries]
        widths = [max([len(c)] + [len(r[j]) for r in cells]) for j, c in enumerate(self.col_labels)]
        rw = max([len(r) for r in self.row_labels] + [1])
        lines = [" " * rw + " | " + " | ".join(c.ljust(w) for c, w in zip(self.col_labels, widths))]
        for label, row in zip(self.row_labels, cells):
            lines.append(label.ljust(rw) + " | " + " | ".join(x.ljust(w) for x, w in zip(row, widths)))
        return "\n".join(lines)

    __str__ = format


def decomposition_matrix(theta, modules, simples=None, seed=0, oracle=True, sort=True):
    """``D_theta(q)``: rows are ``modules`` in canonical order, columns the simples of ``theta(H)``."""
    mods = canonical_order(modules) if sort else list(modules)
    if simples is None:
        simples = compute_simples(theta.algebra(mods[0].algebra), seed=seed)
    decs = [decompose_module(m, theta, simples, seed=seed, oracle=oracle) for m in mods]
    entries = [[d.graded_class[label] for label in simples.labels] for d in decs]
    for row in entries:
        for e in row:
            if any(c < 0 for c in e.coeffs.values()):
                raise NegativeMultiplicity(f"negative coefficient in decomposition entry {e}")
    meta = {
        "grading_normalization": NORMALIZATION,
        "seed": seed,
        "rescalings": {d.module.name: (d.rescaling.to_json() if d.rescaling else []) for d in decs},
        "columns": {s.name: {"dim": s.dim, "degrees": list(s.degrees)} for s in simples},
    }
    return GradedDecompMatrix(
        theta,
        [m.name for m in mods],
        list(simples.labels),
        entries,
        [s.dim for s in simples],
        decs,
        simples,
        meta,
    )


def evaluate_q1(D, oracle=True, seed=0):
    """``D(1)``, checked against composition series of the same reductions."""
    values = [[e.evaluate(1) for e in row] for row in D.entries]
    if oracle and D.simples is not None:
        for r, dec in enumerate(D.rows):
            if dec.reduced is None:
                continue
            counts = composition_factors(dec.reduced, D.simples, seed=seed)
            expect = [counts[label] for label in D.col_labels]
            if expect != values[r]:
                raise OracleMismatch(
                    f"row {D.row_labels[r]}: D(1) gives {values[r]} but composition factors give {expect}"
                )
    return values


def ungraded_decomposition_matrix(D, seed=0):
    """The ungraded matrix computed only from composition series of the reductions."""
    out = []
    for dec in D.rows:
        if dec.reduced is None:
            out.append([0] * len(D.col_labels))
            continue
        counts = composition_factors(dec.reduced, D.simples, seed=seed)
        out.append([counts[label] for label in D.col_labels])
    return out


# ---------------------------------------------------------------- diagram


@dataclass
class DiagramCheck:
    module: str
    ok: bool
    word: str = ""
    degree: int = 0
    expected: str = ""
    found: str = ""

    def to_json(self):
        out = {"module": self.module, "ok": self.ok}
        if not self.ok:
            out.update(word=self.word, degree=self.degree, expected=self.expected, found=self.found)
        return out

    def __str__(self):
        if self.ok:
            return f"{self.module}: pass"
        return (
            f"{self.module}: FAIL at {self.word}, degree {self.degree}: "
            f"theta(K-side) = {self.expected} but L-side = {self.found}"
        )


@dataclass
class DiagramReport:
    theta: str
    words: list
    checks: list

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def to_json(self):
        return {"specialization": self.theta, "ok": self.ok, "words": self.words, "checks": [c.to_json() for c in self.checks]}

    def __str__(self):
        head = f"diagram check at {self.theta} on {len(self.words)} evaluation word(s): {'PASS' if self.ok else 'FAIL'}"
        return "\n".join([head] + [f"  {c}" for c in self.checks])


def verify_diagram(theta, mods, reductions=None, depth=2, words=None):
    """Compare ``theta`` applied to K-side fingerprints with fingerprints of the reductions.

    ``reductions`` optionally maps module names to pre-computed reduced
    modules (used to test the check itself).  Evaluation words default to
    all degree-0 words of length at most ``depth``.
    """
    reductions = reductions or {}
    checks = []
    alg = mods[0].algebra if mods else None
    if words is None and alg is not None:
        words = evaluation_words(alg, depth)
    for mod in mods:
        red = reductions.get(mod.name)
        if red is None:
            lattice, _ = clear_denominators(mod, theta)
            red = modular_reduce(lattice, theta)
        lhs = fingerprint(mod, words).map_coefficients(theta, theta.target, algebra=red.algebra)
        rhs = fingerprint(red, words)
        diff = lhs.first_difference(rhs)
        if diff is None:
            checks.append(DiagramCheck(mod.name, True))
        else:
            w, i, a, b = diff
            checks.append(DiagramCheck(mod.name, False, word_label(alg, w), i, str(a), str(b)))
    return DiagramReport(theta.name, [word_label(alg, w) for w in (words or [])], checks)


# ---------------------------------------------------------------- towers


def matmul_q(a, b):
    """Product of matrices over N[q, q^-1]."""
    n = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for c in range(n):
            s = LaurentPoly("q")
            for x, brow in zip(row, b):
                s = s + x * brow[c]
            if any(v < 0 for v in s.coeffs.values()):
                raise NegativeMultiplicity(f"negative coefficient in matrix product entry {s}")
            new.append(s)
        out.append(new)
    return out


@dataclass
class FactorizationReport:
    tower: object
    D_theta: GradedDecompMatrix
    D_theta_prime: GradedDecompMatrix
    D_phi: GradedDecompMatrix
    product: list

    ok = True

    def to_json(self):
        return {
            "tower": self.tower.name,
            "status": "PASS",
            "D_theta": self.D_theta.to_json(),
            "D_theta_prime": self.D_theta_prime.to_json(),
            "D_theta_theta_prime": self.D_phi.to_json(),
            "product": [[e.to_json() for e in row] for row in self.product],
            "convention": "rows index the modules being reduced; D_theta' = D_theta * D_phi as row-indexed matrices",
        }

    def __str__(self):
        return "\n".join(
            [
                "PASS: D_θ′ = D_{θ,θ′}·D_θ",
                f"tower {self.tower.name}: {self.tower.theta.name} then phi gives {self.tower.theta_prime.name}",
                f"D_θ ({self.tower.theta.name}):",
                self.D_theta.format(),
                f"D_θ′ ({self.tower.theta_prime.name}):",
                self.D_theta_prime.format(),
                "D_{θ,θ′}:",
                self.D_phi.format(),
            ]
        )


def factorization_check(tower, modules, seed=0):
    """Compute ``D_theta``, ``D_theta'`` and ``D_{theta,theta'}`` and check they factor."""
    H = modules[0].algebra
    S = compute_simples(tower.theta.algebra(H), seed=seed)
    S2 = compute_simples(tower.theta_prime.algebra(H), seed=seed)
    D1 = decomposition_matrix(tower.theta, modules, S, seed=seed)
    D2 = decomposition_matrix(tower.theta_prime, modules, S2, seed=seed)
    Dphi = decomposition_matrix(tower.phi, list(S), S2, seed=seed, sort=False)
    prod = matmul_q(D1.entries, Dphi.entries)
    for r, (pr, dr) in enumerate(zip(prod, D2.entries)):
        for c, (x, y) in enumerate(zip(pr, dr)):
            if x != y:
                raise FactorizationFailure(
                    f"entry ({D2.row_labels[r]}, {D2.col_labels[c]}): D_theta' has {y} "
                    f"but the product of the factors has {x}"
                )
    return FactorizationReport(tower, D1, D2, Dphi, prod)
