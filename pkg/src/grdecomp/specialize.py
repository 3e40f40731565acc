"""Specializations ``theta: A -> L``, lattices and modular reduction.

The valuation ring used to pick a lattice is replaced by the localization
of ``A`` at ``ker theta``: an element of ``K = Frac(A)`` is admissible when
``hom_apply`` can evaluate it, i.e. its reduced denominator does not vanish
under ``theta``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .errors import (
    FractionFieldMismatch,
    InexactDivision,
    KernelNotNested,
    LatticeNotFound,
    NonInvertibleDenominator,
    NonUnitAssignment,
    PhiNotDefinedOnB,
    SpecializationError,
)
from .exact import linalg
from .exact.cyclotomic import euler_phi
from .exact.hom import denominator_of, hom_apply
from .exact.rings import (
    CyclotomicField,
    Integers,
    PolynomialRing,
    PrimeField,
    Rationals,
)
from .graded import GradedModuleRep


@dataclass(frozen=True)
class Specialization:
    """A ring morphism out of ``source`` (and its localization) into ``target``."""

    name: str
    source: object
    target: object
    assignments: tuple = ()

    @property
    def images(self):
        return dict(self.assignments)

    def __call__(self, x):
        return hom_apply(self.images, x, self.target)

    def is_defined(self, x):
        try:
            self(x)
        except NonInvertibleDenominator:
            return False
        return True

    def algebra(self, alg):
        """``L H``: the algebra with structure constants sent through ``theta``."""
        return alg.map_coefficients(self, self.target, name=f"{alg.name}@{self.name}")

    def describe(self):
        if not self.assignments:
            return f"{self.name}: {self.source} -> {self.target} (canonical)"
        parts = ", ".join(f"{v} -> {x}" for v, x in self.assignments)
        return f"{self.name}: {self.source} -> {self.target}, {parts}"

    def to_json(self):
        return {
            "name": self.name,
            "source": self.source.descriptor(),
            "target": self.target.descriptor(),
            "assignments": {v: str(x) for v, x in self.assignments},
        }


def _root_order(x):
    """Multiplicative order of a root of unity in a cyclotomic field, else None."""
    k = lcm(2, x.ring.e)
    if x ** k != x.ring.one():
        return None
    return min(d for d in range(1, k + 1) if k % d == 0 and x ** d == x.ring.one())


def make_specialization(source, target, assignments, name="theta"):
    """Validate and build a specialization of a polynomial or Laurent ring.

    ``assignments`` maps each variable of ``source`` to an element (or an
    expression string) of ``target``.
    """
    if not isinstance(source, PolynomialRing):
        raise SpecializationError(f"the source of a specialization must be a polynomial or Laurent ring, got {source}")
    missing = [v for v in source.vars if v not in assignments]
    extra = [v for v in assignments if v not in source.vars]
    if missing or extra:
        raise SpecializationError(
            f"assignments must cover exactly the variables {list(source.vars)}"
            + (f"; missing {missing}" if missing else "")
            + (f"; unknown {extra}" if extra else "")
        )
    images = {}
    for v in source.vars:
        x = assignments[v]
        x = target.parse(x) if isinstance(x, str) else target.coerce(x)
        if source.laurent and not x:
            raise NonUnitAssignment(f"Laurent variable {v} must map to a unit of {target}, got 0")
        images[v] = x
    if not target.is_field:
        raise FractionFieldMismatch(f"target {target} is not a field")
    if isinstance(target, PrimeField):
        if isinstance(source.base, Rationals):
            raise FractionFieldMismatch(f"there is no ring map from {source} (containing QQ) to {target}")
    elif isinstance(target, CyclotomicField):
        if target.degree > 1:
            orders = [_root_order(x) for x in images.values()]
            if not any(o is not None and euler_phi(o) == target.degree for o in orders):
                raise FractionFieldMismatch(
                    f"{target} is not generated by the assigned values: no assignment is a root of unity "
                    "generating the field"
                )
    elif not isinstance(target, Rationals):
        raise FractionFieldMismatch(f"unsupported target field {target}; use QQ, GF(p) or a cyclotomic field")
    return Specialization(name, source, target, tuple((v, images[v]) for v in source.vars))


def canonical_map(source, target, name="phi", images=None):
    """A specialization out of a field leaf (used for the second step of a tower)."""
    return Specialization(name, source, target, tuple(sorted((images or {}).items())))


@dataclass(frozen=True)
class Rescaling:
    """``new_basis[i] = scales[i] * old_basis[i]``."""

    scales: tuple

    def is_identity(self):
        return all(s == s.ring.one() for s in self.scales)

    def to_json(self):
        return [str(s) for s in self.scales]

    def __str__(self):
        return "(" + ", ".join(str(s) for s in self.scales) + ")"


def _first_offender(action, theta):
    for m, a in enumerate(action):
        for r, row in enumerate(a):
            for s, x in enumerate(row):
                if x and not theta.is_defined(x):
                    return m, r, s
    return None


def rescale(mod, scales):
    """Conjugate by ``diag(scales)``: the module in the basis ``scales[i] e_i``."""
    inv = [s.inverse() for s in scales]
    action = [
        [[x * scales[s] * inv[r] if x else x for s, x in enumerate(row)] for r, row in enumerate(a)]
        for a in mod.action
    ]
    return GradedModuleRep(mod.algebra, mod.field, mod.degrees, action, mod.name)


def clear_denominators(mod, theta, max_rounds=None):
    """A diagonally rescaled copy of ``mod`` on which ``theta`` is defined.

    Each round scales the basis vector whose column holds the first
    offending entry by that entry's denominator.  Gives up with
    :class:`LatticeNotFound` after ``dim * dim(H)`` rounds.
    """
    n = mod.dim
    one = mod.field.one()
    scales = [one] * n
    cur = mod
    rounds = max_rounds if max_rounds is not None else max(1, n * mod.algebra.dim)
    for _ in range(rounds + 1):
        bad = _first_offender(cur.action, theta)
        if bad is None:
            return cur, Rescaling(tuple(scales))
        m, r, s = bad
        d = mod.field.coerce(denominator_of(cur.action[m][r][s]))
        step = [one] * n
        step[s] = d
        scales[s] = scales[s] * d
        cur = rescale(cur, step)
    m, r, s = bad
    raise LatticeNotFound(
        f"diagonal rescaling of {mod.name} did not clear denominators for {theta.name}: "
        f"entry [{r + 1},{s + 1}] of {mod.algebra.basis[m]} is {cur.action[m][r][s]}"
    )


def modular_reduce(mod, theta, algebra=None):
    """Apply ``theta`` entrywise; the result is a module over ``theta(H)``."""
    alg = algebra if algebra is not None else theta.algebra(mod.algebra)
    action = []
    for m, a in enumerate(mod.action):
        try:
            action.append(linalg.map_matrix(a, theta))
        except NonInvertibleDenominator as exc:
            raise NonInvertibleDenominator(
                f"{mod.name}: action of {mod.algebra.basis[m]} is not defined at {theta.name} ({exc})"
            ) from None
    return GradedModuleRep(alg, theta.target, mod.degrees, action, mod.name)


def reduce_module(mod, theta, algebra=None):
    """Clear denominators, then reduce.  Returns ``(reduced, rescaling)``."""
    lattice, rec = clear_denominators(mod, theta)
    return modular_reduce(lattice, theta, algebra), rec


def in_ring(x, ring):
    """Whether the field element ``x`` lies in the subring ``ring``."""
    if ring.is_field and x.ring == ring:
        return True
    try:
        ring.coerce(x)
    except (InexactDivision, NonInvertibleDenominator, TypeError):
        return False
    return True


def check_integrality(fp, ring):
    """True iff every coefficient of every polynomial in ``fp`` lies in ``ring``."""
    for per_degree in fp.values.values():
        for poly in per_degree.values():
            for _, c in poly.items():
                if not in_ring(c, ring):
                    return False
    return True


# ---------------------------------------------------------------- towers


@dataclass(frozen=True)
class SpecializationTower:
    name: str
    theta: Specialization
    theta_prime: Specialization
    phi: Specialization
    B: str

    def describe(self):
        return (
            f"{self.name}: {self.theta.name} then {self.phi.describe()} gives {self.theta_prime.name}; "
            f"B = {self.B}"
        )


def _b_label(kind, L):
    if kind == "integers":
        return "ZZ" if not isinstance(L, CyclotomicField) or L.degree == 1 else f"ZZ[zeta_{L.e}]"
    if kind == "rationals":
        return "QQ"
    return str(L)


def _in_b(x, kind):
    if kind == "integers":
        if isinstance(x.ring, Rationals):
            return x.data.denominator == 1
        if isinstance(x.ring, CyclotomicField):
            return all(c.denominator == 1 for c in x.data)
        return isinstance(x.ring, (Integers, PrimeField))
    if kind == "rationals":
        if isinstance(x.ring, CyclotomicField):
            return not any(x.data[1:])
        return isinstance(x.ring, (Rationals, Integers))
    return True


def make_tower(theta, theta_prime, B="integers", phi_images=None, algebra=None, name="tower"):
    """Check ``ker theta <= ker theta'`` and build the factoring map ``phi``.

    ``B`` is ``"integers"`` (ZZ, or ZZ[zeta] for a cyclotomic ``L``),
    ``"rationals"`` or ``"L"``.  ``phi`` is canonical on QQ; on a cyclotomic
    ``L`` the image of ``z`` is taken from ``phi_images`` or inferred from a
    variable with ``theta(var) = z``.
    """
    if theta.source != theta_prime.source:
        raise SpecializationError(f"{theta.name} and {theta_prime.name} have different sources")
    if B not in ("integers", "rationals", "L"):
        raise SpecializationError(f"B must be 'integers', 'rationals' or 'L', got {B!r}")
    L, L2 = theta.target, theta_prime.target
    images = {}
    if isinstance(L, CyclotomicField) and L.degree > 1:
        z = L.gen(L.generator)
        given = (phi_images or {}).get(L.generator)
        if given is not None:
            images[L.generator] = L2.parse(given) if isinstance(given, str) else L2.coerce(given)
        else:
            var = next((v for v, x in theta.assignments if x == z), None)
            if var is None:
                raise PhiNotDefinedOnB(
                    f"cannot infer the image of {L.generator} under phi; give it explicitly"
                )
            images[L.generator] = theta_prime.images[var]
        from .exact.cyclotomic import cyclotomic_coeffs

        w = images[L.generator]
        val = sum((w ** i * c for i, c in enumerate(cyclotomic_coeffs(L.e))), L2.zero())
        if val:
            raise PhiNotDefinedOnB(f"phi({L.generator}) = {w} is not a root of Phi_{L.e} in {L2}")
    elif isinstance(L, PrimeField):
        if L2 != L:
            raise PhiNotDefinedOnB(f"no ring map {L} -> {L2} extends to B")
    elif not isinstance(L, (Rationals, CyclotomicField)):
        raise SpecializationError(f"towers out of {L} are not supported")
    phi = canonical_map(L, L2, name=f"phi[{theta.name}->{theta_prime.name}]", images=images)

    def through(x, what):
        try:
            return phi(theta(x))
        except NonInvertibleDenominator:
            raise PhiNotDefinedOnB(f"phi is not defined on theta({what}) = {theta(x)}") from None

    src = theta.source
    for v in src.vars:
        got, want = through(src.gen(v), v), theta_prime(src.gen(v))
        if got != want:
            raise KernelNotNested(
                f"{theta_prime.name} does not factor through {theta.name}: "
                f"phi({theta.name}({v})) = {got} but {theta_prime.name}({v}) = {want}"
            )
    if algebra is not None:
        for (m, n), vec in sorted(algebra.structure.items()):
            for r, c in vec.items():
                got, want = through(c, f"c[{m},{n},{r}]"), theta_prime(c)
                if got != want:
                    raise KernelNotNested(
                        f"structure constant of {algebra.basis[m]}*{algebra.basis[n]} at {algebra.basis[r]}: "
                        f"phi(theta(c)) = {got} but {theta_prime.name}(c) = {want}"
                    )
    # phi must extend to B, and B must contain theta(A)
    if B != "integers" and L2.characteristic and not L.characteristic:
        raise PhiNotDefinedOnB(f"no ring map from {_b_label(B, L)} to {L2}")
    if B == "rationals" and isinstance(L, CyclotomicField) and L.degree > 1:
        raise SpecializationError("B must contain theta(A), which generates a cyclotomic field")
    for v in src.vars:
        x = theta(src.gen(v))
        gens = [x, x.inverse()] if src.laurent else [x]
        for g in gens:
            if not _in_b(g, B):
                raise PhiNotDefinedOnB(f"theta(A) is not contained in B = {_b_label(B, L)}: contains {g}")
    return SpecializationTower(name, theta, theta_prime, phi, _b_label(B, L))
