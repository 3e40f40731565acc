"""Command-line front end.

Exit codes: 0 success, 1 invalid input or failed validation/check,
2 computation error.  Errors are reported as one line, never a traceback.
"""
from __future__ import annotations

import argparse
import json
import sys

from ..characters import fingerprint, graded_character
from ..decomp import (
    decomposition_matrix,
    evaluate_q1,
    factorization_check,
    ungraded_decomposition_matrix,
    verify_diagram,
)
from ..errors import (
    ExpressionSyntaxError,
    GrDecompError,
    InexactDivision,
    SchemaError,
    SessionValidationError,
    SpecializationError,
    UndeclaredVariable,
)
from ..fixtures import NAMES, fixture_data
from ..session import session_from_dict, load_session
from ..simples import check_split, compute_simples
from ..specialize import clear_denominators, make_tower, modular_reduce

INPUT_ERRORS = (SchemaError, SessionValidationError, ExpressionSyntaxError, UndeclaredVariable, InexactDivision)


class InputError(Exception):
    """Wraps errors that come from reading the session (exit code 1)."""


class CheckFailed(Exception):
    """A check ran to completion and reported a failure (exit code 1)."""

    def __init__(self, payload, text):
        super().__init__(text)
        self.payload = payload
        self.text = text


def _load(args, validate=True):
    try:
        if args.fixture:
            return session_from_dict(fixture_data(args.fixture), validate=validate, source=f"fixture {args.fixture}")
        if not args.session:
            raise SchemaError("give a session file or --fixture NAME")
        return load_session(args.session, validate=validate)
    except INPUT_ERRORS + (SpecializationError,) as exc:
        raise InputError(exc) from exc


def _modules(session, names):
    if not names:
        return list(session.modules)
    return [session.module(n) for n in names]


def _matrix_text(mat):
    return "\n".join("  [" + ", ".join(str(x) for x in row) + "]" for row in mat)


# ---------------------------------------------------------------- commands


def cmd_validate(args):
    session = _load(args, validate=False)
    reports = session.validation_reports()
    payload = {"session": session.name, "ok": all(r.ok for r in reports), "reports": [r.to_json() for r in reports]}
    text = "\n".join(str(r) for r in reports)
    if not payload["ok"]:
        raise CheckFailed(payload, text)
    # towers are only checked once the objects they refer to are valid
    _load(args)
    return payload, text + "\nOK"


def cmd_character(args):
    session = _load(args)
    out, lines = {}, []
    for mod in _modules(session, args.module):
        chi = graded_character(mod)
        out[mod.name] = chi.to_json()
        lines.append(f"graded character of {mod.name}:")
        lines += [f"  {row}" for row in str(chi).splitlines()]
    return out, "\n".join(lines)


def cmd_fingerprint(args):
    session = _load(args)
    out, lines = {}, []
    for mod in _modules(session, args.module):
        fp = fingerprint(mod, depth=args.depth or 1)
        out[mod.name] = fp.to_json()
        lines.append(f"fingerprint of {mod.name}:")
        lines += [f"  {row}" for row in str(fp).splitlines()]
    return out, "\n".join(lines)


def cmd_specialize(args):
    session = _load(args)
    theta = session.specialization(args.spec)
    out, lines = {"specialization": theta.to_json(), "modules": {}}, [theta.describe()]
    for mod in _modules(session, args.module):
        lattice, rec = clear_denominators(mod, theta)
        red = modular_reduce(lattice, theta)
        alg = red.algebra
        out["modules"][mod.name] = {
            "rescaling": rec.to_json(),
            "degrees": list(red.degrees),
            "action": {alg.basis[m]: [[str(x) for x in r] for r in a] for m, a in enumerate(red.action)},
        }
        lines.append(f"{mod.name}: rescaling {rec}, degrees {list(red.degrees)}")
        for m, a in enumerate(red.action):
            if m != alg.unit:
                lines.append(f" {alg.basis[m]} ->")
                lines.append(_matrix_text(a))
    return out, "\n".join(lines)


def cmd_simples(args):
    session = _load(args)
    if args.spec:
        alg = session.specialization(args.spec).algebra(session.algebra)
    else:
        alg = session.algebra
    split = check_split(alg, seed=args.seed)
    S = compute_simples(alg, seed=args.seed)
    payload = {
        "algebra": alg.name,
        "field": alg.ring.descriptor(),
        "split": split,
        "radical_dimension": len(S.radical_basis),
        "simples": [
            {
                "name": s.name,
                "dim": s.dim,
                "degrees": list(s.degrees),
                "action": {alg.basis[m]: [[str(x) for x in r] for r in a] for m, a in enumerate(s.action)},
            }
            for s in S
        ],
    }
    text = f"{alg.name} over {alg.ring}: split, radical of dimension {len(S.radical_basis)}\n" + S.describe()
    return payload, text


def cmd_decompose(args):
    session = _load(args)
    theta = session.specialization(args.spec)
    D = decomposition_matrix(theta, _modules(session, args.module), seed=args.seed)
    at_one = evaluate_q1(D, seed=args.seed)
    payload = D.to_json()
    payload["q1"] = at_one
    payload["ungraded_oracle"] = ungraded_decomposition_matrix(D, seed=args.seed)
    cols = "\n".join(f"  {s.name}: dim {s.dim}, degrees {list(s.degrees)}" for s in D.simples)
    text = (
        f"graded decomposition matrix at {theta.describe()}\n{D.format()}\n"
        f"columns:\n{cols}\nat q=1 (checked against composition series):\n{_matrix_text(at_one)}"
    )
    return payload, text


def cmd_diagram(args):
    session = _load(args)
    theta = session.specialization(args.spec)
    rep = verify_diagram(theta, _modules(session, args.module), depth=args.depth or 2)
    if not rep.ok:
        raise CheckFailed(rep.to_json(), str(rep))
    return rep.to_json(), str(rep)


def cmd_factorcheck(args):
    session = _load(args)
    if args.tower:
        tower = session.tower(args.tower)
    elif args.theta and args.theta_prime:
        tower = make_tower(
            session.specialization(args.theta),
            session.specialization(args.theta_prime),
            args.B,
            algebra=session.algebra,
            name=f"{args.theta}->{args.theta_prime}",
        )
    else:
        raise InputError(SchemaError("give --tower NAME or both --theta and --theta-prime"))
    rep = factorization_check(tower, _modules(session, args.module), seed=args.seed)
    return rep.to_json(), str(rep)


def cmd_fixtures(args):
    if args.name:
        data = fixture_data(args.name)
        return data, json.dumps(data, indent=2)
    return {"fixtures": list(NAMES)}, "\n".join(NAMES)


COMMANDS = {
    "validate": (cmd_validate, "check the algebra and module axioms of a session"),
    "character": (cmd_character, "graded characters of modules"),
    "fingerprint": (cmd_fingerprint, "characteristic-polynomial fingerprints of modules"),
    "specialize": (cmd_specialize, "clear denominators and reduce modules at a specialization"),
    "simples": (cmd_simples, "simple graded modules of an algebra or of a specialization"),
    "decompose": (cmd_decompose, "graded decomposition matrix at a specialization"),
    "diagram": (cmd_diagram, "check that reduction commutes with fingerprints"),
    "factorcheck": (cmd_factorcheck, "check the factorization of decomposition matrices along a tower"),
    "fixtures": (cmd_fixtures, "list the shipped fixtures or print one"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="grdecomp", description="Graded decomposition matrices, computed exactly.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    common.add_argument("--seed", type=int, default=0, help="seed for the randomized splitting (default 0)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name == "fixtures":
            p.add_argument("name", nargs="?", help="fixture to print as JSON")
            continue
        p.add_argument("session", nargs="?", help="session JSON file")
        p.add_argument("--fixture", choices=NAMES, help="use a shipped fixture instead of a file")
        if name != "validate":
            p.add_argument("--module", action="append", help="module name (repeatable; default: all)")
        if name in ("specialize", "decompose", "diagram", "simples"):
            p.add_argument("--spec", required=name != "simples", help="specialization name")
        if name in ("fingerprint", "diagram"):
            p.add_argument("--depth", type=int, help="longest evaluation word (default 1, diagram 2)")
        if name == "factorcheck":
            p.add_argument("--tower", help="tower name from the session")
            p.add_argument("--theta", help="first specialization of an ad hoc tower")
            p.add_argument("--theta-prime", dest="theta_prime", help="second specialization of an ad hoc tower")
            p.add_argument("--B", default="integers", choices=("integers", "rationals", "L"), help="ring B of the ad hoc tower")
    return parser


def _emit(args, payload, text, stream=None):
    stream = stream or sys.stdout
    if args.format == "json":
        stream.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    else:
        stream.write(text + "\n")


def _error(args, exc, code):
    cause = exc.__cause__ if isinstance(exc, InputError) and exc.__cause__ else exc
    kind = type(cause).__name__
    payload = {"error": kind, "message": str(cause)}
    if isinstance(cause, SessionValidationError):
        payload["reports"] = [r.to_json() for r in cause.report]
    if args is not None and getattr(args, "format", "text") == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stderr.write(f"error: {kind}: {cause}\n")
        if isinstance(cause, SessionValidationError):
            for r in cause.report:
                sys.stderr.write(str(r) + "\n")
    return code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        payload, text = func(args)
    except CheckFailed as exc:
        _emit(args, exc.payload, exc.text)
        return 1
    except InputError as exc:
        return _error(args, exc, 1)
    except INPUT_ERRORS as exc:
        return _error(args, exc, 1)
    except GrDecompError as exc:
        return _error(args, exc, 2)
    except Exception as exc:  # noqa: BLE001 - the CLI never shows tracebacks
        return _error(args, exc, 2)
    _emit(args, payload, text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
