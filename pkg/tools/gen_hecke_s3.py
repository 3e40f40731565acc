"""Write the Hecke S3 fixture (Iwahori-Matsumoto basis, quadratic relation (T-v)(T+1)=0)."""
import json
import sys

from sympy import Matrix, expand, simplify, symbols

v = symbols("v")
WORDS = {"1": (), "T1": (1,), "T2": (2,), "T12": (1, 2), "T21": (2, 1), "T121": (1, 2, 1)}


def perm_of(word):
    p = (0, 1, 2)
    for s in word:
        q = list(p)
        q[s - 1], q[s] = q[s], q[s - 1]
        p = tuple(q)
    return p


LABEL = {perm_of(w): k for k, w in WORDS.items()}
LENGTH = {perm_of(w): len(w) for w in WORDS.values()}


def left_simple(s, vec):
    """T_s * sum c_w T_w."""
    out = {}
    for w, c in vec.items():
        sw = list(w)
        # left multiplication by s acts on positions: s o w, i.e. swap values s, s+1
        sw = tuple(s if x == s - 1 else s - 1 if x == s else x for x in w)
        if LENGTH[sw] > LENGTH[w]:
            out[sw] = out.get(sw, 0) + c
        else:
            out[w] = out.get(w, 0) + (v - 1) * c
            out[sw] = out.get(sw, 0) + v * c
    return {k: expand(x) for k, x in out.items() if expand(x) != 0}


def product(x, y):
    vec = {perm_of(WORDS[y]): 1}
    for s in reversed(WORDS[x]):
        vec = left_simple(s, vec)
    return vec


assert len(LABEL) == 6
products = {}
for x in WORDS:
    for y in WORDS:
        if x == "1" or y == "1":
            continue
        products[f"{x}*{y}"] = {LABEL[w]: str(c).replace("**", "^") for w, c in product(x, y).items()}

T1 = Matrix([[-1, 1], [0, v]])
T2 = Matrix([[v, 0], [v, -1]])
assert simplify(T1 * T2 * T1 - T2 * T1 * T2) == Matrix.zeros(2)
for T in (T1, T2):
    assert simplify((T - v * Matrix.eye(2)) * (T + Matrix.eye(2))) == Matrix.zeros(2)


def rep(gens):
    out = {}
    for k, w in WORDS.items():
        if not w:
            continue
        m = Matrix.eye(gens[1].shape[0])
        for s in w:
            m = m * gens[s]
        out[k] = [[str(expand(x)).replace("**", "^") for x in row] for row in m.tolist()]
    return out


one = Matrix([[v]])
sign = Matrix([[-1]])
session = {
    "format": "grdecomp-session",
    "version": 1,
    "name": "hecke_s3_e3",
    "description": "Iwahori-Hecke algebra of S3 over QQ[v,v^-1], trivially graded; specialized at a primitive cube root of unity",
    "ring": {"kind": "laurent-ring", "base": {"kind": "rationals"}, "vars": ["v"]},
    "algebra": {
        "name": "H3",
        "basis": list(WORDS),
        "degrees": [0] * 6,
        "unit": "1",
        "products": products,
    },
    "modules": [
        {"name": "triv", "field": "K", "degrees": [0], "action": rep({1: one, 2: one})},
        {"name": "sign", "field": "K", "degrees": [0], "action": rep({1: sign, 2: sign})},
        {"name": "refl", "field": "K", "degrees": [0, 0], "action": rep({1: T1, 2: T2})},
    ],
    "specializations": [
        {"name": "zeta3", "target": {"kind": "cyclotomic-field", "e": 3}, "assignments": {"v": "z"}}
    ],
    "towers": [],
}
json.dump(session, sys.stdout, indent=2)
sys.stdout.write("\n")
