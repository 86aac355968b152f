"""Independent derivation of the expected values used by the C++ tests.

Exact character tables are written down in closed form (roots of the
defining quadratics, roots of unity) and every derived quantity is computed
symbolically with sympy; tuple counts come from brute-force enumeration of
S3. Run with --check to verify that derived.json is up to date.
"""

import argparse
import itertools
import json
import pathlib
import sys

import mpmath

mpmath.mp.dps = 80
import sympy as sp

DIGITS = 60
x = sp.Symbol("x")
HERE = pathlib.Path(__file__).resolve().parent


def num(e):
    v = sp.N(e, DIGITS + 10)
    parts = []
    for part in (sp.re(v), sp.im(v)):
        parts.append("0" if part == 0 else mpmath.nstr(mpmath.mpf(str(part)), DIGITS, min_fixed=1, max_fixed=0))
    return parts


def minpoly(e):
    e = sp.nsimplify(e) if e.is_number and e.is_rational else e
    if sp.simplify(e) == 0:
        return [0, 1]
    p = sp.Poly(sp.minimal_polynomial(e, x), x)
    c = [int(v) for v in reversed(p.all_coeffs())]
    if c[-1] < 0:
        c = [-v for v in c]
    return c


# Character tables: rows are characters, columns basis elements; row 0 is the
# Frobenius-Perron character.
phi = (1 + sp.sqrt(5)) / 2


def fibonacci():
    return [[1, phi], [1, 1 - phi]]


def ising():
    r2 = sp.sqrt(2)
    return [[1, 1, r2], [1, 1, -r2], [1, -1, 0]]


def rep_s3():
    # basis 1, sign, standard; rows: identity, 3-cycle, transposition classes
    return [[1, 1, 2], [1, 1, -1], [1, -1, 0]]


def cyclic(n):
    w = sp.exp(2 * sp.pi * sp.I / n)
    return [[sp.expand_complex(w ** (j * k)) for j in range(n)] for k in range(n)]


def product(a, b):
    return [[ra[i] * rb[j] for i in range(len(ra)) for j in range(len(rb))] for ra in a for rb in b]


RINGS = {
    "fibonacci": fibonacci(),
    "ising": ising(),
    "rep_s3": rep_s3(),
    "cyclic_3": cyclic(3),
    "cyclic_4": cyclic(4),
    "fib_x_fib": product(fibonacci(), fibonacci()),
}


def ring_data(table):
    r = len(table[0])
    d = [sp.nsimplify(v) for v in table[0]]
    dimC = sp.simplify(sum(v ** 2 for v in d))
    alpha = [sp.simplify(sum(sp.Abs(v) ** 2 for v in row)) for row in table]
    dimZ = [sp.simplify(dimC / a) for a in alpha]
    out = {
        "fpdim": num(dimC)[0],
        "dims": [num(v)[0] for v in d],
        "characters": [{"values": [num(v) for v in row], "codegree": num(a)[0]}
                       for row, a in zip(table, alpha)],
        "dimZ": [num(z)[0] for z in dimZ],
    }
    isaacs = {}
    for s_text, s in (("0", sp.Integer(0)), ("1/2", sp.Rational(1, 2)), ("1", sp.Integer(1))):
        rows = []
        for rho, row in enumerate(table):
            for i in range(r):
                lam = dimC ** s * dimZ[rho] ** (1 - s) * row[i] / d[i]
                rows.append({"rho": rho, "basis": i, "minpoly": minpoly(sp.simplify(lam))})
        isaacs[s_text] = rows
    out["isaacs"] = isaacs
    frob = {}
    for s_text, s in (("1/2", sp.Rational(1, 2)), ("1", sp.Integer(1))):
        frob[s_text] = [minpoly(sp.simplify(dimC ** (2 * s + 1) / v ** 2)) for v in d]
    out["frobenius_type"] = frob
    if r <= 4:
        strong = []
        k = len(table)
        for t in itertools.combinations_with_replacement(range(k), 3):
            I3 = sum(table[t[0]][i] * table[t[1]][i] * table[t[2]][i] / d[i] for i in range(r))
            J = dimZ[t[0]] * dimZ[t[1]] * dimZ[t[2]] * I3
            seen = set()
            for p, q in itertools.combinations(range(3), 2):
                if (t[p], t[q]) in seen:
                    continue
                seen.add((t[p], t[q]))
                rest = [t[m] for m in range(3) if m not in (p, q)]
                v = sp.simplify(J / (dimC * sp.sqrt(dimZ[t[p]] * dimZ[t[q]])))
                strong.append({"tuple": [t[p], t[q]] + rest, "value": num(v), "minpoly": minpoly(v)})
        out["strong_isaacs_n3"] = strong
    return out


def s3_counts():
    elems = list(itertools.permutations(range(3)))

    def mul(a, b):
        return tuple(a[b[i]] for i in range(3))

    def order(g):
        e, h, n = tuple(range(3)), g, 1
        while h != e:
            h, n = mul(h, g), n + 1
        return n

    classes = {o: [g for g in elems if order(g) == o] for o in (1, 2, 3)}
    out = {"class_sizes_by_order": {str(o): len(c) for o, c in classes.items()}}
    for n in (3, 4):
        counts = {}
        for labels in itertools.product((1, 2, 3), repeat=n):
            c = 0
            for gs in itertools.product(*(classes[o] for o in labels)):
                h = tuple(range(3))
                for g in gs:
                    h = mul(h, g)
                if h == tuple(range(3)):
                    c += 1
            counts[",".join(map(str, labels))] = c
        out["n%d" % n] = counts
    return out


def counterexample():
    # basis 1, x, y with x^2 = 1 + 2y, xy = yx = 2x + y, y^2 = 1 + x + 2y
    N = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for j in range(3):
        N[0][j][j] = N[j][0][j] = 1
    N[1][1] = [1, 0, 2]
    N[1][2] = N[2][1] = [0, 2, 1]
    N[2][2] = [1, 1, 2]
    L = [mpmath.matrix([[N[i][j][m] for j in range(3)] for m in range(3)]) for i in range(3)]
    H = L[1] + mpmath.mpf("0.37") * L[2]
    _, V = mpmath.eigsy(H)
    chars = []
    for s in range(3):
        v = V[:, s]
        chars.append([(v.T * L[i] * v)[0] / (v.T * v)[0] for i in range(3)])
    fp = max(range(3), key=lambda s: sum(chars[s]))
    d = chars[fp]
    best = None
    for t in itertools.combinations_with_replacement(range(3), 3):
        val = sum(chars[t[0]][i] * chars[t[1]][i] * chars[t[2]][i] / d[i] for i in range(3))
        if best is None or val < best[0]:
            best = (val, [chars[t[k]] for k in range(3)])
    value, rows = best
    # J_{3,0}(rho, rho, rho) / (dimC dimZ_rho) for the violating character,
    # identified by PSLQ independently of the lattice code.
    rho = rows[0]
    dimC = sum(v ** 2 for v in d)
    dimZ = dimC / sum(v ** 2 for v in rho)
    strong = dimZ ** 2 * value / dimC
    poly = None
    for deg in range(1, 7):
        poly = mpmath.pslq([strong ** k for k in range(deg + 1)], maxcoeff=10 ** 6, maxsteps=10 ** 6)
        if poly:
            break
    poly = [int(c) for c in poly]
    if poly[-1] < 0:
        poly = [-c for c in poly]
    return {
        "strong_isaacs_value": mpmath.nstr(strong, DIGITS, min_fixed=1, max_fixed=0),
        "strong_isaacs_minpoly": poly,
        "I3_min": mpmath.nstr(value, DIGITS, min_fixed=1, max_fixed=0),
        "I3_min_characters": [[mpmath.nstr(v, 30) for v in row] for row in rows],
        "fp_dims": [mpmath.nstr(v, DIGITS) for v in d],
    }


def examples():
    return [
        {"label": "phi", "value": num(phi), "minpoly": minpoly(phi)},
        {"label": "1/2", "value": num(sp.Rational(1, 2)), "minpoly": minpoly(sp.Rational(1, 2))},
        {"label": "3", "value": num(sp.Integer(3)), "minpoly": minpoly(sp.Integer(3))},
        {"label": "sqrt2", "value": num(sp.sqrt(2)), "minpoly": minpoly(sp.sqrt(2))},
        {"label": "zeta5", "value": num(sp.exp(2 * sp.pi * sp.I / 5)),
         "minpoly": minpoly(sp.exp(2 * sp.pi * sp.I / 5))},
        {"label": "(1+sqrt5)/4", "value": num(phi / 2), "minpoly": minpoly(phi / 2)},
    ]


def derive():
    return {
        "digits": DIGITS,
        "rings": {name: ring_data(t) for name, t in RINGS.items()},
        "s3": s3_counts(),
        "lpw_counterexample": counterexample(),
        "minpoly_examples": examples(),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", action="store_true", help="compare with derived.json instead of writing")
    args = ap.parse_args()
    text = json.dumps(derive(), indent=1, sort_keys=True) + "\n"
    target = HERE / "derived.json"
    if args.check:
        if target.read_text() != text:
            print("derived.json is out of date; rerun derive.py", file=sys.stderr)
            return 1
        print("derived.json is up to date")
        return 0
    target.write_text(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
