#!/usr/bin/env python3
"""Independent brute-force oracle for the quadop engine.

Everything here is deliberately naive: trees are nested tuples, ideals are
built by literal substitution into relations followed by wrapping in
arbitrary contexts, and ranks come from textbook Gaussian elimination.
Values printed by this script are frozen into the Rust test suites.
"""
from fractions import Fraction
from itertools import permutations, product
import re
import sys

P = 1000003


def trees(labels):
    labels = tuple(labels)
    if len(labels) == 1:
        return [labels[0]]
    out = []
    n = len(labels)
    # every ordered split of the label set into a left and right part
    for mask in range(1, (1 << n) - 1):
        left = tuple(l for i, l in enumerate(labels) if mask >> i & 1)
        right = tuple(l for i, l in enumerate(labels) if not mask >> i & 1)
        for a in trees(left):
            for b in trees(right):
                out.append((a, b))
    return out


def leaves(t):
    return [t] if isinstance(t, int) else leaves(t[0]) + leaves(t[1])


def subst(t, m):
    return m[t] if isinstance(t, int) else (subst(t[0], m), subst(t[1], m))


def render(t, names="abcdefg"):
    if isinstance(t, int):
        return names[t - 1]
    return "(" + render(t[0], names) + "*" + render(t[1], names) + ")"


# ---- tiny parser, independent of the engine -------------------------------
def parse(src):
    """Parse 'coef term +- ...' with letters sorted alphabetically -> labels."""
    src = src.replace(" ", "")
    if "=" in src:
        lhs, rhs = src.split("=")
    else:
        lhs, rhs = src, "0"
    letters = sorted(set(re.findall(r"[a-z]", src)))
    lab = {c: i + 1 for i, c in enumerate(letters)}
    out = {}

    def side(s, sign):
        pos = 0
        if s == "0":
            return
        while pos < len(s):
            sg = 1
            if s[pos] in "+-":
                sg = -1 if s[pos] == "-" else 1
                pos += 1
            m = re.match(r"(\d+)(/(\d+))?\*?", s[pos:])
            c = Fraction(1)
            if m and m.group(0):
                c = Fraction(int(m.group(1)), int(m.group(3) or 1))
                pos += m.end()
            t, pos = prod(s, pos)
            out[t] = out.get(t, 0) + sign * sg * c

    def prim(s, pos):
        if s[pos] == "(":
            t, pos = prod(s, pos + 1)
            assert s[pos] == ")"
            return t, pos + 1
        return lab[s[pos]], pos + 1

    def prod(s, pos):
        a, pos = prim(s, pos)
        if pos < len(s) and s[pos] == "*":
            b, pos = prim(s, pos + 1)
            return (a, b), pos
        return a, pos

    side(lhs, 1)
    side(rhs, -1)
    return {k: v for k, v in out.items() if v != 0}


# ---- linear algebra ---------------------------------------------------------
def rank_rows(rows, ncols, mod=None):
    piv = {}
    r = 0
    for row in rows:
        v = dict(row)
        if mod:
            v = {k: (x.numerator * pow(x.denominator, -1, mod)) % mod for k, x in v.items()}
            v = {k: x for k, x in v.items() if x}
        while v:
            c = min(v)
            if c in piv:
                f = v[c]
                for k, x in piv[c].items():
                    nv = v.get(k, 0) - f * x
                    if mod:
                        nv %= mod
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
            else:
                inv = pow(v[c], -1, mod) if mod else 1 / v[c]
                v = {k: (x * inv) % mod if mod else x * inv for k, x in v.items()}
                piv[c] = v
                r += 1
                break
    return r, piv


def rref(vecs):
    """Fully reduced echelon form: pivot column -> row."""
    _, piv = rank_rows(vecs, None)
    for c in sorted(piv, reverse=True):
        row = piv[c]
        for d in piv:
            if d != c and c in piv[d]:
                f = piv[d][c]
                new = dict(piv[d])
                for k, x in row.items():
                    nv = new.get(k, 0) - f * x
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                piv[d] = new
    return piv


def span_basis(vecs, ncols):
    _, piv = rank_rows(vecs, ncols)
    return piv


def in_span(v, piv):
    v = dict(v)
    while v:
        c = min(v)
        if c not in piv:
            return False
        f = v[c]
        for k, x in piv[c].items():
            nv = v.get(k, 0) - f * x
            if nv:
                v[k] = nv
            else:
                v.pop(k, None)
    return True


def same_span(a, b, ncols):
    ra, pa = rank_rows(a, ncols)
    rb, pb = rank_rows(b, ncols)
    return ra == rb and all(in_span(v, pa) for v in b)


# ---- degree three -----------------------------------------------------------
T3 = trees((1, 2, 3))
I3 = {t: i for i, t in enumerate(T3)}


def vec3(d):
    return {I3[t]: c for t, c in d.items()}


def relabel(d, s):
    return {subst(t, s): c for t, c in d.items()}


def s3_close(rels):
    out = []
    for r in rels:
        for p in permutations((1, 2, 3)):
            out.append(relabel(r, {1: p[0], 2: p[1], 3: p[2]}))
    return out


def sign(seq):
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


def gk(t, right_sign=-1):
    lv = leaves(t)
    return sign(lv) * (1 if isinstance(t[0], tuple) else right_sign)


def dual(rels, right_sign=-1):
    # annihilator of span(rels) under the diagonal pairing
    rows = [vec3(r) for r in s3_close(rels)]
    _, piv = rank_rows(rows, 12)
    basis = list(piv.values())
    # solve  sum_t r_t g_t y_t = 0  for y
    eqs = [{k: v * gk(T3[k], right_sign) for k, v in b.items()} for b in basis]
    ep = rref(eqs)
    free = [c for c in range(12) if c not in ep]
    sol = []
    for f in free:
        y = {f: Fraction(1)}
        for c, row in ep.items():
            if f in row:
                y[c] = -row[f]
        sol.append(y)
    return sol


# ---- operadic ideal by substitution + contexts ------------------------------
def ideal_rows(rels, n):
    rels = s3_close(rels)
    labels = tuple(range(1, n + 1))
    memo = {}

    def elems(labs):
        """All spanning elements of the ideal on the label set `labs`."""
        if labs in memo:
            return memo[labs]
        out = []
        k = len(labs)
        # relation at the root, arbitrary trees substituted into its inputs
        for assign in product(range(3), repeat=k):
            if len(set(assign)) < 3:
                continue
            blocks = [tuple(l for l, a in zip(labs, assign) if a == j) for j in range(3)]
            for t1 in trees(blocks[0]):
                for t2 in trees(blocks[1]):
                    for t3 in trees(blocks[2]):
                        m = {1: t1, 2: t2, 3: t3}
                        for r in rels:
                            out.append({subst(t, m): c for t, c in r.items()})
        # relation strictly below the root
        for mask in range(1, (1 << k) - 1):
            a = tuple(l for i, l in enumerate(labs) if mask >> i & 1)
            b = tuple(l for i, l in enumerate(labs) if not mask >> i & 1)
            if len(a) < 3:
                continue
            for x in elems(a):
                for y in trees(b):
                    out.append({(t, y): c for t, c in x.items()})
                    out.append({(y, t): c for t, c in x.items()})
        memo[labs] = out
        return out

    return elems(labels)


def dims(rels, nmax, mod=None):
    res = [1, 2]
    for n in range(3, nmax + 1):
        tn = trees(tuple(range(1, n + 1)))
        idx = {t: i for i, t in enumerate(tn)}
        rows = []
        seen = set()
        for e in ideal_rows(rels, n):
            v = {idx[t]: c for t, c in e.items() if c != 0}
            key = tuple(sorted(v.items()))
            if key in seen or not v:
                continue
            seen.add(key)
            rows.append(v)
        r, _ = rank_rows(rows, len(tn), mod)
        res.append(len(tn) - r)
    return res


# ---- series ----------------------------------------------------------------
def hilbert(ds):
    from math import factorial
    return [Fraction((-1) ** n * d, factorial(n)) for n, d in enumerate(ds, start=1)]


def compose(f, g, N):
    # f, g: coefficient lists for t^1..t^N
    def mul(a, b):
        c = [Fraction(0)] * N
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                if i + j + 1 < N:
                    c[i + j + 1] += x * y
        return c

    res = [Fraction(0)] * N
    power = list(g[:N])
    for k in range(N):
        for i in range(N):
            res[i] += f[k] * power[i]
        power = mul(power, g)
    return res


PRESETS = {
    "magma": [],
    "assoc": ["(a*b)*c - a*(b*c) = 0"],
    "novikov-right": ["a*(b*c) - (a*b)*c - a*(c*b) + (a*c)*b = 0", "a*(b*c) - b*(a*c) = 0"],
    "novikov-left": ["a*(b*c) - (a*b)*c - b*(a*c) + (b*a)*c = 0", "(a*b)*c - (a*c)*b = 0"],
    "prelie-right": ["a*(b*c) - (a*b)*c - a*(c*b) + (a*c)*b = 0"],
    "perm?1": ["(a*b)*c - a*(b*c) = 0", "(a*b)*c - (b*a)*c = 0"],
    "perm?2": ["(a*b)*c - a*(b*c) = 0", "a*(b*c) - a*(c*b) = 0"],
    "leibniz": ["(a*b)*c - (a*c)*b - a*(b*c) = 0"],
    "zinbiel?1": ["(a*b)*c - a*(b*c) - a*(c*b) = 0"],
    "zinbiel?2": ["a*(b*c) - (a*b)*c - (b*a)*c = 0"],
}

NOVIKOV_REWRITES = [
    "b*(a*c) = a*(b*c)",
    "c*(a*b) = a*(c*b)",
    "c*(b*a) = b*(c*a)",
    "(a*c)*b = (a*b)*c + a*(c*b) - a*(b*c)",
    "(b*c)*a = -a*(b*c) + b*(c*a) + (b*a)*c",
    "(c*b)*a = (c*a)*b - a*(c*b) + b*(c*a)",
]

NOVIKOV_U_CONDITIONS = [
    "(u*v)*w - (u*w)*v = 0",
    "-(v*w)*u - u*(v*w) + v*(u*w) + (u*w)*v = 0",
    "-w*(u*v) + (w*v)*u + u*(w*v) - (u*w)*v = 0",
    "-(v*u)*w + (v*w)*u = 0",
    "w*(v*u) + (v*w)*u - (w*v)*u - v*(w*u) = 0",
    "-(w*v)*u + (w*u)*v = 0",
]


def rels_of(name):
    return [parse(s) for s in PRESETS[name]]


def main():
    nmax = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    print("counts", [len(trees(tuple(range(1, n + 1)))) for n in range(1, 6)])
    print("degree-3 order", [render(t) for t in T3])
    for name in PRESETS:
        rel = rels_of(name)
        r3, _ = rank_rows([vec3(r) for r in s3_close(rel)], 12)
        d = dims(rel, nmax)
        line = f"{name}: relspace dim {r3}, dims {d}"
        if nmax < 5:
            line += f", dims5 mod p {dims(rel, 5, P)}"
        print(line)
    for conv in (-1, 1):
        print(f"-- pairing with right-comb sign {conv:+d}")
        for name in PRESETS:
            dv = dual(rels_of(name), conv)
            match = [m for m in PRESETS if same_span(dv, [vec3(r) for r in s3_close(rels_of(m))], 12)]
            print(f"   dual({name}) dim {len(dv)} equals {match}")
    nr = [vec3(r) for r in s3_close(rels_of("novikov-right"))]
    _, pn = rank_rows(nr, 12)
    for s in NOVIKOV_REWRITES:
        print("rewrite", s, in_span(vec3(parse(s)), pn))
    print("assoc in right-Novikov", in_span(vec3(parse("(a*b)*c - a*(b*c)")), pn))
    nl = [vec3(r) for r in s3_close(rels_of("novikov-left"))]
    _, pl = rank_rows(nl, 12)
    for s in NOVIKOV_U_CONDITIONS:
        print("condition", s, in_span(vec3(parse(s)), pl))
    h = hilbert([1, 2, 6, 20, 70])
    print("H novikov", h)
    print("H(H)", compose(h, h, 5))
    ha = hilbert([1, 2, 6, 24, 120])
    print("H assoc", ha, "H(H)", compose(ha, ha, 5))
    hm = hilbert([1, 2, 12, 120])
    hn = hilbert([1, 2, 0, 0])
    print("magma o nil", compose(hm, hn, 4))
    hp = hilbert([1, 2, 9, 64, 625])
    hq = hilbert([1, 2, 3, 4, 5])
    print("prelie o perm", compose(hp, hq, 5))


if __name__ == "__main__":
    main()
