#!/usr/bin/env python3
"""Derive the continuous-family tables from explicit group models.

Writes data/families/<name>.json in the datum JSON layout read by
almost_fourier::pairing::datum_from_json. The orbit representatives z of each
cell are inputs; everything else (conjugates, images in the component
groups, adapted flags, characters, |Zbar|) is computed here.

    python3 tools/derive_family_tables.py [outdir]
"""

import itertools
import json
import pathlib
import sys

import sympy as sp

I = sp.I


def scalar_str(v):
    v = sp.nsimplify(v)
    re, im = sp.re(v), sp.im(v)
    if im == 0:
        return str(sp.Rational(re))
    im = sp.Rational(im)
    sign = "+" if im > 0 else "-"
    return f"{sp.Rational(re)}{sign}{abs(im)}*i"


class Finite:
    """Small abelian group given by names and a product on names."""

    def __init__(self, names, mul):
        self.names = list(names)
        self.mul = mul
        self.pos = {n: k for k, n in enumerate(self.names)}

    def table(self):
        return [self.pos[self.mul(a, b)] for a in self.names for b in self.names]

    def characters(self):
        # Homomorphisms into the 4th roots of unity (enough for |D| <= 4).
        roots = [1, I, -1, -I]
        out = []
        for vals in itertools.product(roots, repeat=len(self.names)):
            f = dict(zip(self.names, vals))
            if all(sp.simplify(f[self.mul(a, b)] - f[a] * f[b]) == 0 for a in self.names for b in self.names):
                out.append(f)
        assert len(out) == len(self.names), "group is not abelian of exponent dividing 4"
        return out


def trivial():
    return Finite(["1"], lambda a, b: "1")


def xor(names):
    return Finite(names, lambda a, b: names[names.index(a) ^ names.index(b)])


def label_irreps(d, lam_image, sectors):
    """Label characters: trivial '1', other sector-1 'eps', sector chi
    'chi+' (value 1 or i at r) and 'chi-', or 'chi' when it is alone."""
    out = []
    for f in d.characters():
        sec = None
        for s, vals in sectors:
            if all(sp.simplify(f[lam_image[z]] - vals[z]) == 0 for z in vals):
                sec = s
        if sec is None:
            continue
        if sec == "1":
            label = "1" if all(v == 1 for v in f.values()) else "eps"
        else:
            label = "chi+" if f.get("r") in (1, I) else "chi-"
        out.append((label, sec, f))
    if sum(1 for t in out if t[1] != "1") == 1:
        out = [(("chi" if s != "1" else l), s, f) for l, s, f in out]
    order = {"1": 0, "eps": 1, "chi": 2, "chi+": 2, "chi-": 3}
    out.sort(key=lambda t: order[t[0]])
    return out


def point_json(label, d, lam_image, sectors):
    irreps = label_irreps(d, lam_image, sectors)
    image = {lam_image[z] for z in lam_image}
    assert len(d.names) % len(image) == 0
    return {
        "label": label,
        "group": {"order": len(d.names), "table": d.table(), "names": d.names},
        "lambda_image": {z: d.pos[e] for z, e in lam_image.items()},
        "zbar": len(d.names) // len(image),
        "irreps": [{"label": l, "sector": s, "values": [scalar_str(f[n]) for n in d.names]} for l, s, f in irreps],
    }


def datum_json(name, components, prefactor, lam, sectors, points, cells):
    return {
        "name": name,
        "prefactor": prefactor,
        "lambda": lam,
        "components": [{"label": c, "inverse": inv} for c, inv in components],
        "sectors": [{"label": s, "values": {z: scalar_str(v) for z, v in vals.items()}} for s, vals in sectors],
        "points": points,
        "cells": cells,
    }


# ---------------------------------------------------------------- torus family
def f14():
    # H = H^0 x {1, c} with H^0 a torus; elements (t, e).
    a, b = sp.symbols("a b", nonzero=True)
    lam = ["1", "c"]
    sectors = [("1", {"1": 1, "c": 1}), ("chi", {"1": 1, "c": -1})]
    reps = {"1": (sp.Integer(1), 0), "x": (a, 0), "y": (b, 0)}
    d = xor(["1", "c"])
    points = [point_json(p, d, {"1": "1", "c": "c"}, sectors) for p in reps]
    comps = {"H0": (sp.Integer(1), 0), "H1": (sp.Integer(1), 1)}
    cells = {}
    for x, y in itertools.product(reps, reps):
        for h, z in comps.items():
            # z x z^-1 = x (H abelian); its image in D_y is the c-part of x.
            w = reps[x]
            assert sp.simplify(w[0] * reps[y][0] - reps[y][0] * w[0]) == 0
            cells[f"{x}|{y}|{h}"] = [[d.pos["c" if w[1] else "1"], d.pos["c" if reps[y][1] else "1"], True]]
    return datum_json("F14", [("H0", "H0"), ("H1", "H1")], 2, lam, sectors, points, cells)


# ---------------------------------------------------------------- r^2 = +-1 families
def f15(r_squared_one):
    c = 1 if r_squared_one else -1
    l = sp.Symbol("l", nonzero=True)

    # (mu, s) = g_mu r^s; r g_mu r^-1 = g_{1/mu}; r^2 = g_c.
    def mul(p, q):
        (m1, s1), (m2, s2) = p, q
        m = m1 * (m2 if s1 == 0 else 1 / m2)
        if s1 == 1 and s2 == 1:
            m *= c
        return (sp.simplify(m), (s1 + s2) % 2)

    def inv(p):
        m, s = p
        if s == 0:
            return (sp.simplify(1 / m), 0)
        # (g_m r)^-1 = r^-1 g_{1/m} = g_m r^-1 = g_m g_{1/c} r
        return (sp.simplify(m / c), 1)

    def eq(p, q):
        return p[1] == q[1] and sp.simplify(p[0] - q[0]) == 0

    def conj(z, x):
        return mul(mul(z, x), inv(z))

    one = (sp.Integer(1), 0)
    gm1 = (sp.Integer(-1), 0)
    r = (sp.Integer(1), 1)
    g = (l, 0)
    gi, gmi = (I, 0), (-I, 0)

    zr_names = {"1": one, "g-1": gm1, "r": r, "rg-1": mul(r, gm1)}

    def name_in_zr(p):
        for n, q in zr_names.items():
            if eq(p, q):
                return n
        raise AssertionError(f"{p} not in Z_H(r)")

    dr = Finite(list(zr_names), lambda a, b: name_in_zr(mul(zr_names[a], zr_names[b])))
    d1 = Finite(["H0", "H1"], lambda a, b: "H1" if (a == "H1") != (b == "H1") else "H0")
    dg = trivial()

    reps = {"1": one, "r": r, "g": g}
    dgroups = {"1": d1, "r": dr, "g": dg}

    def image(x, w):
        if x == "1":
            return "H1" if w[1] else "H0"
        if x == "r":
            return name_in_zr(w)
        return "1"

    lam_images = {x: {"1": image(x, one), "g-1": image(x, gm1)} for x in reps}
    sectors = [("1", {"1": 1, "g-1": 1}), ("chi", {"1": 1, "g-1": -1})]
    points = [point_json(x, dgroups[x], lam_images[x], sectors) for x in reps]

    base = {
        ("1", "1"): [one], ("1", "r"): [one], ("1", "g"): [one],
        ("r", "1"): [one], ("g", "1"): [one], ("g", "g"): [one],
        ("r", "g"): [], ("g", "r"): [],
        ("r", "r"): [one, gm1, gi, gmi],
    }
    cells = {}
    for (x, y), zs in base.items():
        for h in ("H0", "H1"):
            recs = []
            for z0 in zs:
                z = z0 if h == "H0" else mul(r, z0)
                w = conj(z, reps[x])
                assert eq(mul(w, reps[y]), mul(reps[y], w)), (x, y, h, z)
                v = conj(inv(z), reps[y])
                recs.append([dgroups[y].pos[image(y, w)], dgroups[x].pos[image(x, v)], True])
            cells[f"{x}|{y}|{h}"] = recs
    # A_{g,r} is empty: z g z^-1 = g_{l^(+-1)} never commutes with r for generic l.
    for s in (0, 1):
        w = conj((sp.Symbol("m", nonzero=True), s), g)
        assert not eq(mul(w, r), mul(r, w))
    name = "F15_rsq1" if r_squared_one else "F15_rsqm1"
    return datum_json(name, [("H0", "H0"), ("H1", "H1")], 1, ["1", "g-1"], sectors, points, cells)


# ---------------------------------------------------------------- PGL2 family
def f112():
    l, m = sp.symbols("l m", nonzero=True)
    M = sp.Matrix

    def proj_eq(a, b):
        # equal in PGL_2: a and b proportional
        return all(sp.simplify(a[i] * b[j] - a[j] * b[i]) == 0 for i in range(4) for j in range(4))

    def conj(z, x):
        return z * x * z.inv()

    def is_involution(a):
        return proj_eq(a * a, sp.eye(2)) and not proj_eq(a, sp.eye(2))

    one = sp.eye(2)
    gm1 = sp.diag(-1, 1)
    r = M([[0, 1], [1, 0]])
    xi = M([[1, 1], [1, -1]])
    assert proj_eq(conj(xi, gm1), r)

    def in_nt_image(a):
        if a[0, 1] == 0 and a[1, 0] == 0:
            return "1"
        if a[0, 0] == 0 and a[1, 1] == 0:
            return "s"
        raise AssertionError("not in N(T)")

    def image(x, w):
        return in_nt_image(w) if x == "g-1" else "1"

    def adapted(a, b):
        # not adapted exactly for pairs conjugate to (g-1, r): two distinct
        # commuting involutions of PGL_2
        return not (is_involution(a) and is_involution(b) and not proj_eq(a, b))

    reps_x = {"1": one, "g-1": gm1, "g": sp.diag(l, 1)}
    reps_y = {"1": one, "g-1": gm1, "g": sp.diag(m, 1)}
    dgroups = {"1": trivial(), "g-1": xor(["1", "s"]), "g": trivial()}
    sectors = [("1", {"1": 1})]
    points = [point_json(x, dgroups[x], {"1": "1"}, sectors) for x in reps_x]

    zs = {
        ("g-1", "g-1"): [one, r, xi, xi * r],
        ("g-1", "g"): [one, r],
        ("g", "g-1"): [one, r.inv()],
        ("g", "g"): [one, r],
    }
    cells = {}
    for x, y in itertools.product(reps_x, reps_y):
        recs = []
        for z in zs.get((x, y), [one]):
            w = conj(z, reps_x[x])
            assert proj_eq(w * reps_y[y], reps_y[y] * w), (x, y)
            v = conj(z.inv(), reps_y[y])
            recs.append([dgroups[y].pos[image(y, w)], dgroups[x].pos[image(x, v)], adapted(w, reps_y[y])])
        cells[f"{x}|{y}|H"] = recs
    return datum_json("F112", [("H", "H")], 1, ["1"], sectors, points, cells)


def main():
    out = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data" / "families"
    out.mkdir(parents=True, exist_ok=True)
    for d in (f14(), f15(True), f15(False), f112()):
        (out / f"{d['name']}.json").write_text(json.dumps(d, indent=1, sort_keys=True) + "\n")
        print(out / f"{d['name']}.json")


if __name__ == "__main__":
    main()
