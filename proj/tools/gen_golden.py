#!/usr/bin/env python3
"""Write the golden corpus: one file per worked example, exact series at l = 2, 3, 5.

Each expression below is typed in independently of the C++ code.  Output lines
have the form "l=<genus>: (num)/(den)" in the canonical plain-text format of
the library: numerator and denominator coprime in Z[t], no common integer
content, positive leading denominator coefficient, monomials by increasing degree.
"""

import argparse
import pathlib

import sympy as sp

t, l = sp.symbols("t l")
GENERA = (2, 3, 5)


def P(e):
    return 1 + t**e


def M(e):
    return 1 - t**e


EXAMPLES = {
    "u2_even": ("U(2), even degree",
                (1 + t)**(2*l) / (M(2)**2 * M(4)) * (P(3)**(2*l) - t**(2*l + 2) * P(1)**(2*l))),
    "u2_odd": ("U(2), odd degree",
               (1 + t)**(2*l) / (M(2)**2 * M(4)) * (P(3)**(2*l) - t**(2*l) * P(1)**(2*l))),
    "su2": ("SU(2)",
            P(3)**(2*l) / (M(2) * M(4)) - t**(2*l + 2) * P(1)**(2*l) / (M(2) * M(4))),
    "su3": ("SU(3)",
            P(3)**(2*l) * P(5)**(2*l) / (M(2) * M(4)**2 * M(6))
            - 2 * P(1)**(2*l) * P(3)**(2*l) * t**(4*l + 2) / (M(2)**2 * M(4) * M(6))
            + P(1)**(4*l) * t**(6*l + 2) / (M(2)**2 * M(4)**2)),
    "su4": ("SU(4)",
            P(3)**(2*l) * P(5)**(2*l) * P(7)**(2*l) / (M(2) * M(4)**2 * M(6)**2 * M(8))
            - 2 * P(1)**(2*l) * P(3)**(2*l) * P(5)**(2*l) * t**(6*l + 2) / (M(2)**2 * M(4)**2 * M(6) * M(8))
            - P(1)**(2*l) * P(3)**(4*l) * t**(8*l) / (M(2)**3 * M(4)**2 * M(8))
            + 2 * P(1)**(4*l) * P(3)**(2*l) * t**(10*l) / (M(2)**3 * M(4)**2 * M(6))
            + P(1)**(4*l) * P(3)**(2*l) * t**(10*l + 2) / (M(2)**3 * M(4) * M(6)**2)
            - P(1)**(6*l) * t**(12*l) / (M(2)**3 * M(4)**3)),
    "so3_plus": ("SO(3), w2 = 0",
                 -P(1)**(2*l) * t**(2*l + 2) / (M(2) * M(4)) + P(3)**(2*l) / (M(2) * M(4))),
    "so3_minus": ("SO(3), w2 = 1",
                  -P(1)**(2*l) * t**(2*l) / (M(2) * M(4)) + P(3)**(2*l) / (M(2) * M(4))),
    "so5_plus": ("SO(5), w2 = 0",
                 -P(1)**(2*l) * P(3)**(2*l) * t**(6*l + 2) / (M(2)**2 * M(4) * M(8))
                 + P(3)**(2*l) * P(7)**(2*l) / (M(2) * M(4) * M(6) * M(8))
                 + P(1)**(4*l) * t**(8*l) / (M(2)**2 * M(4)**2)
                 - P(1)**(2*l) * P(3)**(2*l) * t**(6*l) / (M(2)**2 * M(4) * M(6))),
    "so5_minus": ("SO(5), w2 = 1",
                  -P(1)**(2*l) * P(3)**(2*l) * t**(6*l - 2) / (M(2)**2 * M(4) * M(8))
                  + P(3)**(2*l) * P(7)**(2*l) / (M(2) * M(4) * M(6) * M(8))
                  + P(1)**(4*l) * t**(8*l - 2) / (M(2)**2 * M(4)**2)
                  - P(1)**(2*l) * P(3)**(2*l) * t**(6*l) / (M(2)**2 * M(4) * M(6))),
    "sp1": ("Sp(1)",
            -P(1)**(2*l) * t**(2*l + 2) / (M(2) * M(4)) + P(3)**(2*l) / (M(2) * M(4))),
    "sp2": ("Sp(2)",
            -P(1)**(2*l) * P(3)**(2*l) * t**(6*l) / (M(2)**2 * M(4) * M(6))
            + P(1)**(4*l) * t**(8*l) / (M(2)**2 * M(4)**2)
            + P(3)**(2*l) * P(7)**(2*l) / (M(2) * M(4) * M(6) * M(8))
            - P(1)**(2*l) * P(3)**(2*l) * t**(6*l + 2) / (M(2)**2 * M(4) * M(8))),
    "sp3": ("Sp(3)",
            -P(1)**(2*l) * P(3)**(2*l) * P(5)**(2*l) * t**(12*l - 4) / (M(2)**2 * M(4)**2 * M(6) * M(8))
            + P(1)**(4*l) * P(3)**(2*l) * t**(16*l - 4) / (M(2)**3 * M(4) * M(6)**2)
            + P(1)**(4*l) * P(3)**(2*l) * t**(16*l - 6) / (M(2)**3 * M(4)**2 * M(6))
            - P(1)**(6*l) * t**(18*l - 6) / (M(2)**3 * M(4)**3)
            + P(3)**(2*l) * P(7)**(2*l) * P(11)**(2*l) / (M(2) * M(4) * M(6) * M(8) * M(10) * M(12))
            - P(1)**(2*l) * P(3)**(2*l) * P(7)**(2*l) * t**(10*l + 2) / (M(2)**2 * M(4) * M(6) * M(8) * M(12))
            - P(1)**(2*l) * P(3)**(4*l) * t**(14*l - 4) / (M(2)**3 * M(4)**2 * M(10))
            + P(1)**(4*l) * P(3)**(2*l) * t**(16*l - 4) / (M(2)**3 * M(4)**2 * M(8))),
    "so4_plus": ("SO(4), w2 = 0",
                 P(1)**(4*l) * t**(4*l + 4) / (M(2)**2 * M(4)**2)
                 - 2 * P(1)**(2*l) * P(3)**(2*l) * t**(2*l + 2) / (M(2)**2 * M(4)**2)
                 + P(3)**(4*l) / (M(2)**2 * M(4)**2)),
    "so4_minus": ("SO(4), w2 = 1",
                  P(1)**(4*l) * t**(4*l) / (M(2)**2 * M(4)**2)
                  - 2 * P(1)**(2*l) * P(3)**(2*l) * t**(2*l) / (M(2)**2 * M(4)**2)
                  + P(3)**(4*l) / (M(2)**2 * M(4)**2)),
    "so6_plus": ("SO(6), w2 = 0",
                 P(1)**(4*l) * P(3)**(2*l) * t**(10*l + 2) / (M(2)**3 * M(4) * M(6)**2)
                 - P(1)**(6*l) * t**(12*l) / (M(2)**3 * M(4)**3)
                 - 2 * P(1)**(2*l) * P(3)**(2*l) * P(5)**(2*l) * t**(6*l + 2) / (M(2)**2 * M(4)**2 * M(6) * M(8))
                 + 2 * P(1)**(4*l) * P(3)**(2*l) * t**(10*l) / (M(2)**3 * M(4)**2 * M(6))
                 + P(3)**(2*l) * P(5)**(2*l) * P(7)**(2*l) / (M(2) * M(4)**2 * M(6)**2 * M(8))
                 - P(1)**(2*l) * P(3)**(4*l) * t**(8*l) / (M(2)**3 * M(4)**2 * M(8))),
    "so6_minus": ("SO(6), w2 = 1",
                  P(1)**(4*l) * P(3)**(2*l) * t**(10*l - 4) / (M(2)**3 * M(4) * M(6)**2)
                  - P(1)**(6*l) * t**(12*l - 4) / (M(2)**3 * M(4)**3)
                  - 2 * P(1)**(2*l) * P(3)**(2*l) * P(5)**(2*l) * t**(6*l - 2) / (M(2)**2 * M(4)**2 * M(6) * M(8))
                  + 2 * P(1)**(4*l) * P(3)**(2*l) * t**(10*l - 2) / (M(2)**3 * M(4)**2 * M(6))
                  + P(3)**(2*l) * P(5)**(2*l) * P(7)**(2*l) / (M(2) * M(4)**2 * M(6)**2 * M(8))
                  - P(1)**(2*l) * P(3)**(4*l) * t**(8*l) / (M(2)**3 * M(4)**2 * M(8))),
}


# Identities among the examples, checked before anything is written.
SU2_TWISTED = (P(3)**(2*l) - t**(2*l) * P(1)**(2*l)) / (M(2) * M(4))
IDENTITIES = [
    ("sp1", "su2", lambda e: e),
    ("so3_plus", "su2", lambda e: e),
    ("sp2", "so5_plus", lambda e: e),
    ("so6_plus", "su4", lambda e: e),
    ("so4_plus", "su2", lambda e: e**2),
]


def check_identities():
    for g in GENERA:
        for lhs, rhs, op in IDENTITIES:
            diff = EXAMPLES[lhs][1].subs(l, g) - op(EXAMPLES[rhs][1].subs(l, g))
            assert sp.cancel(diff) == 0, (lhs, rhs, g)
        diff = EXAMPLES["so4_minus"][1].subs(l, g) - SU2_TWISTED.subs(l, g)**2
        assert sp.cancel(diff) == 0, ("so4_minus", g)


def render_poly(coeffs):
    """coeffs[i] is the coefficient of t^i."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        a = abs(c)
        if not parts:
            sign = "-" if c < 0 else ""
        else:
            sign = " - " if c < 0 else " + "
        if i == 0:
            body = str(a)
        else:
            body = ("" if a == 1 else f"{a}*") + "t" + (f"^{i}" if i > 1 else "")
        parts.append(sign + body)
    return "".join(parts) if parts else "0"


def canonical(expr):
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    pn, pd = sp.Poly(num, t, domain="QQ"), sp.Poly(den, t, domain="QQ")
    g = sp.gcd(pn, pd)
    pn, pd = pn.quo(g), pd.quo(g)
    # Clear rational coefficients, then divide out the joint integer content.
    lcm = sp.ilcm(*[c.q for c in pn.all_coeffs() + pd.all_coeffs()])
    nc = [int(c * lcm) for c in reversed(pn.all_coeffs())]
    dc = [int(c * lcm) for c in reversed(pd.all_coeffs())]
    content = sp.igcd(*[c for c in nc + dc if c != 0])
    if dc[-1] < 0:
        content = -content
    nc = [c // content for c in nc]
    dc = [c // content for c in dc]
    return f"({render_poly(nc)})/({render_poly(dc)})"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", nargs="?", default=str(pathlib.Path(__file__).resolve().parent.parent / "testdata"))
    args = parser.parse_args()
    out = pathlib.Path(args.outdir)
    check_identities()
    out.mkdir(parents=True, exist_ok=True)
    for name, (title, expr) in EXAMPLES.items():
        lines = [f"# {title}: flat series on the orientable surface of genus l"]
        for g in GENERA:
            lines.append(f"l={g}: {canonical(expr.subs(l, g))}")
        (out / f"{name}.txt").write_text("\n".join(lines) + "\n")
        print(f"wrote {name}.txt")


if __name__ == "__main__":
    main()
