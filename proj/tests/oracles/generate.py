"""Independent reference values for the C++ tests, computed with sympy.

Run: python3 tests/oracles/generate.py
The printed values are frozen into the *_test.cpp files.
"""
from functools import lru_cache

import sympy as sp
from sympy.polys.orderings import MonomialOrder

a, b, c, t = sp.symbols("a b g t")  # c is gamma


class WeightedRevlex(MonomialOrder):
    """Weighted degree 2/4/6, then fewer b, then fewer g."""
    alias = "wrevlex"
    is_global = True
    is_default = False

    def __call__(self, m):
        return (2 * m[0] + 4 * m[1] + 6 * m[2], -m[1], -m[2])


ORDER = WeightedRevlex()


@lru_cache(None)
def zeta(n):
    if n == 0:
        return sp.Integer(1)
    m = n - 1
    out = a * zeta(m)
    if m >= 1:
        out += m**2 * b * zeta(m - 1)
    if m >= 2:
        out += 2 * m * (m - 1) * c * zeta(m - 2)
    return sp.expand(out)


def zhat(n):
    return 0 if n < 0 else zeta(n) / sp.factorial(n)


def zhat_gn(g, n):
    if n < 0 or n > g:
        return sp.Integer(0)
    return sp.expand(sum(sp.Rational(1, sp.factorial(i)) * sp.binomial(g - i, n - i)
                         * (2 * c)**i * b**(n - i) * zhat(g - n - i) for i in range(n + 1)))


def zhat_extra(g):
    return sp.expand(6 * c * zhat_gn(g, (g - 3) // 2)
                     - sp.Rational(g - 1, 4) * a**2 * zhat_gn(g, (g - 1) // 2))


def fmt(p):
    """Terms in descending order, same text grammar as format_poly."""
    p = sp.Poly(sp.expand(p), a, b, c)
    terms = sorted(p.terms(), key=lambda mc: ORDER(mc[0]), reverse=True)
    out = ""
    for (i, j, k), coeff in terms:
        mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in (("a", i), ("b", j), ("g", k)) if e)
        neg = coeff < 0
        mag = -coeff if neg else coeff
        body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else f"{mag}")
        out += (" - " if neg else " + ") + body if out else ("-" if neg else "") + body
    return out or "0"


def groebner(g):
    gens = [zeta(g), zeta(g + 1), zeta(g + 2)]
    return sp.groebner(gens, a, b, c, order=ORDER)


def series(expr):
    p = sp.Poly(sp.cancel(expr), t)
    return " + ".join(f"{co}*t^{e[0]}" for e, co in sorted(p.terms()))


if __name__ == "__main__":
    for n in (5, 6, 7):
        print(f"zeta_{n}:", fmt(zeta(n)))
    for g, n in ((4, 2), (5, 3), (6, 1), (3, 1)):
        print(f"zhat({g},{n}):", fmt(zhat_gn(g, n)))
    for g in (3, 5):
        print(f"zhat_extra({g}):", fmt(zhat_extra(g)))
    probes = {"g^2": c**2, "a^5": a**5, "a*b*g": a * b * c, "b^3*g": b**3 * c,
              "a^2*g^3": a**2 * c**3, "g^4": c**4}
    for g in (2, 3, 4, 5):
        G = groebner(g)
        lms = sorted((sp.Poly(p, a, b, c).monoms(order=ORDER)[0] for p in G.exprs))
        print(f"GB({g}) leading monomials:", lms)
        for name, p in probes.items():
            print(f"  NF({name}) mod I_{g}:", fmt(G.reduce(p)[1]))
    for g in (2, 3, 4, 5):
        P = ((1 + t**3)**(2 * g) - t**(2 * g) * (1 + t)**(2 * g)) / ((1 - t**2) * (1 - t**4))
        print(f"P(N_{g}):", series(P))
        PI = ((1 - t**(2 * g)) * (1 - t**(2 * g + 2)) * (1 - t**(2 * g + 4))
              / ((1 - t**2) * (1 - t**4) * (1 - t**6)))
        print(f"P_I(N_{g}):", series(PI))
