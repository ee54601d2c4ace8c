"""Independent reference values for the test suites.

Series come from sympy's own expansions (series(), integrate()); reversion
uses fixed-point iteration F <- w - sum_{j>=2} a_j F^j, which shares no code
or algorithm with the C++ routes. Run:

    python3 tests/oracle/generate_oracle.py > tests/oracle/oracle_values.json
"""

import json

import sympy as sp

z, w, t = sp.symbols("z w t")


def coeffs(expr, var, n):
    """[var^0 .. var^n] of the Taylor expansion of expr."""
    s = sp.series(expr, var, 0, n + 1).removeO()
    poly = sp.Poly(sp.expand(s), var)
    return [sp.nsimplify(poly.coeff_monomial(var**k)) for k in range(n + 1)]


def truncate(expr, var, n):
    poly = sp.Poly(sp.expand(expr), var)
    return sum(poly.coeff_monomial(var**k) * var**k for k in range(n + 1))


def revert(a, n):
    F = w
    for _ in range(n):
        acc = w
        Fp = F
        for j in range(2, n + 1):
            Fp = truncate(Fp * F, w, n)
            acc -= a[j] * Fp
        F = truncate(acc, w, n)
    return [sp.Poly(F, w).coeff_monomial(w**k) for k in range(n + 1)]


def s(xs):
    return [str(sp.Rational(x)) for x in xs]


def starlike_extremal(A, B, n):
    expr = z * sp.exp(A * z) if B == 0 else z * (1 + B * z) ** ((A - B) / B)
    return coeffs(expr, z, n)


def convex_extremal(A, B, n):
    d = sp.exp(-A * t) if B == 0 else (1 - B * t) ** ((A - B) / B)
    return coeffs(sp.integrate(sp.series(d, t, 0, n + 1).removeO(), (t, 0, z)), z, n)


def noshiro_extremal(B, n):
    d = sp.series((1 - t) / (1 - B * t), t, 0, n + 1).removeO()
    return coeffs(sp.integrate(d, (t, 0, z)), z, n)


def starlike_member(A, B, wexpr, n):
    p = (1 + A * wexpr) / (1 + B * wexpr)
    q = sp.series((p - 1) / z, z, 0, n + 1).removeO()
    return coeffs(z * sp.exp(sp.integrate(q, z)), z, n)


def convex_member(A, B, wexpr, n):
    p = (1 + A * wexpr) / (1 + B * wexpr)
    q = sp.series((p - 1) / z, z, 0, n + 1).removeO()
    d = sp.series(sp.exp(sp.integrate(q, z)), z, 0, n + 1).removeO()
    return coeffs(sp.integrate(d, z), z, n)


def noshiro_member(B, wexpr, n):
    d = sp.series((1 + wexpr) / (1 + B * wexpr), z, 0, n + 1).removeO()
    return coeffs(sp.integrate(d, z), z, n)


def ratio(F, n):
    """[w^k] of F/F'."""
    Fs = sum(c * w**k for k, c in enumerate(F))
    return coeffs(Fs / sp.diff(Fs, w), w, n)


def merom(f, n):
    """b_0..b_n of g = 1/f(1/z) and gt_0..gt_n of g^{-1}(w) - w."""
    fs = sum(c * z**k for k, c in enumerate(f))
    b = coeffs(z / fs, z, n + 1)[1:]
    F = revert(f, n + 2)
    Fs = sum(c * w**k for k, c in enumerate(F))
    gt = coeffs(w / Fs, w, n + 1)[1:]
    return b, gt


R = sp.Rational
out = {"extremals": [], "members": [], "merom": [], "ratios": [], "closed_forms": []}

N = 12
for kind, A, B in [("starlike", 3, 1), ("starlike", 3, 0), ("starlike", R(5, 2), R(-1, 2)),
                   ("convex", 2, 1), ("convex", 3, 1), ("convex", 5, 1), ("convex", 3, 0),
                   ("convex", R(5, 2), R(-1, 2)),
                   ("noshiro", 1, -1), ("noshiro", 1, R(-1, 2)), ("noshiro", 1, 0), ("noshiro", 1, R(1, 2))]:
    A, B = sp.Rational(A), sp.Rational(B)
    if kind == "starlike":
        f = starlike_extremal(A, B, N)
    elif kind == "convex":
        f = convex_extremal(A, B, N)
    else:
        f = noshiro_extremal(B, N)
    out["extremals"].append({"class": kind, "A": str(A), "B": str(B), "f": s(f), "F": s(revert(f, N))})

M = 10
for kind, A, B, j, a, e, sigma in [
        ("starlike", 3, 1, 2, 0, 0, 1),
        ("starlike", 3, 0, 1, R(1, 2), 1, -1),
        ("convex", 3, 1, 1, R(-1, 3), 1, 1),
        ("noshiro", 1, -1, 1, R(1, 3), 1, 1),
        ("noshiro", 1, R(1, 2), 2, R(3, 10), 1, -1)]:
    A, B, a = sp.Rational(A), sp.Rational(B), sp.Rational(a)
    wexpr = sigma * z**j * ((a + z) / (1 + a * z)) ** e
    if kind == "starlike":
        f = starlike_member(A, B, wexpr, M)
    elif kind == "convex":
        f = convex_member(A, B, wexpr, M)
    else:
        f = noshiro_member(B, wexpr, M)
    out["members"].append({"class": kind, "A": str(A), "B": str(B), "j": j, "a": str(a), "e": e,
                           "sigma": sigma, "f": s(f), "F": s(revert(f, M))})

for A, B in [(3, 1), (3, 0)]:
    A, B = sp.Rational(A), sp.Rational(B)
    f = starlike_extremal(A, B, 12)
    b, gt = merom(f, 8)
    out["merom"].append({"A": str(A), "B": str(B), "b": s(b), "gt": s(gt)})

for name, f in [("z-z^2+z^3/3", [0, 1, -1, R(1, 3)] + [0] * 5),
                ("z(1-z)^2", [0, 1, -2, 1] + [0] * 5)]:
    F = revert(f, 8)
    out["ratios"].append({"f": name, "F": s(F), "ratio": s(ratio(F, 8))})

# Convex generalized class at the Caratheodory extremal c_i = 2 (w = z in
# p_1 = (1 + w)/(1 - w)), which gives p = (1 - A z)/(1 - B z).
for A, B in [(3, 1), (3, 0), (R(5, 2), R(-1, 2)), (2, 1), (5, 1), (4, R(1, 2))]:
    A, B = sp.Rational(A), sp.Rational(B)
    p = (1 - A * z) / (1 - B * z)
    q = sp.series((p - 1) / z, z, 0, 7).removeO()
    d = sp.series(sp.exp(sp.integrate(q, z)), z, 0, 7).removeO()
    f = coeffs(sp.integrate(d, z), z, 6)
    out["closed_forms"].append({"A": str(A), "B": str(B), "a": s(f), "gamma": s(revert(f, 6))})

print(json.dumps(out, indent=1))
