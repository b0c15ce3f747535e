"""Regenerates tests/data/oracle.json with sympy's factor_list.

Run from the repository root: python3 tests/oracle/gen_oracle.py
"""
import json
import random

from sympy import Poly, symbols, factor_list, cyclotomic_poly, totient, divisors

x = symbols("x")
rng = random.Random(20240607)


def coeffs_ascending(p):
    return [str(c) for c in reversed(Poly(p, x).all_coeffs())]


def to_text(p):
    return str(Poly(p, x).as_expr()).replace("**", "^")


def rand_poly(deg, lo=-5, hi=5):
    cs = [rng.randint(lo, hi) for _ in range(deg)] + [rng.choice([c for c in range(lo, hi + 1) if c])]
    return sum(c * x**i for i, c in enumerate(cs))


def factor_record(expr, d=None):
    content, facs = factor_list(Poly(expr, x))
    out = []
    for f, m in facs:
        f = Poly(f, x)
        if f.LC() < 0:
            f = -f
        if d is not None and f.degree() > d:
            continue
        out.append({"coeffs": coeffs_ascending(f.as_expr()), "mult": int(m)})
    out.sort(key=lambda e: (len(e["coeffs"]), [int(c) for c in e["coeffs"]]))
    return str(content), out


dense = []
for i in range(30):
    parts = []
    for _ in range(rng.randint(1, 4)):
        parts.append((rand_poly(rng.randint(1, 6)), rng.randint(1, 3)))
    if rng.random() < 0.4:
        parts.append((cyclotomic_poly(rng.choice([1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 30]), x), rng.randint(1, 2)))
    if rng.random() < 0.3:
        parts.append((x, rng.randint(1, 3)))
    expr = rng.choice([1, -1, 2, -6]) * 1
    for p, m in parts:
        expr *= p**m
    expr = Poly(expr, x).as_expr()
    if expr == 0:
        continue
    unit, facs = factor_record(expr)
    dense.append({"text": to_text(expr), "unit": unit, "factors": facs})

sparse = []
for i in range(40):
    d = rng.randint(1, 8)
    kind = i % 3
    if kind == 0:
        terms = {rng.randint(0, 200): rng.choice([c for c in range(-20, 21) if c]) for _ in range(rng.randint(2, 8))}
        expr = sum(c * x**e for e, c in terms.items())
    elif kind == 1:
        g = rand_poly(rng.randint(1, 5))
        n = rng.randint(30, 150)
        expr = g * (x**n + rng.choice([1, -1, 2])) * x**rng.randint(0, 3)
    else:
        g = rand_poly(rng.randint(1, 4))
        expr = g**2 * (x**rng.randint(20, 90) - 1) * rand_poly(2)
    expr = Poly(expr, x).as_expr()
    if expr == 0:
        continue
    _, facs = factor_record(expr, d)
    sparse.append({"text": to_text(expr), "d": d, "factors": facs})

cyclo = []
for n, d in [(5040, 2), (5040, 8), (720720, 8), (10**6, 16), (100, 4), (12, 4)]:
    rs = [r for r in divisors(n) if totient(r) <= d]
    cyclo.append({"n": n, "d": d, "orders": [int(r) for r in sorted(rs)],
                  "polys": [coeffs_ascending(cyclotomic_poly(r, x)) for r in sorted(rs)]})

with open("tests/data/oracle.json", "w") as fh:
    json.dump({"dense": dense, "sparse": sparse, "cyclotomic": cyclo}, fh, indent=1)
print(len(dense), len(sparse), len(cyclo))
