"""Independent symbolic oracle for the family polynomials.

Builds P_k, f1, f2 and the derived quotients straight from the defining
recursions with sympy, using exact rationals, and writes them to
tests/data/sympy_fixtures.json. The C++ suite compares against this file.

    python3 tests/oracle/sympy_fixtures.py [output.json]
"""

import json
import sys
import pathlib

import sympy as sp

lam = sp.Symbol("lam")


def constants(n):
    c = []
    for k in range(1, n):
        c.append(2 * k - 1 + sum((k - j) * c[j - 1] for j in range(1, k)))
    d = {n - 1: 1}
    for k in range(n - 2, 0, -1):
        d[k] = sum((j - k) * d[j] for j in range(k + 1, n)) + n - k
    d = [d[k] for k in range(1, n)]
    N = 2 * n * (sum(d) + 1)
    return c, d, N


def choose_eps(n, r):
    _, _, N = constants(n)
    bound = sp.Rational(1, 6) ** N * r / (n + 2)
    m = 0
    while not sp.Rational(1, 10**m) < bound:
        m += 1
    return sp.Rational(1, 10**m)


def family(n, r=sp.Rational(1, 5)):
    c, d, N = constants(n)
    eps = choose_eps(n, r)
    P = {}
    P[n - 1] = eps ** c[n - 2] - lam
    for k in range(n - 2, 0, -1):
        prod = sp.Integer(1)
        for j in range(k + 1, n):
            prod *= P[j] ** (j - k)
        P[k] = sp.expand(eps ** c[k - 1] - prod * lam ** (n - k))
    f1 = eps * lam**n
    f2 = eps**2 * lam
    for j in range(1, n):
        f1 *= P[j] ** j
        f2 *= P[j]
    return eps, c, d, N, P, sp.expand(f1), sp.expand(f2)


def coeffs(p):
    poly = sp.Poly(sp.expand(p), lam)
    out = [sp.Rational(x) for x in reversed(poly.all_coeffs())]
    while out and out[-1] == 0:
        out.pop()
    return [f"{x.p}/{x.q}" for x in out]


def main():
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    data = {}
    for n in (2, 3, 4):
        eps, c, d, N, P, f1, f2 = family(n)
        entry = {
            "eps": f"{eps.p}/{eps.q}",
            "c": c,
            "d": d,
            "N": N,
            "P": [coeffs(P[k]) for k in range(1, n)],
            "f1": coeffs(f1),
            "f2": coeffs(f2),
        }
        # lemma div quotients
        divq = []
        for k in range(1, n):
            head = eps ** (2 * k - 1)
            for j in range(1, k):
                head *= P[j] ** (k - j)
            tail = lam ** (n - k)
            for j in range(k + 1, n):
                tail *= P[j] ** (j - k)
            q, r = sp.div(sp.expand(head - tail), P[k], lam)
            assert r == 0
            divq.append(coeffs(q))
        entry["div_quotients"] = divq
        q, r = sp.div(sp.expand(f2**n), f1, lam)
        assert r == 0
        entry["window_quotient"] = coeffs(q)
        # k = n-1 cone factor
        q1 = eps ** (2 * n - 1)
        for j in range(1, n):
            q1 *= P[j] ** (n - j)
        entry["Q1"] = coeffs(q1 - 1)
        # vanishing orders
        entry["orders"] = [min(sp.Poly(f1, lam).monoms())[0], min(sp.Poly(f2, lam).monoms())[0]]
        data[str(n)] = entry
    default = pathlib.Path(__file__).resolve().parent.parent / "data" / "sympy_fixtures.json"
    out = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else default
    out.write_text(json.dumps(data, indent=1) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
