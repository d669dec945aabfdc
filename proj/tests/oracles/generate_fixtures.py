#!/usr/bin/env python3
"""Symbolic oracles for the geometry test fixtures.

Computes Christoffel symbols, scalar curvature and Laplace-Beltrami values
for the closed-form metrics used in the unit tests, fully independently of
the C++ pipeline (plain sympy tensor calculus from the metric components).
Metric inverses are supplied in closed form (all test metrics are of the
shape delta + c(r) u u^T, inverted by the projector identity) so that the
run stays fast. Run once; the printed values are frozen into the tests.
"""
import sympy as sp

x, y, z = sp.symbols("x y z", real=True)
X = [x, y, z]
r = sp.sqrt(x**2 + y**2 + z**2)


def christoffel(g, ginv):
    n = 3
    return [
        [
            [
                sp.Rational(1, 2)
                * sum(
                    ginv[k, l]
                    * (sp.diff(g[j, l], X[i]) + sp.diff(g[i, l], X[j]) - sp.diff(g[i, j], X[l]))
                    for l in range(n)
                )
                for j in range(n)
            ]
            for i in range(n)
        ]
        for k in range(n)
    ]


def scalar_curvature_at(g, ginv, p):
    n = 3
    Gam = christoffel(g, ginv)
    sub = {x: p[0], y: p[1], z: p[2]}
    S = sp.Float(0, 30)
    for i in range(n):
        for j in range(n):
            term = sp.Float(0, 30)
            for k in range(n):
                term += sp.diff(Gam[k][i][j], X[k]).subs(sub) - sp.diff(Gam[k][k][j], X[i]).subs(sub)
                for l in range(n):
                    term += (Gam[k][k][l] * Gam[l][i][j] - Gam[k][i][l] * Gam[l][k][j]).subs(sub)
            S += ginv[i, j].subs(sub) * term
    return sp.N(S, 20)


def laplace_at(g, ginv, u, p):
    n = 3
    Gam = christoffel(g, ginv)
    sub = {x: p[0], y: p[1], z: p[2]}
    out = sp.Float(0, 30)
    for i in range(n):
        for j in range(n):
            t = sp.diff(u, X[i], X[j]).subs(sub)
            for k in range(n):
                t -= (Gam[k][i][j] * sp.diff(u, X[k])).subs(sub)
            out += ginv[i, j].subs(sub) * t
    return sp.N(out, 20)


def radial_metric(A):
    g = sp.Matrix(3, 3, lambda i, j: sp.eye(3)[i, j] + (A - 1) * X[i] * X[j] / r**2)
    ginv = sp.Matrix(3, 3, lambda i, j: sp.eye(3)[i, j] + (1 / A - 1) * X[i] * X[j] / r**2)
    return g, ginv


def main():
    m = sp.Integer(1)
    psi = 1 + m / (2 * r)
    g_schw = sp.eye(3) * psi**4
    ginv_schw = sp.eye(3) * psi**-4

    p = (sp.Integer(6), sp.Integer(8), sp.Integer(0))  # r = 10

    print("== Schwarzschild isotropic m=1, Christoffels at (6,8,0) ==")
    Gam = christoffel(g_schw, ginv_schw)
    sub = {x: p[0], y: p[1], z: p[2]}
    for k in range(3):
        for i in range(3):
            for j in range(i, 3):
                val = sp.N(Gam[k][i][j].subs(sub), 20)
                print(f"Gamma[{k}][{i}][{j}] = {val}")

    print("== Schwarzschild isotropic m=1, S at (6,8,0) ==")
    print(scalar_curvature_at(g_schw, ginv_schw, p))

    print("== Schwarzschild isotropic m=1, Laplace-Beltrami of psi at (6,8,0) and (10,0,0) ==")
    print(laplace_at(g_schw, ginv_schw, psi, p))
    print(laplace_at(g_schw, ginv_schw, psi, (sp.Integer(10), sp.Integer(0), sp.Integer(0))))

    print("== RN slice m=2, Q=1, P=0: S at (3,4,0)  (r=5, expect 2*Q^2/r^4) ==")
    mm, qq = sp.Integer(2), sp.Integer(1)
    A = 1 / (1 - 2 * mm / r + qq**2 / r**2)
    g_rn, ginv_rn = radial_metric(A)
    print(scalar_curvature_at(g_rn, ginv_rn, (sp.Integer(3), sp.Integer(4), sp.Integer(0))))
    print("2*Q^2/r^4 =", sp.N(sp.Rational(2, 625), 20))

    print("== RN slice m=2, Q=1, P=0: S at (6,0,8)  (r=10) ==")
    print(scalar_curvature_at(g_rn, ginv_rn, (sp.Integer(6), sp.Integer(0), sp.Integer(8))))
    print("2*Q^2/r^4 =", sp.N(sp.Rational(2, 10**4), 20))

    print("== conformal exp(2a/r) delta, a=1: Christoffels at (3,0,0) ==")
    a = sp.Integer(1)
    g_conf = sp.eye(3) * sp.exp(2 * a / r)
    ginv_conf = sp.eye(3) * sp.exp(-2 * a / r)
    Gc = christoffel(g_conf, ginv_conf)
    sub3 = {x: sp.Integer(3), y: sp.Integer(0), z: sp.Integer(0)}
    for k in range(3):
        for i in range(3):
            for j in range(i, 3):
                val = sp.N(Gc[k][i][j].subs(sub3), 20)
                if val != 0:
                    print(f"Gamma[{k}][{i}][{j}] = {val}")


if __name__ == "__main__":
    main()
