#!/usr/bin/env python3
"""High-precision reference values frozen into the C++ test suites.

Evaluated with mpmath adaptive quadrature, independent of the C++ code path.
Units: mass = 1, p0 = 1 (E0 = 1/2); times t = (E0 t) / E0.
Momentum window is [p0 - 12/sigma, p0 + 12/sigma].
"""
import mpmath as mp

mp.mp.dps = 30
E0 = mp.mpf(1) / 2


def gauss_amp(p, sigma, p0=1):
    return (sigma**2 / (2 * mp.pi)) ** mp.mpf(0.25) * mp.exp(-((p - p0) ** 2) * sigma**2 / 4)


def trans(p, res, clamp=True):
    e = p * p / 2
    s = mp.fsum((g * E0) ** 2 / ((e - r * E0) ** 2 + (g * E0) ** 2) for r, g in res)
    return min(s, 1) if clamp else s


def breakpoints(sigma, res):
    a, b = 1 - 12 / mp.mpf(sigma), 1 + 12 / mp.mpf(sigma)
    pts = {a, b}
    for r, g in res:
        pr = mp.sqrt(2 * r * E0)
        for s in (pr, -pr):
            for k in (-4, -1, 0, 1, 4):
                q = mp.sqrt(max(2 * (r + k * g) * E0, 0)) * (1 if s > 0 else -1)
                if a < q < b:
                    pts.add(q)
    return sorted(pts)


def overlap(sigma, res, dt, weighted):
    pts = breakpoints(sigma, res) if weighted else [1 - 12 / mp.mpf(sigma), 1 + 12 / mp.mpf(sigma)]
    def f(p):
        base = gauss_amp(p, sigma) ** 2 * mp.expj(p * p / 2 * dt)
        return base * trans(p, res) if weighted else base
    return mp.quad(f, pts, maxdegree=10)


fig2a = [(mp.mpf("0.41"), mp.mpf("0.0087"))]
fig2b = [(mp.mpf("0.95"), mp.mpf("0.038")), (mp.mpf("3.82"), mp.mpf("0.28"))]

if __name__ == "__main__":
    print("fig2a w          ", mp.nstr(overlap(3.77, fig2a, 0, True).real, 17))
    print("fig2b w (clamp)  ", mp.nstr(overlap(6.04, fig2b, 0, True).real, 17))
    # E0T = 0.05 -> t2 - t1 = 0.1 ; I12 = int |A|^2 exp(iE(t1 - t2))
    dt = -mp.mpf("0.1")
    print("fig2a I12 E0T=.05", mp.nstr(overlap(3.77, fig2a, dt, False), 17))
    print("fig2a T12 E0T=.05", mp.nstr(overlap(3.77, fig2a, dt, True), 17))
    dt = -mp.mpf("0.8")
    print("fig2a I12 E0T=.4 ", mp.nstr(overlap(3.77, fig2a, dt, False), 17))
    # Fig. 3: p0 sigma = 6, t2 - t1 = 9, evaluation time t = 9
    sigma = mp.mpf(6)
    a, b = 1 - 12 / sigma, 1 + 12 / sigma
    print("fig3 I12         ", mp.nstr(mp.quad(lambda p: gauss_amp(p, sigma) ** 2 * mp.expj(-p * p / 2 * 9), [a, b]), 17))
    def psi(x, t):
        return mp.quad(lambda p: gauss_amp(p, sigma) * mp.expj(p * x - p * p / 2 * t), mp.linspace(a, b, 9)) / mp.sqrt(2 * mp.pi)
    for x in (0, 9, 13.5, 18, 30):
        print("fig3 psi1(x=%g,t=9)" % x, mp.nstr(psi(x, 9), 17))
        print("fig3 psi2(x=%g,t=9)" % x, mp.nstr(psi(x, 18), 17))
