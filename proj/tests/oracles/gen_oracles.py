#!/usr/bin/env python3
"""Regenerate the frozen oracle values used by the tests.

    python3 tests/oracles/gen_oracles.py > tests/oracles/oracles.hpp

Needs mpmath. Values are printed with 25 significant digits; the tests
compare against enclosures, so the last digits never matter.
"""
import random

import mpmath as mp

mp.mp.dps = 40


def g(x):
    return mp.nstr(mp.mpf(x), 25)


scalars = {}


def put(name, value):
    scalars[name] = g(value)


put("one_third", mp.mpf(1) / 3)
put("e", mp.e)
put("gamma_1_5", mp.gamma(1.5))
put("gamma_10", mp.gamma(10))
put("zeta_2", mp.zeta(2))
put("zeta_3", mp.zeta(3))
put("zeta_half", mp.zeta(0.5))
put("zeta_0", mp.zeta(0))
put("first_zero", mp.im(mp.zetazero(1)))
put("abs_zeta_1_100i", abs(mp.zeta(mp.mpc(1, 100))))
put("log_abs_gamma_half_100i", mp.re(mp.loggamma(mp.mpc(0.5, 100))))
put("abs_gamma_2_50i", abs(mp.gamma(mp.mpc(2, 50))))
put("abs_cos_10i", abs(mp.cos(mp.pi * mp.mpc(0, 10) / 2)))
put("abs_cos_half_20i", abs(mp.cos(mp.pi * mp.mpc(0.5, 20) / 2)))
put("omega_100", mp.mpf(10000) / 9996)
put("F1_half_half", mp.sqrt(mp.pi) / (2 * mp.sqrt(2)))
put("F6_reflected_100", mp.mpf(100) / (100 - 2 * mp.pi))
put("P1_half", 1 / (4 * mp.pi))
put("P2_half", (2 * mp.euler - mp.log(mp.pi)) / (4 * mp.pi))
put("D_half", mp.mpf(32) / 3 + 2 * mp.euler - 1)
put("log_100", mp.log(100))

# zeta(s) - 1/(s-1) close to the pole
for i, (a, b) in enumerate([(0.9, 0.1), (1.1, -0.05), (0.8, 0.2), (1.0, 0.01)]):
    s = mp.mpc(a, b)
    v = mp.zeta(s) - 1 / (s - 1)
    put(f"zreg{i}_re", mp.re(v))
    put(f"zreg{i}_im", mp.im(v))

# Lemma 3.6 left side at sigma = upsilon = 1/2, T = 10^3
T = mp.mpf(1000)
X = int(mp.floor((T - mp.sqrt(T)) / (2 * mp.pi)))
d = [0] * (X + 1)
for k in range(1, X + 1):
    for j in range(k, X + 1, k):
        d[j] += 1
put("L36_half_T1000", mp.fsum(d[n] / (mp.sqrt(n) * (T - 2 * mp.pi * n)) for n in range(1, X + 1)))

# mean squares by quadrature on unit panels at 20 digits
mp.mp.dps = 20
for tau, name in [(0.5, "ms_half_150"), (0.25, "ms_quarter_150"), (0.75, "ms_3q_150")]:
    f = lambda t: abs(mp.zeta(mp.mpc(tau, t))) ** 2
    put(name, mp.fsum(mp.quad(f, [k, k + 1]) for k in range(150)))
mp.mp.dps = 40

# zeta on the real axis for the Prop 2.4 grid
alphas = [mp.mpf(k) / 20 for k in range(1, 20)] + [1 + mp.mpf(k) / 20 for k in range(1, 41)]
zeta_alpha = [(g(a), g(mp.zeta(a))) for a in alphas]

# random points for ball containment
rng = random.Random(20240611)
points = []
for _ in range(1000):
    sigma = rng.uniform(-0.5, 1.5)
    t = rng.uniform(2.0, 200.0)
    rad = 10 ** rng.uniform(-6, -2)
    z = mp.zeta(mp.mpc(sigma, t))
    points.append((repr(sigma), repr(t), repr(rad), g(mp.re(z)), g(mp.im(z))))

print("#pragma once")
print()
print("// generated by gen_oracles.py (mpmath %s); do not edit" % mp.__version__)
print()
print("namespace oracle {")
print()
for k, v in scalars.items():
    print(f'inline constexpr const char* {k} = "{v}";')
print()
print("struct RealZeta {")
print("  const char* alpha;")
print("  const char* value;")
print("};")
print("inline constexpr RealZeta zeta_real_grid[] = {")
for a, v in zeta_alpha:
    print(f'    {{"{a}", "{v}"}},')
print("};")
print()
print("struct ZetaPoint {")
print("  double sigma, t, rad;")
print("  const char* re;")
print("  const char* im;")
print("};")
print("inline constexpr ZetaPoint zeta_points[] = {")
for s, t, r, re, im in points:
    print(f'    {{{s}, {t}, {r}, "{re}", "{im}"}},')
print("};")
print()
print("}  // namespace oracle")
