"""Warm-up in flat space-time: a static unit cavity at finite temperature.

With no source (M = a = 0) and a non-rotating observer the proper and
coordinate quantities coincide, so this is the textbook Dirichlet slab.
The script prints the vacuum energy, then walks the temperature up and
shows the renormalized free energy, entropy and internal energy along
with the thermodynamic identity U = F + Tp*S that the closed forms obey.
"""

import math

import numpy as np

from kerrcasimir import (
    CavityGeometry,
    EquatorialOrbit,
    KerrParams,
    casimir_report,
    proper_frame,
)

params = KerrParams(M=0.0, a=0.0)
orbit = EquatorialOrbit(r=10.0, Omega=0.0)
cavity = CavityGeometry(L=1.0, S0=1.0)

cold = proper_frame(params, orbit, cavity, T=0.0)
report0 = casimir_report(cold, params, orbit)
print("Flat static unit cavity (Lp = Sp = 1, natural units):")
print(f"  vacuum Casimir energy  E0 = {report0.E0_ren:+.12e}")
print(f"  analytic -pi^2/1440       = {-math.pi**2 / 1440:+.12e}")
print()

# The Legendre residual is normalized by max(|F|, |U|): the internal
# energy itself crosses zero near beta_hat ~ 0.2.
print(f"{'T':>8} {'beta_hat':>9} {'F_ren':>14} {'S_ren':>12} {'U_ren':>14} {'legendre':>10}")
for T in np.geomspace(0.05, 5.0, 9):
    frame = proper_frame(params, orbit, cavity, T=T)
    rep = casimir_report(frame, params, orbit)
    residual = abs(rep.U_ren - (rep.F_ren + frame.Tp * rep.S_ren)) / max(abs(rep.U_ren), abs(rep.F_ren))
    print(f"{T:8.3f} {rep.beta_hat:9.3f} {rep.F_ren:+14.6e} {rep.S_ren:12.5e} "
          f"{rep.U_ren:+14.6e} {residual:10.2e}")

print()
print("Approach to zero temperature (third law): S ~ Tp^2, U - E0 ~ Tp^3")
print(f"{'beta_hat':>9} {'Tp':>10} {'S_ren':>12} {'U_ren - E0':>13}")
for b in (5.0, 10.0, 20.0, 50.0, 100.0):
    T = 1.0 / (2.0 * b)
    frame = proper_frame(params, orbit, cavity, T=T)
    rep = casimir_report(frame, params, orbit)
    print(f"{b:9.1f} {T:10.4f} {rep.S_ren:12.4e} {rep.U_ren - rep.E0_ren:13.4e}")
