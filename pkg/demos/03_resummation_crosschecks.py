"""Three independent routes to the thermal correction, side by side.

The thermal correction to the cavity free energy can be evaluated as
(i) the resummed hyperbolic single sum, (ii) the raw double sum over the
mode number and the logarithm-expansion index, and (iii) direct adaptive
quadrature of the per-mode transverse momentum integral.  They must
agree; this is the core cross-validation the `kerrcasimir validate`
subcommand automates, together with the black-body quadrature and the
finite-difference thermodynamics checks.
"""

from dataclasses import replace

from kerrcasimir import (
    BetaHat,
    CavityGeometry,
    EquatorialOrbit,
    KerrParams,
    blackbody_density,
    blackbody_quadrature,
    double_sum_free_energy,
    proper_frame,
    quadrature_free_energy,
    thermal_correction_exact,
    thermal_correction_resummed_form,
)

params = KerrParams(M=0.0, a=0.0)
orbit = EquatorialOrbit(r=10.0, Omega=0.0)
cavity = CavityGeometry(L=1.0, S0=1.0)
base = proper_frame(params, orbit, cavity, T=0.0)


def rel(x, y):
    scale = max(abs(x), abs(y))
    return abs(x - y) / scale if scale else 0.0


print("Unrenormalized thermal correction, unit cavity (Sp = Lp = 1):")
print(f"{'beta_hat':>9} {'hyperbolic sum':>22} {'vs double sum':>14} {'vs quadrature':>14} {'vs single-sum form':>19}")
for b in (0.1, 0.5, 1.0, 2.0, 5.0):
    frame = replace(base, Tp=1.0 / (2.0 * b))
    bh = BetaHat(b)
    closed = thermal_correction_exact(frame, bh)
    print(f"{b:9.2f} {closed:+22.14e} {rel(closed, double_sum_free_energy(frame, bh)):14.2e} "
          f"{rel(closed, quadrature_free_energy(frame, bh)):14.2e} "
          f"{rel(closed, thermal_correction_resummed_form(frame, bh)):19.2e}")

print()
print("Black-body free-energy density: momentum quadrature vs -pi^2 Tp^4/90")
print(f"{'Tp':>6} {'quadrature':>18} {'closed form':>18} {'rel diff':>10}")
for Tp in (0.5, 1.0, 2.0):
    q = blackbody_quadrature(Tp)
    d = blackbody_density(Tp)
    print(f"{Tp:6.2f} {q:+18.10e} {d:+18.10e} {rel(q, d):10.2e}")

print()
print("Run `kerrcasimir validate` for the full machine-checked table.")
