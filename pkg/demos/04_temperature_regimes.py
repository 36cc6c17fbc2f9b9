"""Low- and high-temperature behavior of the renormalized quantities.

At low temperature (beta_hat >> 1) free energy, entropy and internal
energy follow simple power laws in Tp with exponentially small
corrections carrying the factor e^(-pi/(Lp*Tp)); the script compares the
exact series against those forms and against the printed correction
scale.  At high temperature the complete power expansion of the thermal
correction (quartic black-body, cubic surface, linear classical and
constant terms) is exact to machine precision.
"""

from dataclasses import replace

from kerrcasimir import (
    BetaHat,
    CavityGeometry,
    EquatorialOrbit,
    KerrParams,
    entropy,
    high_T_expansion,
    internal_energy,
    low_T_entropy,
    low_T_free_energy,
    low_T_internal_energy,
    proper_frame,
    thermal_correction_exact,
    total_free_energy,
)

params = KerrParams(M=0.0, a=0.0)
orbit = EquatorialOrbit(r=10.0, Omega=0.0)
cavity = CavityGeometry(L=1.0, S0=1.0)
base = proper_frame(params, orbit, cavity, T=0.0)


def frame_at(b):
    return replace(base, Tp=1.0 / (2.0 * b))


print("Low temperature: deviation of the exact value from the asymptotic")
print("form, in units of the leading exponential correction (-> 1 from above):")
print(f"{'beta_hat':>9} {'F dev/corr':>11} {'S dev/corr':>11} {'U dev/corr':>11}")
for b in (1.5, 2.0, 3.0, 4.0, 5.0):
    f = frame_at(b)
    bh = BetaHat(b)
    Tp = f.Tp
    rF = low_T_free_energy(f, params, orbit, Tp)
    rS = low_T_entropy(f, Tp)
    rU = low_T_internal_energy(f, params, orbit, Tp)
    dF = abs(total_free_energy(f, params, orbit, bh) - rF.value) / abs(rF.leading_correction)
    dS = abs(entropy(f, bh) - rS.value) / abs(rS.leading_correction)
    dU = abs(internal_energy(f, params, orbit, bh) - rU.value) / abs(rU.leading_correction)
    print(f"{b:9.2f} {dF:11.4f} {dS:11.4f} {dU:11.4f}")

print()
print("High temperature: the complete power expansion vs the exact series:")
print(f"{'beta_hat':>9} {'exact':>20} {'expansion':>20} {'rel diff':>10}")
for b in (0.2, 0.1, 0.05, 0.02):
    f = frame_at(b)
    exact = thermal_correction_exact(f, BetaHat(b))
    approx = high_T_expansion(f, f.Tp)
    print(f"{b:9.2f} {exact:+20.12e} {approx:+20.12e} {abs(exact - approx) / abs(exact):10.2e}")

print()
print("Entropy stays positive in both regimes and interpolates in between:")
print(f"{'beta_hat':>9} {'S_ren':>12}")
for b in (0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 20.0):
    f = frame_at(b)
    print(f"{b:9.2f} {entropy(f, BetaHat(b)):12.5e}")
