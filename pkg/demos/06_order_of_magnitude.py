#!/usr/bin/env python3
"""How large can the effect get?  Order-of-magnitude scenarios.

Everything funnels through the dimensionless envelope F(x) of the flight
phase x = omega*T, peaking near x = 3.34 at F = 96.4.  With the squeeze
saturated (window average -> -1/3) the recoherence exponent becomes a
product of small factors: the fine-structure constant, the mode
confinement or beam phase space, and the squared excursion rate (R/T)^2.
Two benchmark setups - a single squeezed cavity mode and an empty-space
squeezed beam - land around 1e-7 .. 1e-6 for modest parameters.
"""

from recoherence import (
    CavityScenario,
    EmptySpaceScenario,
    cavity_estimate,
    cavity_estimate_exact,
    coupling_envelope,
    empty_space_estimate,
    locate_envelope_max,
)


def main():
    x_star, f_star = locate_envelope_max()
    print(f"coupling envelope peaks at x = {x_star:.6f} with F = {f_star:.4f}")
    print(f"{'x':>6} {'F(x)':>10}")
    for x in (0.5, 1.0, 2.0, x_star, 5.0, 10.0, 20.0):
        print(f"{x:6.2f} {coupling_envelope(x):10.4f}")

    print()
    print("cavity scenario: lambda^3-sized cavity, R = lambda, varying R/T")
    print(f"{'R/T':>6} {'flight phase':>13} {'averaged':>12} {'exact':>12}")
    for ratio in (0.05, 0.1, 0.3, 1.0):
        scn = CavityScenario.from_ratios(ratio)
        print(
            f"{ratio:6.2f} {scn.flight_phase:13.3f} "
            f"{cavity_estimate(scn):12.3e} {cavity_estimate_exact(scn):12.3e}"
        )
    print("(the exact column dives wherever the flight phase hits an")
    print(" envelope zero; the averaged column smooths the sin^2 factor)")

    print()
    print("empty-space beam: 10% bandwidth, 0.1 sr, flight phase at the peak")
    print(f"{'R/T':>6} {'estimate':>12}")
    for ratio in (0.03, 0.1, 0.3):
        scn = EmptySpaceScenario(
            ratio_rt=ratio, bandwidth_ratio=0.1, solid_angle=0.1, flight_phase=3.34
        )
        print(f"{ratio:6.2f} {empty_space_estimate(scn):12.3e}")

    print()
    print("raising any knob helps quadratically (rate) or linearly (band,")
    print("angle, confinement) - but the two-thirds unitarity ceiling and")
    print("the subluminal bound R/T < 0.65 cap the budget well below 1.")


if __name__ == "__main__":
    main()
