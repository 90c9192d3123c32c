"""Compare the closed-form burst probabilities with the episode simulator.

The analytic model summarizes the attack at the exit epoch by a single
Poisson count with mean lambda_a * (delta0 + (E[nu] - 1) * delta). The
simulator instead plays out every observation epoch. This demo runs both
and prints the pieces side by side, so the difference in conventions is
visible rather than hidden: the simulated exit is *defined* by crossing
the majority threshold, while the analytic burst probability asks how
often an unconditioned Poisson count would cross it.
"""

from swarmgame import (
    REGULAR,
    SAFETY,
    SwarmParams,
    burst_prob_regular,
    burst_prob_safety,
    estimate,
    prior_safe_prob,
)


def main():
    params = SwarmParams(
        M=20, drone_value=1500.0, lambda_a=1.0, delta0=1.0, delta=1.0
    )
    episodes = 200_000

    regular = estimate(params, REGULAR, episodes=episodes, seed=7)
    safety = estimate(params, SAFETY, episodes=episodes, seed=7, rho=0.5)
    print(f"{episodes} episodes, M = {params.M}, lambda_a = {params.lambda_a:g}")
    print(f"simulated mean exit epoch     : {regular.mean_nu:.3f}")
    print(f"simulated burst rate, Regular : {regular.burst_rate:.4f}")
    print(f"simulated burst rate, Safety  : {safety.burst_rate:.4f}")
    print(f"simulated prior-safe rate     : {regular.prior_safe_rate:.4f}")

    calibrated = SwarmParams(
        M=params.M,
        drone_value=params.drone_value,
        lambda_a=params.lambda_a,
        delta0=params.delta0,
        delta=params.delta,
        expected_nu=regular.mean_nu,
    )
    print(f"\nanalytic q0 at that exit mean : {burst_prob_regular(calibrated):.4f}")
    print(f"analytic q1(rho = 0.5)        : {burst_prob_safety(calibrated, 0.5):.4f}")
    print(f"analytic prior-safe p         : {prior_safe_prob(calibrated):.4f}")


if __name__ == "__main__":
    main()
