"""Walk the reservation-probability cost curve and find its minimum.

The defender can pre-pay allies with probability rho. A higher rho makes
a burst less likely once the attack is detected, but the reservation fee
is paid up front. This demo sweeps the whole curve, shows where the
trade-off turns, and runs the optimizer.
"""

from swarmgame import SwarmParams, min_allies, optimize, sweep, total_cost


def main():
    params = SwarmParams(
        M=20, drone_value=1500.0, lambda_a=1.5, delta0=1.0, delta=1.0
    )
    print(f"swarm of {params.M} drones, value {params.swarm_value:g}")
    print(f"attack rate {params.lambda_a:g}, ally fee {params.ally_unit_cost:g}\n")

    print("rho     fee      burst q1   expected cost")
    for point in sweep(params, 11):
        print(
            f"{point.rho:.1f}  {point.ally_cost:7.2f}   {point.q1:.4f}"
            f"     {point.total:10.2f}"
        )

    result = optimize(params)
    print(f"\noptimal rho*      = {result.rho_star:.6f}")
    print(f"cost at optimum   = {result.cost_star:.2f}")
    print(f"cost with no ally = {total_cost(params, 0.0).total:.2f}")

    requirement = min_allies(params, result.rho_star)
    if requirement.feasible:
        print(f"allies needed to break even: {requirement.n}")
    else:
        print("reservation never pays for itself at this threat level")


if __name__ == "__main__":
    main()
