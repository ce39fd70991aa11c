#!/usr/bin/env python3
"""Arbitrary-precision reference values for the proxy-label formulas.

Evaluates p_init, p_prior, and lambda with mpmath at 60 decimal digits over a
grid that covers both branches of the truncation rule (|L| <= delta vs
|L| > delta, including |L| == delta exactly) and both branches of the prior
rule (P_pos <= 0.5 vs > 0.5, clamped and unclamped), plus the lambda == 0.5
boundary. The output is a C++ include file consumed by the unit and
acceptance tests; regenerate with:

    python3 scripts/proxy_reference.py > tests/support/proxy_expected.inc
"""

import mpmath as mp

mp.mp.dps = 60

EPSILON = mp.mpf("0.0002")
DELTA = 500


def p_init(gamma, n_labeled, eps, delta):
    if n_labeled > delta:
        return mp.mpf(1)
    return mp.power(gamma, 1 + mp.e ** (-eps * delta * n_labeled))


def p_prior(prior_pos, n_universe, eps):
    growth = mp.power(1 + eps, n_universe)
    if prior_pos <= mp.mpf("0.5"):
        return min(prior_pos * growth, mp.mpf("0.5"))
    return 1 - min((1 - prior_pos) * growth, mp.mpf("0.5"))


GAMMAS = ["0.25", "0.5", "1", "2", "4"]
LABELED = [10, 50, 499, 500, 501, 600]
PRIORS = ["0.1", "0.3", "0.5", "0.7", "0.9"]
UNIVERSES = [100, 178, 846, 2000, 10000]


def main():
    rows = []
    for g in GAMMAS:
        for l in LABELED:
            for p in PRIORS:
                for u in UNIVERSES:
                    gamma = mp.mpf(g)
                    prior = mp.mpf(p)
                    pi = p_init(gamma, l, EPSILON, DELTA)
                    pp = p_prior(prior, u, EPSILON)
                    lam = pi * pp
                    rows.append((g, l, p, u, pi, pp, lam))

    print("// Generated by scripts/proxy_reference.py (mpmath, 60 digits).")
    print("// Columns: gamma, n_labeled, prior_pos, n_universe,")
    print("//          p_init, p_prior, lambda.")
    print("// epsilon = 0.0002, delta = 500 throughout.")
    for g, l, p, u, pi, pp, lam in rows:
        print(
            "{%s, %d, %s, %d, %s, %s, %s}," % (
                g, l, p, u,
                mp.nstr(pi, 17), mp.nstr(pp, 17), mp.nstr(lam, 17),
            )
        )


if __name__ == "__main__":
    main()
