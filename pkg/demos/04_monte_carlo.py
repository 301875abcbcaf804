"""
Monte Carlo against the exact expectation
=========================================

Each trial has its own counter-based random stream, so the estimate
depends only on the seed, never on how trials are scheduled.
"""

import mpmath

from hexcactus import IndexKind, ProbabilityTriple, expect_states, monte_carlo

p = ProbabilityTriple.parse("1/3,1/3,1/3")
n = 10
for kind in IndexKind:
    est = monte_carlo(n, p, 20_000, seed=0x5EED, kind=kind)
    exact = expect_states(n, p, kind)[n].base
    z = (est.mean - mpmath.mpf(exact.numerator) / exact.denominator) / est.std_err
    print(f"{kind.value}: mean {mpmath.nstr(est.mean, 12)}  exact {float(exact):.12g}  z = {mpmath.nstr(z, 3)}")
