"""
Growth rates from the dominant pole
===================================

The expected index grows like ``A * lambda**n`` with ``1/lambda`` the
smallest root of the generating-function denominator. The published
closed-form approximations are evaluated alongside for comparison.
"""

import mpmath

from hexcactus import IndexKind, asymptotic_report, dominant_pole, gf_closed_form
from hexcactus.verify import probability_grid

for kind in IndexKind:
    print(f"--- {kind.value}")
    for p in probability_grid():
        pd = dominant_pole(gf_closed_form(p, kind))
        r = asymptotic_report(30, p, kind)
        print(
            f"p=({p})  lambda={mpmath.nstr(pd.growth_rate, 10):>12}  A={mpmath.nstr(pd.amplitude, 8):>10}"
            f"  pole err={mpmath.nstr(r.rel_err_pole, 3):>9}  published err={mpmath.nstr(r.rel_err_printed, 3)}"
        )
