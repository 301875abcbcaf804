"""
Expected indices of the random chain
====================================

Recurrences, closed-form generating functions and brute enumeration give
the same exact rationals.
"""

from fractions import Fraction

from hexcactus import IndexKind, ProbabilityTriple, expect_by_enumeration, expect_states, gf_closed_form, series_expand
from hexcactus.cactus_graph import AttachmentType
from hexcactus.expectation import pure_triple, special_case_gf

p = ProbabilityTriple(Fraction(1, 2), Fraction(1, 4), Fraction(1, 4))

for kind in IndexKind:
    gf = gf_closed_form(p, kind)
    rec = [s.base for s in expect_states(8, p, kind)]
    ser = series_expand(gf, 9)
    enum = [expect_by_enumeration(n, p, kind) for n in range(7)]
    print(kind.value, gf)
    print("  recurrence  ", [str(x) for x in rec])
    print("  series match", rec == ser, " enumeration match", rec[:7] == enum)

# %%
# The pendant-path families that drive the recurrences
for s in expect_states(3, p, IndexKind.HOSOYA):
    print(s.n, s.base, s.prime, s.tilde, s.hat)

# %%
# Pure ortho/meta/para chains against the earlier published generating
# functions: Merrifield-Simmons differs only in the constant term.
for case in AttachmentType:
    ours = series_expand(gf_closed_form(pure_triple(case), IndexKind.MERRIFIELD_SIMMONS), 5)
    theirs = series_expand(special_case_gf(case, IndexKind.MERRIFIELD_SIMMONS), 5)
    print(case.name.lower(), [int(x) for x in ours], [int(x) for x in theirs])
