"""Internal cross-checks shared by ``hexcactus verify`` and the test-suite."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Tuple

from .asymptotics import (
    asymptotic_report,
    denominator_discriminant,
    dominant_pole_exact,
    sigma1_squared,
)
from .cactus_graph import AttachmentSequence, AttachmentType, AuxVariant, build_aux, build_chain
from .exact_count import HOSOYA, IndexKind, count_brute, count_chain, count_recursive
from .expectation import (
    ORTHO_P,
    ProbabilityTriple,
    UNIFORM_P,
    expect_by_enumeration,
    expect_states,
    gf_closed_form,
    pure_triple,
    series_expand,
    special_case_gf,
)

CHECK_TRIPLES = (
    ProbabilityTriple(1, 0, 0),
    ProbabilityTriple(0, 1, 0),
    ProbabilityTriple(0, 0, 1),
    UNIFORM_P,
    ProbabilityTriple(Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)),
)


def probability_grid() -> List[ProbabilityTriple]:
    """All triples with entries in {0, 1/4, 1/3, 1/2, 1} summing to 1."""
    vals = [Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(1)]
    return [ProbabilityTriple(a, b, 1 - a - b) for a in vals for b in vals if 1 - a - b in vals]


def all_sequences(n: int):
    for choices in itertools.product(AttachmentType, repeat=max(n - 2, 0)):
        yield AttachmentSequence(n, choices)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def check_engines(n_max: int = 4) -> Tuple[bool, str]:
    graphs = 0
    for kind in IndexKind:
        for n in range(n_max + 1):
            for seq in all_sequences(n):
                g = build_chain(seq)
                vals = {count_brute(g, kind), count_recursive(g, kind), count_chain(seq, kind)}
                graphs += 1
                if len(vals) != 1:
                    return False, f"{kind.value} n={n} seq={seq}: {sorted(vals)}"
        for n in range(3):
            for seq in all_sequences(n):
                for pendant in AttachmentType:
                    for variant in AuxVariant:
                        g = build_aux(seq, pendant, variant)
                        graphs += 1
                        if count_brute(g, kind) != count_recursive(g, kind):
                            return False, f"aux {kind.value} n={n} {pendant.name} {variant.name}"
    return True, f"{graphs} graphs agree"


def check_initial_values() -> Tuple[bool, str]:
    for kind, aux0 in ((IndexKind.HOSOYA, 8), (IndexKind.MERRIFIELD_SIMMONS, 13)):
        s = expect_states(1, UNIFORM_P, kind)
        if (s[0].base, s[1].base) != (1, 18) or {s[0].prime, s[0].tilde, s[0].hat} != {aux0}:
            return False, f"{kind.value}: {s[:2]}"
        hexagon = build_chain(AttachmentSequence(1))
        if count_brute(hexagon, kind) != 18:
            return False, f"{kind.value}: hexagon count"
        for variant in AuxVariant:
            if count_brute(build_aux(AttachmentSequence(0), AttachmentType.ORTHO, variant), kind) != aux0:
                return False, f"{kind.value}: P5 count"
    return True, "E0=1, E1=18, pendant initials 8 / 13"


def check_recurrence_vs_gf(n_max: int = 50) -> Tuple[bool, str]:
    for kind in IndexKind:
        for p in CHECK_TRIPLES:
            rec = [s.base for s in expect_states(n_max, p, kind)]
            if rec != series_expand(gf_closed_form(p, kind), n_max + 1):
                return False, f"{kind.value} p=({p})"
    return True, f"{len(CHECK_TRIPLES)} triples x 2 kinds, n <= {n_max}"


def check_enumeration(n_max: int = 6) -> Tuple[bool, str]:
    for kind in IndexKind:
        for p in CHECK_TRIPLES:
            states = expect_states(n_max, p, kind)
            for n in range(n_max + 1):
                if states[n].base != expect_by_enumeration(n, p, kind):
                    return False, f"{kind.value} p=({p}) n={n}"
    return True, f"n <= {n_max}"


def doslic_maloy_mismatches(kind: IndexKind, n_max: int = 50) -> List[Tuple[str, int]]:
    out = []
    for case in AttachmentType:
        ours = series_expand(gf_closed_form(pure_triple(case), kind), n_max + 1)
        theirs = series_expand(special_case_gf(case, kind), n_max + 1)
        out.extend((case.name.lower(), n) for n in range(n_max + 1) if ours[n] != theirs[n])
    return out


def check_doslic_maloy_hosoya() -> Tuple[bool, str]:
    bad = doslic_maloy_mismatches(IndexKind.HOSOYA)
    return not bad, "identical for n <= 50" if not bad else f"mismatches {bad[:5]}"


def check_doslic_maloy_ms() -> Tuple[bool, str]:
    bad = doslic_maloy_mismatches(IndexKind.MERRIFIELD_SIMMONS)
    expected = [(c.name.lower(), 0) for c in AttachmentType]
    return bad == expected, "agree for 1 <= n <= 50; differ at n=0 (1 vs 2)" if bad == expected else f"{bad[:5]}"


def check_sigma1_identity() -> Tuple[bool, str]:
    grid = probability_grid()
    for kind in IndexKind:
        for p in grid:
            if sigma1_squared(p, kind) != denominator_discriminant(gf_closed_form(p, kind)):
                return False, f"{kind.value} p=({p})"
    return True, f"{len(grid)} triples x 2 kinds"


def check_convergence(n: int = 60, tol: float = 1e-6) -> Tuple[bool, str]:
    worst = 0.0
    for kind in IndexKind:
        for p in probability_grid():
            err = float(asymptotic_report(n, p, kind).rel_err_pole)
            worst = max(worst, err)
    if dominant_pole_exact(gf_closed_form(ORTHO_P, HOSOYA)) != (13, Fraction(4, 3)):
        return False, "ortho Hosoya pole is not 13 with amplitude 4/3"
    return worst <= tol, f"max relative error {worst:.3g} at n={n}"


CHECKS: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
    ("initial_values", check_initial_values),
    ("engine_equivalence", check_engines),
    ("recurrence_vs_closed_form", check_recurrence_vs_gf),
    ("enumeration_oracle", check_enumeration),
    ("doslic_maloy_hosoya", check_doslic_maloy_hosoya),
    ("doslic_maloy_ms", check_doslic_maloy_ms),
    ("sigma1_identity", check_sigma1_identity),
    ("pole_convergence", check_convergence),
]


def run_checks() -> List[CheckResult]:
    results = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, ok, detail))
    return results
