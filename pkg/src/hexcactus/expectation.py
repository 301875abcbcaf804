"""Exact expected Hosoya / Merrifield-Simmons indices of the random chain.

Three routes to the same numbers, all in ``fractions.Fraction``:

* ``expect_states`` iterates the coupled recurrences for the base chain and
  the three pendant-path families;
* ``gf_closed_form`` + ``series_expand`` expand the closed-form generating
  function;
* ``expect_by_enumeration`` sums ``count_chain`` over every attachment
  sequence weighted by its probability.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple, Union

from .cactus_graph import AttachmentSequence, AttachmentType, AuxVariant, build_aux
from .exact_count import HOSOYA, IndexKind, SizeLimitExceeded, count_chain, count_recursive

RationalLike = Union[int, str, Fraction]

ENUMERATION_LIMIT = 8


def _exact(x: RationalLike) -> Fraction:
    if isinstance(x, float):
        raise TypeError("probabilities must be exact (int, Fraction or decimal string), not float")
    return Fraction(x)


@dataclass(frozen=True)
class ProbabilityTriple:
    a: Fraction
    b: Fraction
    c: Fraction

    def __init__(self, a: RationalLike, b: RationalLike, c: RationalLike) -> None:
        try:
            vals = [_exact(a), _exact(b), _exact(c)]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"unparsable probability: {exc}") from None
        if any(v < 0 for v in vals):
            raise ValueError(f"probabilities must be non-negative, got {', '.join(map(str, vals))}")
        if sum(vals) != 1:
            raise ValueError(f"probabilities must sum to exactly 1, got {sum(vals)}")
        for name, v in zip("abc", vals):
            object.__setattr__(self, name, v)

    @classmethod
    def parse(cls, text: str) -> "ProbabilityTriple":
        """Parse ``"a,b,c"`` where each entry is ``p/q`` or a terminating decimal."""
        parts = [s.strip() for s in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated probabilities, got {text!r}")
        return cls(*parts)

    def weight(self, t: AttachmentType) -> Fraction:
        return (self.a, self.b, self.c)[t.distance - 1]

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return ",".join(format_rational(v) for v in self.as_tuple())


ORTHO_P = ProbabilityTriple(1, 0, 0)
META_P = ProbabilityTriple(0, 1, 0)
PARA_P = ProbabilityTriple(0, 0, 1)
UNIFORM_P = ProbabilityTriple(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


class ExpectationState(NamedTuple):
    n: int
    base: Fraction
    prime: Fraction
    tilde: Fraction
    hat: Fraction

    def aux(self, variant: AuxVariant) -> Fraction:
        return (self.prime, self.tilde, self.hat)[variant.path_index]


class _Coefficients(NamedTuple):
    # base_n = base_self * base_{n-1} + base_aux * (a prime + b tilde + c hat)_{n-2}
    base_self: int
    base_aux: int
    # aux_n = aux_self[v] * base_n + aux_mix[v] * (a prime + b tilde + c hat)_{n-1}
    aux_self: Tuple[int, int, int]
    aux_mix: Tuple[int, int, int]
    aux_initial: int  # count of the bare pendant path P5


_RECURRENCES = {
    IndexKind.HOSOYA: _Coefficients(8, 10, (5, 3, 4), (3, 5, 4), 8),
    IndexKind.MERRIFIELD_SIMMONS: _Coefficients(5, 8, (5, 3, 4), (3, 7, 5), 13),
}


def expect_states(n_max: int, p: ProbabilityTriple, kind: IndexKind) -> List[ExpectationState]:
    """Expected base and pendant-family indices for n = 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    co = _RECURRENCES[kind]
    one = Fraction(1)
    init = Fraction(co.aux_initial)
    states = [ExpectationState(0, one, init, init, init)]

    def mix(s: ExpectationState) -> Fraction:
        return p.a * s.prime + p.b * s.tilde + p.c * s.hat

    for n in range(1, n_max + 1):
        prev = states[-1]
        if n == 1:
            base = Fraction(18)
        else:
            base = co.base_self * prev.base + co.base_aux * mix(states[-2])
        m = mix(prev)
        aux = [k * base + w * m for k, w in zip(co.aux_self, co.aux_mix)]
        states.append(ExpectationState(n, base, *aux))
    return states


@dataclass(frozen=True)
class RationalGF:
    """``N(x) / D(x)`` with ascending coefficient lists and ``D(0) = 1``."""

    numerator: Tuple[Fraction, ...]
    denominator: Tuple[Fraction, ...]

    def __init__(self, numerator: Sequence[RationalLike], denominator: Sequence[RationalLike]) -> None:
        num = _trim([Fraction(c) for c in numerator])
        den = _trim([Fraction(c) for c in denominator])
        if not den or den[0] == 0:
            raise ValueError("denominator must have a non-zero constant term")
        if den[0] != 1:
            num = [c / den[0] for c in num]
            den = [c / den[0] for c in den]
        object.__setattr__(self, "numerator", tuple(num))
        object.__setattr__(self, "denominator", tuple(den))

    @property
    def recurrence(self) -> Tuple[Fraction, ...]:
        """Coefficients s_k with c_n = num_n + sum_k s_k c_{n-k}."""
        return tuple(-d for d in self.denominator[1:])

    def series(self, n_terms: int) -> List[Fraction]:
        return series_expand(self, n_terms)

    def eval_numerator(self, x):
        return _horner(self.numerator, x)

    def eval_denominator(self, x):
        return _horner(self.denominator, x)

    def eval_denominator_derivative(self, x):
        return _horner([k * c for k, c in enumerate(self.denominator)][1:], x)

    def __str__(self) -> str:
        return f"({_poly_str(self.numerator)})/({_poly_str(self.denominator)})"


def _trim(coeffs: List[Fraction]) -> List[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _horner(coeffs: Sequence, x):
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_str(coeffs: Sequence[Fraction]) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = format_rational(abs(c))
        body = mag if k == 0 else (("" if abs(c) == 1 else mag) + ("x" if k == 1 else f"x^{k}"))
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def series_expand(gf: RationalGF, n_terms: int) -> List[Fraction]:
    """First ``n_terms`` Taylor coefficients of ``gf``."""
    if n_terms < 1:
        raise ValueError("n_terms must be at least 1")
    s = gf.recurrence
    out: List[Fraction] = []
    for n in range(n_terms):
        c = gf.numerator[n] if n < len(gf.numerator) else Fraction(0)
        for k, sk in enumerate(s, start=1):
            if n - k >= 0:
                c += sk * out[n - k]
        out.append(c)
    return out


def gf_closed_form(p: ProbabilityTriple, kind: IndexKind) -> RationalGF:
    """Closed-form generating function of the expected index at ``p``."""
    a, b, c = p.as_tuple()
    if kind is HOSOYA:
        return RationalGF(
            [1, 10 - 3 * a - 5 * b - 4 * c],
            [1, -(8 + 3 * a + 5 * b + 4 * c), -(26 * a - 10 * b + 8 * c)],
        )
    quad = 25 * a - 11 * b + 7 * c
    return RationalGF(
        [1, 13 - 3 * a - 7 * b - 5 * c, quad],
        [1, -(5 + 3 * a + 7 * b + 5 * c), -quad],
    )


# Doslic-Maloy generating functions for the pure ortho/meta/para chains
_DOSLIC_MALOY = {
    (AttachmentType.ORTHO, IndexKind.HOSOYA): ((1, 7), (1, -11, -26)),
    (AttachmentType.META, IndexKind.HOSOYA): ((1, 5), (1, -13, 10)),
    (AttachmentType.PARA, IndexKind.HOSOYA): ((1, 6), (1, -12, -8)),
    (AttachmentType.ORTHO, IndexKind.MERRIFIELD_SIMMONS): ((2, 2), (1, -8, -25)),
    (AttachmentType.META, IndexKind.MERRIFIELD_SIMMONS): ((2, -6), (1, -12, 11)),
    (AttachmentType.PARA, IndexKind.MERRIFIELD_SIMMONS): ((2, -2), (1, -10, -7)),
}


def special_case_gf(case: AttachmentType, kind: IndexKind) -> RationalGF:
    num, den = _DOSLIC_MALOY[(case, kind)]
    return RationalGF(num, den)


def pure_triple(case: AttachmentType) -> ProbabilityTriple:
    return {AttachmentType.ORTHO: ORTHO_P, AttachmentType.META: META_P, AttachmentType.PARA: PARA_P}[case]


def _weighted_sequences(n: int, p: ProbabilityTriple):
    k = max(n - 2, 0)
    for choices in itertools.product(AttachmentType, repeat=k):
        w = Fraction(1)
        for t in choices:
            w *= p.weight(t)
        if w:
            yield w, AttachmentSequence(n, choices)


def expect_by_enumeration(n: int, p: ProbabilityTriple, kind: IndexKind) -> Fraction:
    """Probability-weighted sum of ``count_chain`` over all 3^(n-2) sequences."""
    if n > ENUMERATION_LIMIT:
        raise SizeLimitExceeded(f"enumeration limited to n <= {ENUMERATION_LIMIT}, got n = {n}")
    return sum((w * count_chain(seq, kind) for w, seq in _weighted_sequences(n, p)), Fraction(0))


def expect_aux_by_enumeration(n: int, p: ProbabilityTriple, kind: IndexKind, variant: AuxVariant) -> Fraction:
    """Expected index of the pendant-path graph, by explicit construction and counting.

    The pendant position is itself drawn from ``p``, like another attachment.
    """
    if n > 5:
        raise SizeLimitExceeded(f"auxiliary enumeration limited to n <= 5, got n = {n}")
    total = Fraction(0)
    for w, seq in _weighted_sequences(n, p):
        for pendant in AttachmentType:
            wp = w * p.weight(pendant)
            if wp:
                total += wp * count_recursive(build_aux(seq, pendant, variant), kind)
    return total
