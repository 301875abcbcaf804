"""Dominant-pole growth laws for the expected indices.

The pole analysis is the reference. ``printed_asymptotic`` evaluates the
published closed-form approximations term by term as written, including
their odd factors, and is only ever compared against, never trusted.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

import mpmath
from mpmath import mp, mpf

from .exact_count import HOSOYA, IndexKind
from .expectation import ProbabilityTriple, RationalGF, expect_states, format_rational, gf_closed_form

DPS = 40


class DegenerateDenominator(ValueError):
    pass


class NoRealRoot(ValueError):
    pass


def _mpf(x) -> mpf:
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


@dataclass(frozen=True)
class PoleData:
    dominant_root: mpf
    growth_rate: mpf
    amplitude: mpf
    secondary_root: Optional[mpf] = None


def dominant_pole(gf: RationalGF) -> PoleData:
    """Smallest-modulus real zero of the denominator and the matching amplitude.

    With ``x*`` the zero, ``c_n ~ A * x*^-n`` where ``A = -N(x*) / (x* D'(x*))``.
    """
    den = gf.denominator
    if len(den) < 2:
        raise DegenerateDenominator("constant denominator has no pole")
    if len(den) > 3:
        raise DegenerateDenominator("only linear and quadratic denominators are supported")
    with mp.workdps(DPS):
        if len(den) == 2:
            root = -1 / _mpf(den[1])
            secondary = None
        else:
            # d2 x^2 + d1 x + 1 = 0, roots written to avoid cancellation
            d1, d2 = _mpf(den[1]), _mpf(den[2])
            disc = d1 * d1 - 4 * d2
            if disc < 0:
                raise NoRealRoot(f"denominator {gf.denominator} has complex roots")
            sq = mpmath.sqrt(disc)
            q = -(d1 + mpmath.sign(d1) * sq) / 2 if d1 != 0 else sq / 2
            r1, r2 = q / d2, 1 / q
            root, secondary = (r1, r2) if abs(r1) < abs(r2) else (r2, r1)
            if abs(root) == abs(secondary):
                raise NoRealRoot("no unique dominant real root")
        amp = -gf.eval_numerator(root) / (root * gf.eval_denominator_derivative(root))
        return PoleData(root, 1 / root, amp, secondary)


def dominant_pole_exact(gf: RationalGF) -> Optional[Tuple[Fraction, Fraction]]:
    """``(growth_rate, amplitude)`` as exact rationals when the dominant root is rational."""
    den = gf.denominator
    if len(den) == 2:
        root = -1 / den[1]
    elif len(den) == 3:
        disc = den[1] ** 2 - 4 * den[2]
        sq = _rational_sqrt(disc)
        if sq is None:
            return None
        roots = [(-den[1] + s) / (2 * den[2]) for s in (sq, -sq)]
        root = min(roots, key=abs)
    else:
        return None
    amp = -gf.eval_numerator(root) / (root * gf.eval_denominator_derivative(root))
    return 1 / root, amp


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    num, den = mpmath.libmp.isqrt(x.numerator), mpmath.libmp.isqrt(x.denominator)
    if num * num == x.numerator and den * den == x.denominator:
        return Fraction(num, den)
    return None


def pole_approx(pd: PoleData, n: int) -> mpf:
    with mp.workdps(DPS):
        return pd.amplitude * pd.growth_rate**n


def sigma1_squared(p: ProbabilityTriple, kind: IndexKind) -> Fraction:
    """The published polynomial under the square root of sigma_1."""
    a, b, c = p.as_tuple()
    if kind is HOSOYA:
        return 9*a*a + 30*a*b + 24*a*c + 152*a + 25*b*b + 40*b*c + 40*b + 16*c*c + 96*c + 64
    return 9*a*a + 42*a*b + 30*a*c + 130*a + 49*b*b + 70*b*c + 26*b + 25*c*c + 78*c + 25


def denominator_discriminant(gf: RationalGF) -> Fraction:
    """``s^2 + 4t`` for a denominator ``1 - s x - t x^2``."""
    s, t = (list(gf.recurrence) + [Fraction(0), Fraction(0)])[:2]
    return s * s + 4 * t


@dataclass(frozen=True)
class PrintedAsymptoticParams:
    sigma1: mpf
    sigma2: mpf
    sigma3: Optional[mpf] = None


def printed_params(p: ProbabilityTriple, kind: IndexKind) -> PrintedAsymptoticParams:
    a, b, c = p.as_tuple()
    with mp.workdps(DPS):
        s1 = mpmath.sqrt(_mpf(sigma1_squared(p, kind)))
        if kind is HOSOYA:
            s2 = 46*a - 30*b + 8*c + 30*a*b + 24*a*c + 40*b*c
            return PrintedAsymptoticParams(s1, _mpf(s2))
        s2 = 25*a - 11*b + 7*c
        s3 = 9*a*a + 49*b*b + 25*c*c - 20 + 53*a - 15*b + 19*c
        return PrintedAsymptoticParams(s1, _mpf(s2), _mpf(s3))


def printed_asymptotic(n: int, p: ProbabilityTriple, kind: IndexKind) -> mpf:
    """Published approximation evaluated literally. Returns nan on a zero divisor."""
    a, b, c = (_mpf(v) for v in p.as_tuple())
    with mp.workdps(DPS):
        pp = printed_params(p, kind)
        s1, s2 = pp.sigma1, pp.sigma2
        try:
            if kind is HOSOYA:
                top = (1 / (mpf(1) / 4) ** (n + 1)) * (
                    s2 - 3*a*s1 - 5*b*s1 - 4*c*s1 + 9*a*a + 25*b*b + 16*c*c + 10*s1 - 80
                )
                ratio = -(3*a + 5*b + 4*c - s1 + 8) / (13*a - 5*b + 4*c)
                bottom = ratio ** (n + 1) * (52*a - 20*b + 16*c) * s1
            else:
                s3 = pp.sigma3
                top = (1 / mpf("0.5") ** (n + 1)) * (
                    -3*a*s1 - 7*b*3*a*s1 - 5*c*3*a*s1 + 42*a*b + 30*a*c + 70*b*c + 4*s1 + s3
                )
                ratio = -(3*a + 7*b + 5*c - s1 + 5) / s2
                bottom = ratio ** (n + 1) * s1 * s2
            return top / bottom
        except ZeroDivisionError:
            return mpf("nan")


@dataclass(frozen=True)
class AsymptoticReport:
    n: int
    kind: IndexKind
    probs: ProbabilityTriple
    exact: Fraction
    pole_approx: mpf
    printed: mpf
    rel_err_pole: mpf
    rel_err_printed: mpf

    def to_dict(self, digits: int = 20) -> Dict[str, object]:
        return {
            "n": self.n,
            "kind": self.kind.value,
            "probs": [format_rational(v) for v in self.probs.as_tuple()],
            "exact": format_rational(self.exact),
            "pole_approx": mpmath.nstr(self.pole_approx, digits),
            "printed": mpmath.nstr(self.printed, digits),
            "rel_err_pole": mpmath.nstr(self.rel_err_pole, 6),
            "rel_err_printed": mpmath.nstr(self.rel_err_printed, 6),
        }


def asymptotic_report(n: int, p: ProbabilityTriple, kind: IndexKind) -> AsymptoticReport:
    if n < 2:
        raise ValueError("asymptotic report needs n >= 2")
    exact = expect_states(n, p, kind)[n].base
    with mp.workdps(DPS):
        ex = _mpf(exact)
        approx = pole_approx(dominant_pole(gf_closed_form(p, kind)), n)
        printed = printed_asymptotic(n, p, kind)
        return AsymptoticReport(
            n, kind, p, exact, approx, printed, abs(approx / ex - 1), abs(printed / ex - 1)
        )
