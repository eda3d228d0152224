"""
Prime comma assignment.

Every prime p >= 5 gets a comma [p] = 2**a * 3**b * p close to 1/1. Three
rules for picking b are provided:

* ``DR``  minimise comma measure CM = AO * LCY over a prime-dependent range
* ``SAG`` nearest-to-zero b whose candidate is below half of 3**19/2**30
* ``KG2`` fixed 50/100-cent bands around the 12-EDO notes

Once b is fixed, a is always the exponent that brings the candidate
closest to 1/1. Scores are doubles; the comma value itself is exact.
"""
import enum
import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Mapping, Tuple

from rcn.arith import LOG2_3, Monzo, cents, factorize, is_prime, is_rough5
from rcn.pythag import NoteLabel, label_of_fifth_index


class Algorithm(str, enum.Enum):
    DR = "DR"
    SAG = "SAG"
    KG2 = "KG2"

    @classmethod
    def parse(cls, name) -> "Algorithm":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).upper())
        except ValueError:
            raise ValueError(f"unknown algorithm {name!r}; choose DR, SAG or KG2") from None

    def __str__(self):
        return self.value


CM_TIE_EPS = 1e-12

# SAG acceptance bound: half of (Pythagorean comma + apotome) = (3**19/2**30)**0.5
SAG_LIMIT_CENTS = 600.0 * (19 * LOG2_3 - 30)


def round_half_away(x: float) -> int:
    return int(math.floor(abs(x) + 0.5)) * (1 if x >= 0 else -1)


@dataclass(frozen=True)
class CandidateComma:
    p: int
    a: int
    b: int
    value: Fraction
    ao: float
    lcy: float
    cm: float

    @property
    def cents(self) -> float:
        return cents(self.value)

    @property
    def monzo(self) -> Monzo:
        return Monzo({2: self.a, 3: self.b, **({self.p: 1} if self.p > 1 else {})})


@dataclass(frozen=True)
class PrimeComma(CandidateComma):
    algorithm: Algorithm = Algorithm.DR

    @property
    def label(self) -> NoteLabel:
        """Pitch-class label of p itself: the Pythagorean it pairs with."""
        return label_of_fifth_index(-self.b)

    @property
    def pitch_class(self) -> str:
        return f"{self.label}[{self.p}]"


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or p < 5 or not is_prime(p):
        raise ValueError(f"no prime comma is defined for {p!r} (need a prime >= 5)")


def best_2exponent(p: int, b: int) -> int:
    """Power of 2 that brings 3**b * p nearest to 1/1."""
    return round_half_away(-math.log2(p) - b * LOG2_3)


def candidate(p: int, b: int) -> CandidateComma:
    """Candidate comma for p at 3-exponent b, with its scores.

    ``p = 1`` is accepted as a probe giving the bare Pythagorean series.
    """
    a = best_2exponent(p, b)
    log2p = math.log2(p)
    ao = abs(a + b * LOG2_3 + log2p)
    lcy = abs(a) + abs(b) * LOG2_3 + log2p
    value = Fraction(2) ** a * Fraction(3) ** b * p
    return CandidateComma(p, a, b, value, ao, lcy, ao * lcy)


# -- DR ------------------------------------------------------------------------


def b_midpoint(p: int) -> float:
    return -math.log(p, 3) / 2


def secondary_range(p: int) -> Tuple[int, int]:
    """The 12 integers nearest the midpoint -log3(p)/2."""
    mid = b_midpoint(p)
    return round_half_away(mid - 5.5), round_half_away(mid + 5.5)


def primary_range(p: int) -> Tuple[int, int]:
    """Values of b whose candidate has p (alone) as its reduced numerator."""
    return math.ceil(-math.log(p, 3) - 1 / (2 * LOG2_3)), 0


def dr_range(p: int) -> Tuple[int, int]:
    lo1, hi1 = secondary_range(p)
    lo2, hi2 = primary_range(p)
    return min(lo1, lo2), max(hi1, hi2)


def _better(c: CandidateComma, best: CandidateComma) -> bool:
    if c.cm < best.cm - CM_TIE_EPS:
        return True
    if c.cm > best.cm + CM_TIE_EPS:
        return False
    if c.lcy != best.lcy:
        return c.lcy < best.lcy
    return c.b > best.b


def dr_candidates(p: int) -> List[CandidateComma]:
    lo, hi = dr_range(p)
    return [candidate(p, b) for b in range(lo, hi + 1)]


@lru_cache(maxsize=None)
def dr_comma(p: int) -> PrimeComma:
    _check_prime(p)
    cands = dr_candidates(p)
    best = cands[0]
    for c in cands[1:]:
        if _better(c, best):
            best = c
    return _promote(best, Algorithm.DR)


def _promote(c: CandidateComma, algo: Algorithm) -> PrimeComma:
    return PrimeComma(c.p, c.a, c.b, c.value, c.ao, c.lcy, c.cm, algo)


# -- SAG -----------------------------------------------------------------------


def sag_search(p: int) -> int:
    """SAG 3-exponent by the ordered search 0, +-1, ..., +-6."""
    _check_prime(p)
    for k in range(7):
        accepted = [candidate(p, b) for b in sorted({k, -k})]
        accepted = [c for c in accepted if abs(c.cents) < SAG_LIMIT_CENTS]
        if accepted:
            return min(accepted, key=lambda c: abs(c.cents)).b
    raise ArithmeticError(f"no SAG comma for {p}: no b in -6..6 is within {SAG_LIMIT_CENTS:.4f} cents")


def _pyth_cents(fifths: int) -> float:
    """Cents of 3**fifths reduced into [0, 1200)."""
    return (fifths * LOG2_3 % 1.0) * 1200.0


def _sag_bands() -> Tuple[List[float], List[int]]:
    # Band edges of the lookup table in closed form: each Pythagorean
    # claims +-limit around itself, lower |b| first.
    t = SAG_LIMIT_CENTS
    c = _pyth_cents
    starts = [0.0, t, c(2) - t, c(2) + t, c(-3) + t, c(-1) - t, c(-1) + t,
              600.0, c(1) - t, c(1) + t, c(3) - t, c(-2) - t, c(-2) + t, 1200.0 - t]
    bs = [0, 5, -2, 3, -4, 1, 6, -6, -1, 4, -3, 2, -5, 0]
    return starts, bs


SAG_BAND_STARTS, SAG_BAND_B = _sag_bands()

KG2_BAND_STARTS = [0, 50, 150, 250, 350, 450, 550, 600, 650, 750, 850, 950, 1050, 1150]
KG2_BAND_B = [0, 5, -2, 3, -4, 1, -6, 6, -1, 4, -3, 2, -5, 0]


def octave_reduced_cents(p: int) -> float:
    """Cents of p/2**k in [0, 1200)."""
    return (math.log2(p) % 1.0) * 1200.0


def _band_lookup(p: int, starts, bs) -> int:
    return bs[bisect_right(starts, octave_reduced_cents(p)) - 1]


def sag_lookup(p: int) -> int:
    """SAG 3-exponent from the band table; agrees with :func:`sag_search`."""
    _check_prime(p)
    return _band_lookup(p, SAG_BAND_STARTS, SAG_BAND_B)


@lru_cache(maxsize=None)
def sag_comma(p: int) -> PrimeComma:
    return _promote(candidate(p, sag_search(p)), Algorithm.SAG)


# -- KG2 -----------------------------------------------------------------------


def kg2_b(p: int) -> int:
    _check_prime(p)
    return _band_lookup(p, KG2_BAND_STARTS, KG2_BAND_B)


@lru_cache(maxsize=None)
def kg2_comma(p: int) -> PrimeComma:
    return _promote(candidate(p, kg2_b(p)), Algorithm.KG2)


# -- dispatch and composition ---------------------------------------------------

_ENGINES = {Algorithm.DR: dr_comma, Algorithm.SAG: sag_comma, Algorithm.KG2: kg2_comma}


def prime_comma(p: int, algo=Algorithm.DR) -> PrimeComma:
    return _ENGINES[Algorithm.parse(algo)](p)


def comma_monzo(m: Mapping[int, int], algo=Algorithm.DR) -> Monzo:
    """Rational comma for the 5-rough part of a monzo, as a monzo."""
    algo = Algorithm.parse(algo)
    out = Monzo()
    for q, e in m.items():
        if q < 5:
            continue
        out = out * prime_comma(q, algo).monzo ** e
    return out


def rational_comma_value(x: int, y: int = 1, algo=Algorithm.DR) -> Fraction:
    """Value of the rational comma [x/y]."""
    if x < 1 or y < 1:
        raise ValueError(f"comma parts must be positive, got [{x}/{y}]")
    if not (is_rough5(x) and is_rough5(y)):
        raise ValueError(f"comma part must not contain 2 or 3: [{x}/{y}]")
    return comma_monzo(factorize(x) / factorize(y), algo).to_rational()


def divergence_metrics(p: int, algo=Algorithm.DR) -> Tuple[float, float]:
    """(3EPO, CSPO): label drift -b and comma size in cents, per octave of p."""
    c = prime_comma(p, algo)
    octaves = math.log2(p)
    return -c.b / octaves, c.cents / octaves
