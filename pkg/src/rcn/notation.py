"""
Rational comma notation: ``L[x/y]_z``.

``L`` is a Pythagorean label, ``[x/y]`` a rational comma built from prime
commas (x, y 5-rough), ``z`` the octave. Conversion either way goes through
exact rationals, and so does translation between comma algorithms.

Plaintext grammar::

    pitch   := LETTER ('#'* | 'b'*) ('p'* | 'd'*) comma ['_'] INT
    comma   := MARK* ['[' INT ['/' INT] ']' | '~' INT]
    MARK    := "'" (x5) | '"' (x25) | '.' (/5)

``_`` may only be left out when the preceding character is not a digit, so
``F~11_4`` needs it and ``F[11]4`` does not. ``L_y`` (= ``L[1/y]``) clashes
with the octave separator and is accepted only by :func:`parse_pitch_class`.
"""
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from rcn.arith import Monzo, is_rough5, rational_to_monzo
from rcn.commas import Algorithm, comma_monzo
from rcn.pythag import (LETTERS, NoteLabel, PythNote, pyth_note_from_rational,
                        rational_from_pyth_note)


class PrintStyle(str, enum.Enum):
    CANONICAL = "canonical"
    SHORTHAND5 = "shorthand5"
    TILDE = "tilde"


class RcnParseError(ValueError):
    def __init__(self, text: str, pos: int, reason: str):
        self.text, self.pos, self.reason = text, pos, reason
        super().__init__(f"{reason} at position {pos} in {text!r}")


@dataclass(frozen=True)
class RcnPitch:
    """One notated note, or a pitch class when ``octave`` is None."""

    label: NoteLabel
    comma_num: int = 1
    comma_den: int = 1
    octave: Optional[int] = None

    def __post_init__(self):
        x, y = self.comma_num, self.comma_den
        if x < 1 or y < 1:
            raise ValueError(f"comma parts must be positive, got [{x}/{y}]")
        if not (is_rough5(x) and is_rough5(y)):
            raise ValueError(f"comma part must not contain 2 or 3: [{x}/{y}]")
        if math.gcd(x, y) != 1:
            raise ValueError(f"comma [{x}/{y}] is not reduced")

    @property
    def comma(self) -> Fraction:
        return Fraction(self.comma_num, self.comma_den)

    @property
    def is_pitch_class(self) -> bool:
        return self.octave is None

    def pitch_class(self) -> "RcnPitch":
        return RcnPitch(self.label, self.comma_num, self.comma_den, None)

    def __str__(self):
        return format_pitch(self)


# -- frequency <-> notation ----------------------------------------------------


def notate(r, algo=Algorithm.DR) -> RcnPitch:
    """Notation for a positive rational frequency (C4 = 1/1)."""
    m = r if isinstance(r, Monzo) else rational_to_monzo(r)
    rough = m.restrict(lambda p: p >= 5)
    pyth = m / comma_monzo(rough, algo)
    note = pyth_note_from_rational(pyth)
    x = rough.restrict(lambda p: rough[p] > 0).to_rational()
    y = rough.restrict(lambda p: rough[p] < 0).to_rational()
    return RcnPitch(note.label, int(x), int(1 / y), note.octave)


def frequency(pitch: RcnPitch, algo=Algorithm.DR) -> Fraction:
    if pitch.octave is None:
        raise ValueError(f"{format_pitch(pitch)} is a pitch class; it has no single frequency")
    base = rational_from_pyth_note(PythNote(pitch.label, pitch.octave))
    return base * comma_value_of(pitch, algo)


def comma_value_of(pitch: RcnPitch, algo=Algorithm.DR) -> Fraction:
    m = rational_to_monzo(pitch.comma)
    return comma_monzo(m, algo).to_rational()


def pitch_class_monzo(pitch: RcnPitch, algo=Algorithm.DR) -> Monzo:
    """Octave-free monzo of a pitch (2-exponent dropped)."""
    oct4 = RcnPitch(pitch.label, pitch.comma_num, pitch.comma_den, 4)
    return rational_to_monzo(frequency(oct4, algo)).restrict(lambda p: p != 2)


def translate(pitch: RcnPitch, from_algo, to_algo) -> RcnPitch:
    """Re-notate under another comma algorithm, keeping the frequency."""
    return notate(frequency(pitch, from_algo), to_algo)


# -- printing --------------------------------------------------------------------


def _five_power(n: int) -> Tuple[int, int]:
    k = 0
    while n % 5 == 0:
        n //= 5
        k += 1
    return k, n


def _marks5(k: int) -> str:
    if k >= 0:
        return '"' * (k // 2) + "'" * (k % 2)
    return "." * -k


def _bracket(x: int, y: int) -> str:
    if x == y == 1:
        return ""
    return f"[{x}]" if y == 1 else f"[{x}/{y}]"


def format_comma(x: int, y: int, style=PrintStyle.CANONICAL) -> str:
    style = PrintStyle(style)
    if style is PrintStyle.SHORTHAND5:
        kx, rx = _five_power(x)
        ky, ry = _five_power(y)
        if rx == ry == 1:
            return _marks5(kx - ky)
    elif style is PrintStyle.TILDE and y == 1 and x > 1:
        return f"~{x}"
    return _bracket(x, y)


def format_pitch(pitch: RcnPitch, style=PrintStyle.CANONICAL) -> str:
    text = str(pitch.label) + format_comma(pitch.comma_num, pitch.comma_den, style)
    if pitch.octave is not None:
        text += f"_{pitch.octave}"
    return text


def format_pitch_class_compact(pitch: RcnPitch) -> str:
    """Lattice-style pitch-class label: 5s as marks, the rest as ``~x_y``.

    ``E'``, ``Bb~7``, ``G.`` and ``Ab_7`` are typical outputs. Only
    :func:`parse_pitch_class` reads the ``_y`` form back.
    """
    kx, rx = _five_power(pitch.comma_num)
    ky, ry = _five_power(pitch.comma_den)
    text = str(pitch.label) + _marks5(kx - ky)
    if rx > 1:
        text += f"~{rx}"
    if ry > 1:
        text += f"_{ry}"
    return text


# -- parsing ---------------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text, self.pos = text, 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_run(self, ch: str) -> int:
        start = self.pos
        while self.peek() == ch:
            self.pos += 1
        return self.pos - start

    def fail(self, reason: str, pos: Optional[int] = None):
        raise RcnParseError(self.text, self.pos if pos is None else pos, reason)

    def integer(self, what: str, signed: bool = False) -> int:
        start = self.pos
        if signed and self.peek() in "+-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if not digits.lstrip("+-"):
            self.fail(f"expected {what}", start)
        return int(digits)


def _label(s: _Scanner) -> NoteLabel:
    letter = s.peek()
    if not letter or letter not in LETTERS:
        s.fail(f"unknown note letter {letter!r}" if letter else "empty notation")
    s.pos += 1
    sharps = s.take_run("#")
    at = s.pos
    flats = s.take_run("b")
    if sharps and flats or flats and s.peek() == "#":
        s.fail("mixed sharps and flats", at if sharps else s.pos)
    ups = s.take_run("p")
    at = s.pos
    downs = s.take_run("d")
    if ups and downs or downs and s.peek() == "p":
        s.fail("mixed p and d marks", at if ups else s.pos)
    if s.peek() in ("#", "b") and (ups or downs):
        s.fail("sharps and flats must come before p/d marks")
    return NoteLabel(letter, sharps - flats, ups - downs)


def _comma_part(s: _Scanner, s_pos: int, x: int, y: int) -> Tuple[int, int]:
    if x == 0 or y == 0:
        s.fail("zero comma part", s_pos)
    if not (is_rough5(x) and is_rough5(y)):
        s.fail(f"comma part [{x}/{y}] is not 5-rough (contains 2 or 3)", s_pos)
    return x, y


def _comma(s: _Scanner, pitch_class: bool) -> Tuple[Fraction, bool]:
    """Parse marks and an optional bracket/tilde. Returns (comma, ends_in_digit)."""
    comma = Fraction(1)
    marks = {"'": 5, '"': 25, ".": Fraction(1, 5)}
    while s.peek() and s.peek() in marks:
        comma *= marks[s.peek()]
        s.pos += 1
    ends_in_digit = False
    if s.peek() == "[":
        start = s.pos
        s.pos += 1
        x = s.integer("comma numerator")
        y = 1
        if s.peek() == "/":
            s.pos += 1
            y = s.integer("comma denominator")
        if s.peek() != "]":
            s.fail("expected ']'")
        s.pos += 1
        x, y = _comma_part(s, start, x, y)
        comma *= Fraction(x, y)
    elif s.peek() == "~":
        start = s.pos
        s.pos += 1
        x, _ = _comma_part(s, start, s.integer("comma after '~'"), 1)
        comma *= x
        ends_in_digit = True
    if pitch_class and s.peek() == "_":
        start = s.pos
        s.pos += 1
        y, _ = _comma_part(s, start, s.integer("comma denominator after '_'"), 1)
        comma /= y
    return comma, ends_in_digit


def _finish(label: NoteLabel, comma: Fraction, octave: Optional[int]) -> RcnPitch:
    return RcnPitch(label, comma.numerator, comma.denominator, octave)


def parse(text: str) -> RcnPitch:
    """Parse a notated note such as ``B[5/7]_3``, ``E'_4`` or ``F~11_4``."""
    s = _Scanner(text)
    label = _label(s)
    comma, ends_in_digit = _comma(s, pitch_class=False)
    if s.peek() == "_":
        s.pos += 1
    elif ends_in_digit:
        s.fail("'_' required before the octave after a '~' comma")
    if not s.peek():
        s.fail("missing octave number")
    octave = s.integer("octave number", signed=True)
    if s.peek():
        s.fail(f"trailing characters {text[s.pos:]!r}")
    return _finish(label, comma, octave)


def parse_pitch_class(text: str) -> RcnPitch:
    """Parse a pitch class such as ``E'``, ``Bb~7``, ``Ab_7`` or ``C[5/7]``."""
    s = _Scanner(text)
    label = _label(s)
    comma, _ = _comma(s, pitch_class=True)
    if s.peek():
        s.fail(f"trailing characters {text[s.pos:]!r}")
    return _finish(label, comma, None)
