"""
Modified scientific pitch notation for 3-limit (Pythagorean) ratios.

A pitch class is named by its fifth-index, the exponent of 3 in the ratio:
F, C, G, D, A, E, B are -1..5, each '#' adds 7 and each 'p' (Pythagorean
comma) adds 12. C4 is 1/1. The octave digit is anchored to the natural
letter, so Cb4 sits just below C4 and B#4 just above C5.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from rcn.arith import Monzo, rational_to_monzo

LETTERS = "FCGDAEB"
NATURAL_FIFTH = {letter: i - 1 for i, letter in enumerate(LETTERS)}

# 2-exponent of each natural letter in octave 4 (F4 = 4/3, ..., B4 = 243/128)
_NATURAL_TWO_EXP = {"F": 2, "C": 0, "G": -1, "D": -3, "A": -4, "E": -6, "B": -7}

APOTOME = Fraction(2187, 2048)
PYTHAGOREAN_COMMA = Fraction(531441, 524288)

DEFAULT_WINDOW = (-5, 6)


@dataclass(frozen=True)
class NoteLabel:
    letter: str
    sharps: int = 0
    pyth_commas: int = 0

    def __post_init__(self):
        if self.letter not in NATURAL_FIFTH:
            raise ValueError(f"unknown note letter {self.letter!r}")

    @property
    def fifth_index(self) -> int:
        return NATURAL_FIFTH[self.letter] + 7 * self.sharps + 12 * self.pyth_commas

    def __str__(self) -> str:
        acc = "#" * self.sharps if self.sharps >= 0 else "b" * -self.sharps
        pyth = "p" * self.pyth_commas if self.pyth_commas >= 0 else "d" * -self.pyth_commas
        return self.letter + acc + pyth

    @property
    def marks(self) -> int:
        """Number of accidental characters ('#', 'b', 'p', 'd')."""
        return abs(self.sharps) + abs(self.pyth_commas)


@dataclass(frozen=True)
class PythNote:
    label: NoteLabel
    octave: int

    def __str__(self) -> str:
        return f"{self.label}_{self.octave}"


def label_of_fifth_index(k: int) -> NoteLabel:
    """Plain sharp/flat label (no p/d marks) for fifth-index ``k``."""
    return NoteLabel(LETTERS[(k + 1) % 7], (k + 1) // 7)


def fifth_index_of_label(label: NoteLabel) -> int:
    return label.fifth_index


def _octave4_monzo(label: NoteLabel) -> Monzo:
    # f_nat(letter) * apotome**sharps * comma**pyth_commas, kept as exponents
    b = label.fifth_index
    a = _NATURAL_TWO_EXP[label.letter] - 11 * label.sharps - 19 * label.pyth_commas
    return Monzo({2: a, 3: b})


def rational_from_pyth_note(note: PythNote) -> Fraction:
    m = _octave4_monzo(note.label) * Monzo({2: note.octave - 4})
    return m.to_rational()


def pyth_note_from_rational(r, label: Optional[NoteLabel] = None) -> PythNote:
    """Notate a 3-limit ratio.

    The label defaults to the plain sharp/flat spelling of the ratio's
    fifth-index; pass ``label`` to pick another pitch-equal spelling (it must
    have the same fifth-index).
    """
    m = r if isinstance(r, Monzo) else rational_to_monzo(r)
    extra = [p for p in m if p > 3]
    if extra:
        raise ValueError(f"{r} is not 3-limit (has prime {extra[0]}); use the RCN codec")
    b = m.get(3)
    if label is None:
        label = label_of_fifth_index(b)
    elif label.fifth_index != b:
        raise ValueError(f"label {label} has fifth-index {label.fifth_index}, ratio has {b}")
    a_rep = _octave4_monzo(label).get(2)
    return PythNote(label, 4 + m.get(2) - a_rep)


def normalize_pyth_commas(label: NoteLabel, window_lo: int = DEFAULT_WINDOW[0],
                          window_hi: int = DEFAULT_WINDOW[1]) -> NoteLabel:
    """Respell ``label`` so its sharp/flat part lies in a 12-wide fifth window.

    The surplus is carried by p/d marks, so the pitch class is unchanged.
    With the default window Db..F#, B# becomes Cp and Cb becomes Bd.
    """
    if window_hi - window_lo != 11:
        raise ValueError("fifth-index window must span exactly 12 values")
    k = label.fifth_index
    base = window_lo + (k - window_lo) % 12
    plain = label_of_fifth_index(base)
    return NoteLabel(plain.letter, plain.sharps, (k - base) // 12)


def respell(note: PythNote, label: NoteLabel) -> PythNote:
    """Same frequency as ``note`` written with another pitch-equal label."""
    return pyth_note_from_rational(rational_from_pyth_note(note), label)
