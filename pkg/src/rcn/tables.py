"""
Dataset generators for the comma tables, distributions and Pythagorean
reference tables, plus CSV / JSON / Markdown rendering.
"""
import csv
import enum
import io
import json
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from rcn.arith import cents, is_prime, primes_between, ratio_str
from rcn.commas import Algorithm, candidate, prime_comma, primary_range
from rcn.pythag import (NoteLabel, PythNote, label_of_fifth_index, pyth_note_from_rational,
                        rational_from_pyth_note, respell)


class TableFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"
    MARKDOWN = "markdown"


def _fixed(digits: int) -> Callable[[Any], str]:
    return lambda v: f"{v:.{digits}f}"


@dataclass
class Table:
    """Rows keyed by column name; ``formats`` give fixed-point renderings."""

    name: str
    columns: List[str]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    formats: Dict[str, Callable[[Any], str]] = field(default_factory=dict)

    def cell(self, row: Dict[str, Any], col: str) -> str:
        v = row[col]
        if v is None:
            return ""
        fmt = self.formats.get(col)
        return fmt(v) if fmt and not isinstance(v, str) else str(v)

    def json_value(self, row: Dict[str, Any], col: str):
        v = row[col]
        if isinstance(v, float):
            return float(self.cell(row, col)) if col in self.formats else v
        if isinstance(v, (int, str)) or v is None:
            return v
        return str(v)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.rows:
            w.writerow([self.cell(row, c) for c in self.columns])
        return buf.getvalue()

    def to_records(self) -> List[Dict[str, Any]]:
        return [{c: self.json_value(row, c) for c in self.columns} for row in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), indent=1) + "\n"

    def to_markdown(self) -> str:
        lines = ["| " + " | ".join(self.columns) + " |",
                 "|" + "|".join("---" for _ in self.columns) + "|"]
        for row in self.rows:
            lines.append("| " + " | ".join(self.cell(row, c) for c in self.columns) + " |")
        return "\n".join(lines) + "\n"

    def render(self, fmt=TableFormat.CSV) -> str:
        fmt = TableFormat(fmt)
        if fmt is TableFormat.CSV:
            return self.to_csv()
        if fmt is TableFormat.JSON:
            return self.to_json()
        return self.to_markdown()


COMMA_FORMATS = {"cents": _fixed(2), "decimal": _fixed(4), "LCY": _fixed(3),
                 "AO": _fixed(3), "CM": _fixed(3)}


def prime_comma_row(p: int, algo=Algorithm.DR) -> Dict[str, Any]:
    c = prime_comma(p, algo)
    return {"p": p, "fraction": ratio_str(c.value), "cents": c.cents, "decimal": float(c.value),
            "LCY": c.lcy, "AO": c.ao, "CM": c.cm, "a": c.a, "b": c.b, "label": c.pitch_class}


def gen_prime_comma_table(max_p: int, algo=Algorithm.DR) -> Table:
    algo = Algorithm.parse(algo)
    rows = [prime_comma_row(p, algo) for p in primes_between(5, max_p)]
    cols = ["p", "fraction", "cents", "decimal", "LCY", "AO", "CM", "a", "b", "label"]
    return Table(f"commas_{algo}", cols, rows, dict(COMMA_FORMATS))


def gen_b_table(max_p: int, algo=Algorithm.DR) -> Table:
    algo = Algorithm.parse(algo)
    rows = [{"p": p, "b": prime_comma(p, algo).b} for p in primes_between(5, max_p)]
    return Table(f"b_{algo}", ["p", "b"], rows)


def first_last_prime_per_b(max_p: int, algo=Algorithm.DR) -> Table:
    """First and last prime receiving each b, in descending b order.

    ``p_max`` is reported as "open" when b still occurs in the top octave
    (max_p/2, max_p], since later primes are then expected to receive it too.
    """
    algo = Algorithm.parse(algo)
    first: Dict[int, int] = {}
    last: Dict[int, int] = {}
    for p in primes_between(5, max_p):
        b = prime_comma(p, algo).b
        first.setdefault(b, p)
        last[b] = p
    rows = []
    for b in sorted(first, reverse=True):
        p_max = last[b] if 2 * last[b] <= max_p else "open"
        rows.append({"b": b, "label": str(label_of_fifth_index(-b)),
                     "p_min": first[b], "p_max": p_max})
    return Table(f"firstlast_{algo}", ["b", "label", "p_min", "p_max"], rows)


def largest_commas(max_p: int, count: int = 9, algo=Algorithm.DR) -> Table:
    if count < 1:
        raise ValueError("count must be at least 1")
    algo = Algorithm.parse(algo)
    commas = [prime_comma(p, algo) for p in primes_between(5, max_p)]
    commas.sort(key=lambda c: (-abs(c.cents), c.p))
    rows = [{"p": c.p, "fraction": ratio_str(c.value), "cents": c.cents, "b": c.b,
             "label": c.pitch_class} for c in commas[:count]]
    return Table(f"largest_{algo}", ["p", "fraction", "cents", "b", "label"], rows,
                 {"cents": lambda v: f"{v:+.2f}"})


def b_weights(p_low: int, p_high: int, algo=Algorithm.DR) -> Dict[int, float]:
    """Sum of ln(p)/p over primes in [p_low, p_high], grouped by b."""
    if not 5 <= p_low < p_high:
        raise ValueError("need 5 <= p_low < p_high")
    algo = Algorithm.parse(algo)
    weights: Dict[int, float] = defaultdict(float)
    for p in primes_between(p_low, p_high):
        weights[prime_comma(p, algo).b] += math.log(p) / p
    return dict(weights)


def b_distribution(p_low: int, p_high: int, algo=Algorithm.DR) -> Table:
    w = b_weights(p_low, p_high, algo)
    rows = [{"b": b, "label": str(label_of_fifth_index(-b)), "weight": w[b]} for b in sorted(w)]
    return Table(f"dist_{Algorithm.parse(algo)}", ["b", "label", "weight"], rows,
                 {"weight": _fixed(9)})


def candidate_scan(p: int, b_lo: int, b_hi: int) -> Table:
    if b_lo > b_hi:
        raise ValueError("b_lo must not exceed b_hi")
    if p != 1 and (p < 5 or not is_prime(p)):
        raise ValueError(f"scan needs a prime >= 5, or 1 as a dummy probe; got {p}")
    rows = []
    for b in range(b_lo, b_hi + 1):
        c = candidate(p, b)
        rows.append({"b": b, "a": c.a, "fraction": ratio_str(c.value), "LCY": c.lcy,
                     "AO": c.ao, "CM": c.cm})
    return Table(f"scan_{p}", ["b", "a", "fraction", "LCY", "AO", "CM"], rows,
                 {"LCY": _fixed(6), "AO": _fixed(6), "CM": _fixed(6)})


def primary_range_size(p: int) -> int:
    lo, hi = primary_range(p)
    return hi - lo + 1


def find_pb(search_limit: int, min_size: int = 13) -> Optional[int]:
    """Smallest prime whose primary range holds ``min_size`` or more b values."""
    for p in primes_between(5, search_limit):
        if primary_range_size(p) >= min_size:
            return p
    return None


# -- Pythagorean reference tables -------------------------------------------------

def _flat_natural_sharp_labels() -> List[NoteLabel]:
    # flat, natural and sharp of each letter, in fifths order
    out = []
    for letter in "FCGDAEB":
        for sharps in (-1, 0, 1):
            out.append(NoteLabel(letter, sharps))
    return out


def _pyth_row(note: PythNote) -> Dict[str, Any]:
    r = rational_from_pyth_note(note)
    return {"note": str(note), "fraction": ratio_str(r), "decimal": float(r), "cents": cents(r)}


def pyth_octave4_table() -> Table:
    rows = [_pyth_row(PythNote(label, 4)) for label in _flat_natural_sharp_labels()]
    return Table("pyth_octave4", ["note", "fraction", "decimal", "cents"], rows,
                 {"decimal": _fixed(4), "cents": _fixed(2)})


def _reduced_into_octave(label: NoteLabel) -> PythNote:
    r = rational_from_pyth_note(PythNote(label, 4))
    while r < 1:
        r *= 2
    while r >= 2:
        r /= 2
    return pyth_note_from_rational(r)


def _sorted_octave_notes() -> List[PythNote]:
    notes = [_reduced_into_octave(label) for label in _flat_natural_sharp_labels()]
    notes.append(PythNote(NoteLabel("C"), 5))
    return sorted(notes, key=rational_from_pyth_note)


def pyth_sorted_table() -> Table:
    rows = [_pyth_row(n) for n in _sorted_octave_notes()]
    return Table("pyth_sorted", ["note", "fraction", "cents"], rows, {"cents": _fixed(1)})


def pd_alternative(label: NoteLabel) -> Optional[NoteLabel]:
    """The spelling one Pythagorean comma away that uses at most one #/b."""
    k = label.fifth_index
    up = label_of_fifth_index(k + 12)
    if abs(up.sharps) <= 1:
        return NoteLabel(up.letter, up.sharps, -1)
    down = label_of_fifth_index(k - 12)
    if abs(down.sharps) <= 1:
        return NoteLabel(down.letter, down.sharps, 1)
    return None


def pyth_alternatives_table() -> Table:
    rows = []
    for note in _sorted_octave_notes():
        alt = pd_alternative(note.label)
        r = rational_from_pyth_note(note)
        rows.append({"note": str(note), "alt": str(respell(note, alt)) if alt else None,
                     "cents": cents(r)})
    return Table("pyth_alternatives", ["note", "alt", "cents"], rows, {"cents": _fixed(1)})


def compact_p_spelling(k: int) -> Optional[NoteLabel]:
    """Fewest-mark spelling of fifth-index k that uses at least one 'p'.

    Ties go to the spelling with fewer sharps, so 3**24 is Cpp rather
    than B#p.
    """
    if k < 12:
        return None
    options = []
    for j in range(1, k // 12 + 1):
        plain = label_of_fifth_index(k - 12 * j)
        options.append(NoteLabel(plain.letter, plain.sharps, j))
    return min(options, key=lambda l: (l.marks, abs(l.sharps)))


def powers_of_three_table(max_k: int = 24) -> Table:
    rows = []
    for k in range(max_k + 1):
        alt = compact_p_spelling(k)
        rows.append({"k": k, "integer": 3 ** k, "label": str(label_of_fifth_index(k)),
                     "alt": str(alt) if alt else None})
    return Table("powers_of_three", ["k", "integer", "label", "alt"], rows)


def pyth_tables() -> Dict[str, Table]:
    tables = [pyth_octave4_table(), pyth_sorted_table(), pyth_alternatives_table(),
              powers_of_three_table()]
    return {t.name: t for t in tables}
