"""Rational comma notation (RCN) for free just intonation.

Exact conversion between rational frequencies and notations like
``B[5/7]_3``, with prime commas assigned by the DR, SAG or KG2 rules.
"""
from rcn.arith import Monzo, cents, factorize, is_prime, is_rough5, primes_up_to
from rcn.commas import (Algorithm, PrimeComma, candidate, dr_comma, kg2_comma, prime_comma,
                        rational_comma_value, sag_comma)
from rcn.notation import (PrintStyle, RcnParseError, RcnPitch, format_pitch, frequency, notate,
                          parse, parse_pitch_class, translate)
from rcn.pythag import NoteLabel, PythNote

__version__ = "0.1.0"
