"""
Exact rational arithmetic in factored form.

Rationals are plain :class:`fractions.Fraction` values. :class:`Monzo` holds
the same number as a sparse prime-exponent map, which is what the comma
machinery works with. Prime utilities and cents conversion live here too.
"""
import math
import threading
from bisect import bisect_right
from collections.abc import Mapping
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Iterator, List, Tuple, Union

LOG2_3 = math.log2(3)

RationalLike = Union[Fraction, int]


class Monzo(Mapping):
    """Positive rational as an immutable map prime -> non-zero exponent.

    Iteration yields primes in ascending order. Monzos multiply and divide
    like the rationals they represent (exponents add and subtract).
    """

    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents: Union[Mapping, Iterable[Tuple[int, int]], None] = None):
        items = dict(exponents or {})
        for p, e in items.items():
            if not isinstance(p, int) or not isinstance(e, int):
                raise TypeError(f"monzo entries must be int -> int, got {p!r}: {e!r}")
            if not is_prime(p):
                raise ValueError(f"monzo key {p} is not prime")
        self._exps = {p: items[p] for p in sorted(items) if items[p] != 0}
        self._hash = None

    def __getitem__(self, p: int) -> int:
        return self._exps[p]

    def get(self, p, default=0):
        return self._exps.get(p, default)

    def __iter__(self) -> Iterator[int]:
        return iter(self._exps)

    def __len__(self) -> int:
        return len(self._exps)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._exps.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, Monzo):
            return self._exps == other._exps
        if isinstance(other, Mapping):
            return self._exps == {p: e for p, e in other.items() if e != 0}
        return NotImplemented

    def __repr__(self):
        return f"Monzo({self._exps!r})"

    def __mul__(self, other: "Monzo") -> "Monzo":
        out = dict(self._exps)
        for p, e in other.items():
            out[p] = out.get(p, 0) + e
        return Monzo(out)

    def __truediv__(self, other: "Monzo") -> "Monzo":
        return self * other ** -1

    def __pow__(self, k: int) -> "Monzo":
        return Monzo({p: e * k for p, e in self._exps.items()} if k else {})

    def restrict(self, predicate) -> "Monzo":
        """Keep only the primes for which ``predicate(p)`` holds."""
        return Monzo({p: e for p, e in self._exps.items() if predicate(p)})

    @property
    def log2(self) -> float:
        return sum(e * math.log2(p) for p, e in self._exps.items())

    @classmethod
    def from_rational(cls, r: RationalLike) -> "Monzo":
        return rational_to_monzo(r)

    def to_rational(self) -> Fraction:
        return monzo_to_rational(self)


# -- primes -----------------------------------------------------------------

_sieve_lock = threading.Lock()
_sieve_limit = 1
_sieve_primes: List[int] = []


def _sieve(n: int) -> List[int]:
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, n + 1, i)))
    return [i for i, f in enumerate(flags) if f]


def primes_up_to(n: int) -> List[int]:
    """All primes ``<= n`` in ascending order."""
    global _sieve_limit, _sieve_primes
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > _sieve_limit:
        with _sieve_lock:
            if n > _sieve_limit:
                # grow geometrically so repeated calls stay cheap
                limit = max(n, 2 * _sieve_limit)
                _sieve_primes = _sieve(limit)
                _sieve_limit = limit
    primes = _sieve_primes
    return primes[: bisect_right(primes, n)]


def primes_between(lo: int, hi: int) -> List[int]:
    """Primes in the closed interval ``[lo, hi]``."""
    primes = primes_up_to(hi)
    return primes[bisect_right(primes, lo - 1) :]


# Deterministic Miller-Rabin bases for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    c = max(n + 1, 2)
    while not is_prime(c):
        c += 1
    return c


def _pollard_rho(n: int) -> int:
    # Brent's variant; n is odd and composite
    for c in range(1, 100):
        y, m, g, r, q = 2, 128, 1, 1, 1
        f = lambda v: (v * v + c) % n  # noqa: E731
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"failed to split {n}")


_TRIAL_LIMIT = 1 << 16


def _factor_into(n: int, out: Dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(n: int) -> Monzo:
    """Prime factorisation of a positive integer.

    Trial division by sieved primes handles everything below 2**32; a
    larger cofactor is tested for primality and split by Pollard rho only
    when composite.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"factorize expects an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"cannot factorize {n}: need a positive integer")
    out: Dict[int, int] = {}
    for p in primes_up_to(_TRIAL_LIMIT):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        if n < _TRIAL_LIMIT * _TRIAL_LIMIT:
            out[n] = out.get(n, 0) + 1
        else:
            _factor_into(n, out)
    return Monzo(out)


def is_rough5(n: int) -> bool:
    """True iff ``n`` has no factor 2 or 3."""
    if n < 1:
        raise ValueError("is_rough5 expects a positive integer")
    return n % 2 != 0 and n % 3 != 0


# -- conversions --------------------------------------------------------------


def rational_to_monzo(r: RationalLike) -> Monzo:
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"only positive rationals have a monzo, got {r}")
    return factorize(r.numerator) / factorize(r.denominator)


def monzo_to_rational(m: Mapping) -> Fraction:
    num, den = 1, 1
    for p, e in m.items():
        if e > 0:
            num *= p ** e
        elif e < 0:
            den *= p ** -e
    return Fraction(num, den)


def product(values: Iterable[RationalLike]) -> Fraction:
    return reduce(lambda x, y: x * y, values, Fraction(1))


def cents(r: Union[RationalLike, Mapping]) -> float:
    """Size of a ratio (a rational or a monzo) in cents, 1200 per octave.

    ``math.log2`` takes integers of any size, so the log argument never
    overflows even for very remote Pythagorean labels.
    """
    if isinstance(r, Mapping):
        return 1200.0 * sum(e * math.log2(p) for p, e in r.items())
    r = Fraction(r)
    if r <= 0:
        raise ValueError("cents is defined for positive ratios only")
    return 1200.0 * (math.log2(r.numerator) - math.log2(r.denominator))


def log2_ratio(r: Fraction) -> float:
    return cents(r) / 1200.0


def ratio_str(r: RationalLike) -> str:
    """``num/den`` text, keeping ``/1`` for integers (``2/1``, ``1/1``)."""
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"
