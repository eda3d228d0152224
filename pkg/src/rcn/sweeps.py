"""Sampled prime sweeps for ranges too large to enumerate (up to ~1e9)."""
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from rcn.arith import next_prime
from rcn.commas import Algorithm, prime_comma


@dataclass(frozen=True)
class SampleSweep:
    """First ``per_probe`` primes above each of ``probes`` log-spaced points."""

    p_low: float = 1e4
    p_high: float = 1e6
    probes: int = 200
    per_probe: int = 5

    def probe_points(self) -> List[int]:
        lo, hi = math.log(self.p_low), math.log(self.p_high)
        step = (hi - lo) / max(self.probes - 1, 1)
        return [int(round(math.exp(lo + i * step))) for i in range(self.probes)]

    def primes(self) -> Iterator[int]:
        seen = set()
        for start in self.probe_points():
            p = start - 1
            for _ in range(self.per_probe):
                p = next_prime(p)
                if p not in seen:
                    seen.add(p)
                    yield p


def sample_b(sweep: SampleSweep, algo=Algorithm.DR) -> List[Tuple[int, int]]:
    return sorted((p, prime_comma(p, algo).b) for p in sweep.primes())


def b_values_by_octave(points: List[Tuple[int, int]]) -> Dict[int, List[int]]:
    """Group sampled b values by octave index floor(log2 p)."""
    out: Dict[int, List[int]] = {}
    for p, b in points:
        out.setdefault(p.bit_length() - 1, []).append(b)
    return out
