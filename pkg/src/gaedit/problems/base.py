from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from gaedit.core import BitString, to_str


class FitnessProblem:
    """A fixed-length bit-string fitness function to maximize."""

    id: str = ""
    length: int = 0
    optimum: Optional[float] = None

    def evaluate(self, s: BitString) -> float:
        raise NotImplementedError

    def evaluate_many(self, strings: Sequence[BitString]) -> np.ndarray:
        return np.array([self.evaluate(s) for s in strings], dtype=float)

    def check_length(self, s: BitString) -> None:
        if len(s) != self.length:
            raise ValueError(f"{self.id} expects {self.length} bits, got {len(s)}")

    def __repr__(self):
        return f"{type(self).__name__}(length={self.length})"


def decode_real(bits: BitString, lo: float, hi: float) -> float:
    """Map an MSB-first unsigned integer segment linearly onto ``[lo, hi]``."""
    b = len(bits)
    if b < 1:
        raise ValueError("segment must hold at least one bit")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    value = int(to_str(bits), 2)
    return lo + value / ((1 << b) - 1) * (hi - lo)


def decode_segments(s: BitString, width: int, lo: float, hi: float) -> np.ndarray:
    """Decode consecutive ``width``-bit segments of ``s``."""
    return np.array(
        [decode_real(s[i:i + width], lo, hi) for i in range(0, len(s), width)]
    )
