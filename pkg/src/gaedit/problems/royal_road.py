from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from gaedit.core import BitString
from gaedit.problems.base import FitnessProblem

BLOCK = 5
N_BLOCKS = 8


@dataclass(frozen=True)
class Schema:
    """Template fixing some loci; every other locus is a wildcard."""

    fixed: Tuple[Tuple[int, int], ...]
    contribution: float = 0.0

    @classmethod
    def parse(cls, template: str, contribution: float = 0.0) -> "Schema":
        """From a template like ``'11111*****'`` ('*' = wildcard)."""
        fixed = []
        for i, ch in enumerate(template):
            if ch in "01":
                fixed.append((i, int(ch)))
            elif ch != "*":
                raise ValueError(f"bad schema character {ch!r} in {template!r}")
        return cls(tuple(fixed), contribution)

    def template(self, n: int) -> str:
        chars = ["*"] * n
        for i, a in self.fixed:
            chars[i] = str(a)
        return "".join(chars)

    def matches(self, s: BitString) -> bool:
        return all(s[i] == a for i, a in self.fixed)


def royal_road_schemata() -> List[Schema]:
    """Eight contiguous 5-bit all-ones blocks over 40 loci, each worth 10."""
    return [
        Schema(tuple((i, 1) for i in range(BLOCK * b, BLOCK * (b + 1))), 10.0)
        for b in range(N_BLOCKS)
    ]


def royal_road_s1(s: BitString) -> float:
    s = np.asarray(s)
    if s.size != BLOCK * N_BLOCKS:
        raise ValueError(f"royal road S1 expects 40 bits, got {s.size}")
    return 10.0 * float(np.count_nonzero(s.reshape(N_BLOCKS, BLOCK).all(axis=1)))


class RoyalRoadS1(FitnessProblem):
    id = "royal-road-s1"
    length = 40
    optimum = 80.0

    def evaluate(self, s: BitString) -> float:
        return royal_road_s1(s)

    def schemata(self) -> List[Schema]:
        return royal_road_schemata()
