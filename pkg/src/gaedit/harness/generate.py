"""Seeded generator for random editor families.

The committed sweep tables in ``presets`` were produced by this function;
the test suite regenerates them to confirm they match.
"""

from __future__ import annotations

from gaedit.core import random_source
from gaedit.editing import DELETE, INSERT, EditFunction, Editor, EditorFamily

MAX_AMOUNT = 4


def generate_family(
    seed: int, size: int, min_length: int, max_length: int, max_amount: int = MAX_AMOUNT
) -> EditorFamily:
    """Draw ``size`` editors: length uniform in ``[min_length, max_length]``,
    uniform random pattern, concentration uniform in [0, 1) rounded to four
    decimals, insert or delete with equal odds, amount uniform in
    ``[1, max_amount]``."""
    rng = random_source(seed)
    editors = []
    for _ in range(size):
        m = int(rng.integers(min_length, max_length + 1))
        pattern = rng.integers(0, 2, size=m, dtype="uint8")
        v = round(float(rng.random()), 4)
        kind = INSERT if rng.integers(0, 2) else DELETE
        amount = int(rng.integers(1, max_amount + 1))
        editors.append(Editor(pattern, v, EditFunction(kind, amount)))
    return EditorFamily(tuple(editors))
