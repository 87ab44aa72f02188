"""Editors: short bit patterns that insert or delete alleles after a match.

Transcription copies a genotype and passes the copy through each editor of
a family in order. Editor ``j`` is encountered with probability equal to
its concentration; on an encounter it edits the current transcript once,
at its leftmost match. The genotype itself is never touched.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from gaedit.core import BitString, RandomSource, as_bitstring, to_str

INSERT = "insert"
DELETE = "delete"


@dataclass(frozen=True)
class EditFunction:
    kind: str
    amount: int

    def __post_init__(self):
        if self.kind not in (INSERT, DELETE):
            raise ValueError(f"edit kind must be 'insert' or 'delete', got {self.kind!r}")
        if int(self.amount) < 1:
            raise ValueError(f"edit amount must be >= 1, got {self.amount}")

    @classmethod
    def parse(cls, text: str) -> "EditFunction":
        """Parse ``'delete 4'`` / ``'insert 3'``."""
        parts = text.split()
        if len(parts) != 2:
            raise ValueError(f"edit function must look like 'delete 4', got {text!r}")
        kind, amount = parts[0].lower(), parts[1]
        if not amount.isdigit():
            raise ValueError(f"edit amount must be a positive integer, got {amount!r}")
        return cls(kind, int(amount))

    def __str__(self) -> str:
        return f"{self.kind} {self.amount}"


@dataclass(frozen=True, eq=False)
class Editor:
    pattern: BitString
    concentration: float
    function: EditFunction

    def __post_init__(self):
        object.__setattr__(self, "pattern", as_bitstring(self.pattern))
        self.pattern.flags.writeable = False
        if not 0.0 <= self.concentration <= 1.0:
            raise ValueError(f"concentration must lie in [0, 1], got {self.concentration}")

    @property
    def length(self) -> int:
        return self.pattern.size

    def __eq__(self, other):
        if not isinstance(other, Editor):
            return NotImplemented
        return (
            np.array_equal(self.pattern, other.pattern)
            and self.concentration == other.concentration
            and self.function == other.function
        )

    def __repr__(self):
        return f"Editor({to_str(self.pattern)!r}, {self.concentration}, {str(self.function)!r})"


@dataclass(frozen=True)
class EditorFamily:
    """Ordered editors; position in the tuple is application order."""

    editors: Tuple[Editor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "editors", tuple(self.editors))

    def __len__(self) -> int:
        return len(self.editors)

    def __iter__(self) -> Iterator[Editor]:
        return iter(self.editors)

    def __getitem__(self, i: int) -> Editor:
        return self.editors[i]

    @classmethod
    def from_rows(cls, rows: Sequence[Tuple[str, float, str]]) -> "EditorFamily":
        """Build from ``(pattern, concentration, function)`` rows, e.g.
        ``("1110", 0.0635, "delete 4")``."""
        return cls(tuple(Editor(p, float(v), EditFunction.parse(f)) for p, v, f in rows))

    def with_concentration(self, v: float) -> "EditorFamily":
        return EditorFamily(tuple(replace(e, concentration=v) for e in self.editors))

    def with_function(self, f: EditFunction) -> "EditorFamily":
        return EditorFamily(tuple(replace(e, function=f) for e in self.editors))


@dataclass(frozen=True)
class EditEvent:
    editor: int
    offset: int
    function: EditFunction
    generation: int = -1


def find_match(editor: Editor, s: BitString) -> Optional[int]:
    """Leftmost offset ``k`` with ``s[k:k+m] == pattern``, or None."""
    pattern = editor.pattern if isinstance(editor, Editor) else as_bitstring(editor)
    if pattern.size > s.size:
        return None
    k = np.ascontiguousarray(s, dtype=np.uint8).tobytes().find(pattern.tobytes())
    return None if k < 0 else k


def apply_edit(
    s: BitString, k: int, m: int, function: EditFunction, rng: RandomSource
) -> BitString:
    """Edit ``s`` right after a match of length ``m`` at offset ``k``.

    Deletes or inserts ``min(amount, n - p)`` alleles at ``p = k + m``.
    Deleted alleles are replaced by random alleles at the tail; inserted
    random alleles push the suffix right and off the end. Length is kept.
    A match ending at the last allele (``p >= n``) leaves ``s`` unchanged.
    """
    n = s.size
    p = k + m
    if p >= n:
        return s.copy()
    d = min(function.amount, n - p)
    fresh = rng.integers(0, 2, size=d, dtype=np.uint8)
    if function.kind == DELETE:
        return np.concatenate((s[:p], s[p + d:], fresh))
    return np.concatenate((s[:p], fresh, s[p:n - d]))


def transcribe(
    genotype: BitString,
    family: EditorFamily,
    rng: RandomSource,
    generation: int = -1,
) -> Tuple[BitString, List[EditEvent]]:
    """Pass a copy of ``genotype`` through every editor of ``family`` in order.

    An editor with concentration strictly between 0 and 1 costs one uniform
    draw; concentrations of exactly 0 or 1 are decided without drawing, so
    an all-zero family consumes the same random stream as an empty one.
    """
    transcript = genotype.copy()
    events: List[EditEvent] = []
    for j, editor in enumerate(family):
        v = editor.concentration
        if v <= 0.0:
            continue
        if v < 1.0 and rng.random() >= v:
            continue
        k = find_match(editor, transcript)
        if k is None:
            continue
        transcript = apply_edit(transcript, k, editor.length, editor.function, rng)
        events.append(EditEvent(j, k, editor.function, generation))
    return transcript, events
