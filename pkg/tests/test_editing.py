import numpy as np
import pytest
from hypothesis import given, strategies as st

from gaedit.core import random_source, to_str
from gaedit.editing import (
    DELETE,
    INSERT,
    EditFunction,
    Editor,
    EditorFamily,
    apply_edit,
    find_match,
    transcribe,
)

from conftest import bits


def ed(pattern, v=1.0, f="delete 1"):
    return Editor(pattern, v, EditFunction.parse(f))


@pytest.mark.parametrize(
    "pattern, s, expected",
    [("11", "00110", 2), ("11", "00000", None), ("00", "0000", 0), ("0", "1", None), ("101", "101", 0)],
)
def test_find_match(pattern, s, expected):
    assert find_match(ed(pattern), bits(s)) == expected


def test_find_match_pattern_longer_than_string():
    assert find_match(ed("1111"), bits("11")) is None


class FixedAlleles:
    """Stands in for the generator so random fill alleles are visible."""

    def __init__(self, alleles):
        self.alleles = alleles

    def integers(self, lo, hi, size, dtype):
        assert size <= len(self.alleles)
        return np.array(self.alleles[:size], dtype=dtype)


def test_delete_one_after_prefix_match():
    out = apply_edit(bits("11110000"), 0, 2, EditFunction(DELETE, 1), FixedAlleles([1]))
    assert to_str(out) == "11100001"
    out = apply_edit(bits("11110000"), 0, 2, EditFunction(DELETE, 1), FixedAlleles([0]))
    assert to_str(out) == "11100000"


def test_insert_two_after_prefix_match():
    out = apply_edit(bits("11110000"), 0, 2, EditFunction(INSERT, 2), FixedAlleles([0, 1]))
    assert to_str(out) == "11011100"


def test_edits_clamp_at_right_edge():
    s = bits("00001101")
    # match "01" at k=6 ends at the last allele: nothing to edit
    assert to_str(apply_edit(s, 6, 2, EditFunction(DELETE, 3), FixedAlleles([1, 1, 1]))) == "00001101"
    # match "11" at k=4, p=6: only two positions remain
    assert to_str(apply_edit(s, 4, 2, EditFunction(DELETE, 4), FixedAlleles([0, 0]))) == "00001100"
    assert to_str(apply_edit(s, 4, 2, EditFunction(INSERT, 4), FixedAlleles([1, 0]))) == "00001110"


def test_table3_editor_never_matches_all_ones(rng):
    ones = np.ones(40, dtype=np.uint8)
    editor = ed("1110", 0.0635, "delete 4")
    assert all(ones[k:k + 4].tolist() != [1, 1, 1, 0] for k in range(37))
    assert find_match(editor, ones) is None
    out, events = transcribe(ones, EditorFamily((ed("1110", 1.0, "delete 4"),)), rng)
    assert events == [] and np.array_equal(out, ones)


def test_transcribe_empty_and_zero_families(rng):
    g = bits("0101010101")
    for family in (EditorFamily(), EditorFamily((ed("01", 0.0), ed("10", 0.0)))):
        before = rng.bit_generator.state
        out, events = transcribe(g, family, rng)
        assert np.array_equal(out, g) and out is not g and events == []
        assert rng.bit_generator.state == before


def test_transcribe_prefix_delete_hand_trace(rng):
    g = bits("11010011")
    out, events = transcribe(g, EditorFamily((ed("110", 1.0, "delete 1"),)), rng)
    assert len(events) == 1 and events[0].offset == 0 and events[0].editor == 0
    # allele at position 3 removed, suffix shifted left, one random allele at the end
    assert to_str(out[:7]) == "1100011"
    assert to_str(g) == "11010011"


def test_transcribe_layers_see_previous_edits():
    # first editor inserts after "11", second only matches what it created
    g = bits("110000")
    family = EditorFamily((ed("11", 1.0, "insert 2"), ed("1111", 1.0, "delete 1")))
    rng = random_source(0)
    for _ in range(50):
        out, events = transcribe(g, family, rng)
        if to_str(out[:4]) == "1111":
            assert [e.editor for e in events] == [0, 1]
            return
    pytest.fail("never produced 1111 prefix")


def test_firing_rate_converges_to_concentration():
    g = bits("0" * 40)
    rng = random_source(5)
    for v in (0.0635, 0.2857, 0.7302):
        family = EditorFamily((ed("00", v, "delete 1"),))
        fired = sum(len(transcribe(g, family, rng)[1]) for _ in range(10_000))
        assert abs(fired / 10_000 - v) <= 0.02


def test_edit_function_parsing():
    assert EditFunction.parse("delete 4") == EditFunction(DELETE, 4)
    assert EditFunction.parse("Insert 3") == EditFunction(INSERT, 3)
    for bad in ("delete", "swap 2", "insert 0", "delete -1", "delete x"):
        with pytest.raises(ValueError):
            EditFunction.parse(bad)
    with pytest.raises(ValueError):
        Editor("01", 1.5, EditFunction(DELETE, 1))


chromosomes = st.lists(st.integers(0, 1), min_size=8, max_size=60).map(lambda b: np.array(b, dtype=np.uint8))
editors = st.builds(
    lambda p, v, kind, d: Editor(np.array(p, dtype=np.uint8), v, EditFunction(kind, d)),
    st.lists(st.integers(0, 1), min_size=1, max_size=6),
    st.sampled_from([0.0, 0.3, 0.8, 1.0]),
    st.sampled_from([INSERT, DELETE]),
    st.integers(1, 12),
)
families = st.lists(editors, max_size=8).map(lambda es: EditorFamily(tuple(es)))


@given(chromosomes, families, st.integers(0, 2**32))
def test_transcribe_properties(g, family, seed):
    original = g.copy()
    out, events = transcribe(g, family, random_source(seed))
    assert out.shape == g.shape
    assert set(np.unique(out)) <= {0, 1}
    assert len(events) <= len(family)
    assert np.array_equal(g, original)
    if all(find_match(e, g) is None for e in family):
        assert np.array_equal(out, g) and events == []


@given(chromosomes, editors, st.integers(0, 2**32))
def test_apply_edit_preserves_match_and_prefix(s, editor, seed):
    k = find_match(editor, s)
    if k is None:
        return
    out = apply_edit(s, k, editor.length, editor.function, random_source(seed))
    p = k + editor.length
    assert out.shape == s.shape
    assert np.array_equal(out[:p], s[:p])
