import random

import pytest
from hypothesis import given

from conftest import digraphs, random_digraph
from p2turan.constructions import build_d1
from p2turan.digraph import Digraph
from p2turan.formats import (
    DIGRAPH6,
    MATRIX,
    FormatError,
    parse_digraph,
    serialize_digraph,
    to_dot,
)


def test_matrix_examples(two_cycle):
    assert parse_digraph("2\n01\n10\n", MATRIX) == two_cycle
    assert serialize_digraph(two_cycle, MATRIX) == "2\n01\n10\n"


def test_digraph6_examples(two_cycle):
    assert serialize_digraph(Digraph.empty(2), DIGRAPH6) == "&A?"
    assert serialize_digraph(two_cycle, DIGRAPH6) == "&AW"
    assert parse_digraph("&AW", DIGRAPH6) == two_cycle
    assert parse_digraph("&A?") == Digraph.empty(2)


@pytest.mark.parametrize("text", [
    "2\n01\n11\n",      # loop
    "2\n01\n",          # missing row
    "2\n012\n100\n",    # wrong width
    "2\n0x\n10\n",      # illegal char
    "abc\n",
    "",
])
def test_matrix_errors(text):
    with pytest.raises(FormatError):
        parse_digraph(text, MATRIX)


@pytest.mark.parametrize("text", ["AW", "&", "&AWW", "&A\x7f", "&B_?"])
def test_digraph6_errors(text):
    with pytest.raises(FormatError):
        parse_digraph(text, DIGRAPH6)


def test_digraph6_rejects_large_order():
    with pytest.raises(FormatError):
        serialize_digraph(Digraph.empty(63), DIGRAPH6)


def test_construction_roundtrip():
    d = build_d1(10, 2)[0]
    for fmt in (MATRIX, DIGRAPH6):
        assert parse_digraph(serialize_digraph(d, fmt), fmt) == d


@given(digraphs(max_order=12))
def test_roundtrip_property(d):
    for fmt in (MATRIX, DIGRAPH6):
        text = serialize_digraph(d, fmt)
        assert parse_digraph(text, fmt) == d
        assert parse_digraph(text) == d


def test_roundtrip_large():
    rng = random.Random(0)
    for n in (30, 62):
        d = random_digraph(rng, n, 0.4)
        for fmt in (MATRIX, DIGRAPH6):
            assert parse_digraph(serialize_digraph(d, fmt), fmt) == d
    assert not serialize_digraph(d, MATRIX).endswith(" \n")


def test_dot(two_cycle):
    dot = to_dot(two_cycle)
    assert dot.startswith("digraph D {") and "0 -> 1;" in dot and "1 -> 0;" in dot
