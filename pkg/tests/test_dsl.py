from pathlib import Path

import pytest
from helpers import rng

from magnus.dsl import format_heegaard, load, parse_heegaard
from magnus.errors import InvariantViolation, ParseError
from magnus.freegroup import Word
from magnus.samples import random_heegaard

EXAMPLES = Path(__file__).resolve().parent.parent / "cobordisms"

TWIST = """
cobordism { g_minus=1 g_plus=1 r_minus=0 r_plus=0 G_rank=1
  phi { a1 -> 1 ; b1 -> t1 }
  f { a1 -> a1 ; b1 -> b1 a1 } }
"""


def test_parse_twist():
    h = parse_heegaard(TWIST)
    assert (h.g_minus, h.g_plus, h.r_minus, h.r_plus, h.nvars) == (1, 1, 0, 0, 1)
    assert h.f.images[1] == Word([2, 1], 2)


def test_defaults_and_comments():
    h = parse_heegaard("# header\ncobordism { g_minus=1 g_plus=1 r_minus=0 r_plus=0 "
                       "G_rank=0 # trailing\n }")
    assert list(h.f.images) == [Word([1], 2), Word([2], 2)]
    assert all(e == () for e in h.phi.exps)


def test_round_trip():
    r = rng(81)
    for _ in range(30):
        h = random_heegaard(r)
        assert parse_heegaard(format_heegaard(h)) == h


@pytest.mark.parametrize("name", ["identity", "twist", "lower_handle", "upper_handle",
                                  "chain", "degenerate"])
def test_example_files_load(name):
    load(EXAMPLES / f"{name}.cob")


def test_malformed_file_position():
    with pytest.raises(ParseError) as e:
        load(EXAMPLES / "malformed.cob")
    assert (e.value.line, e.value.col) == (3, 5)


@pytest.mark.parametrize("text, needle", [
    ("cobordism { g_minus=1 g_plus=1 r_minus=0 G_rank=0 }", "missing key"),
    ("cobordism { g_minus=1 g_plus=1 r_minus=0 r_plus=0 G_rank=0 f { a1 -> c1 } }",
     ""),
    ("cobordism { g_minus=1 g_plus=1 r_minus=0 r_plus=0 G_rank=0 f { a2 -> a1 } }",
     "unknown generator"),
    ("cobordism { g_minus=1 g_plus=1 r_minus=0 r_plus=0 G_rank=0 } extra", "trailing"),
    ("cobordism { g_minus=1 g_plus=1 r_minus=0 r_plus=0 G_rank=0 bogus=1 }", "unknown key"),
])
def test_parse_errors(text, needle):
    with pytest.raises(ParseError) as e:
        parse_heegaard(text)
    assert needle in str(e.value)
    assert e.value.line == 1


def test_invariant_errors():
    with pytest.raises(InvariantViolation) as e:
        parse_heegaard("cobordism { g_minus=1 g_plus=0 r_minus=0 r_plus=0 G_rank=0 }")
    assert e.value.invariant == "genus-mismatch"
    with pytest.raises(InvariantViolation) as e:
        parse_heegaard("cobordism { g_minus=1 g_plus=1 r_minus=0 r_plus=0 G_rank=0 "
                       "f { a1 -> b1 ; b1 -> a1 } }")
    assert e.value.invariant == "boundary-not-preserved"
    with pytest.raises(InvariantViolation) as e:
        parse_heegaard("cobordism { g_minus=1 g_plus=1 r_minus=0 r_plus=0 G_rank=1 "
                       "phi { a1 -> t1 + 1 } }")
    assert e.value.invariant == "phi-not-monomial"
