"""Named diagrams and the parametric families."""

from pytest import raises

from pcat.partition import InputError, word_to_text
from pcat.catalog import (crossing, copair, double_singleton, four_block, h,
                          half_lib, identity, identity_strands, k,
                          k_via_recursion, named_partition, nested_pairs,
                          pair, pair_positioner, singleton)


def test_fixed_diagrams():
    assert singleton().text() == "0;1;1"
    assert double_singleton().text() == "0;2;1,2"
    assert pair().text() == "0;2;1,1"
    assert copair().text() == "2;0;1,1"
    assert identity().text() == "1;1;1,1"
    assert four_block().text() == "0;4;1,1,1,1"
    assert crossing().text() == "2;2;1,2,2,1"
    assert half_lib().text() == "3;3;1,2,3,3,2,1"
    assert pair_positioner().text() == "3;3;1,1,2,2,1,1"


def test_identity_strands():
    assert identity_strands(0).text() == "0;0;"
    assert identity_strands(1) == identity()
    assert identity_strands(3).text() == "3;3;1,2,3,1,2,3"
    with raises(InputError):
        identity_strands(-1)


def test_h_family():
    assert h(1).text() == "0;2;1,2"
    assert h(2).text() == "0;4;1,2,1,2"
    assert h(3).text() == "0;6;1,2,1,2,1,2"
    with raises(InputError):
        h(0)


def test_k_family():
    """k(l) repeats the row 1, 2, ..., l+1, 1 on both levels."""
    assert k(1).text() == "3;3;1,2,1,1,2,1"
    assert k(2).text() == "4;4;1,2,3,1,1,2,3,1"
    assert word_to_text(k(1).to_word()) == "abaaba"
    for l in (1, 2, 3):
        p = k(l)
        assert p.upper_count == p.lower_count == l + 2
        assert p.involute() == p
    with raises(InputError):
        k(0)


def test_k_recursion_small():
    # the full l <= 4 sweep lives in the acceptance suite
    assert k_via_recursion(1) == k(1)
    assert k_via_recursion(2) == k(2)


def test_nested_pairs():
    assert nested_pairs(1).text() == "0;2;1,1"
    assert nested_pairs(3).text() == "0;6;1,2,3,3,2,1"


def test_pair_positioner_reaches_k1():
    p = pair_positioner().rotate("left", "down").rotate("right", "up")
    assert p == k(1)


def test_mnemonics():
    assert named_partition("cross") == crossing()
    assert named_partition("crossing") == crossing()
    assert named_partition("fourblock") == four_block()
    assert named_partition("halflib") == half_lib()
    assert named_partition("half_lib") == half_lib()
    assert named_partition("primary") == pair_positioner()
    assert named_partition("dsingleton") == double_singleton()
    assert named_partition("id") == identity()
    assert named_partition("h", 3) == h(3)
    assert named_partition("k", 2) == k(2)
    with raises(InputError):
        named_partition("h")  # parameter required
    with raises(InputError):
        named_partition("pair", 2)
    with raises(InputError):
        named_partition("no_such_name")
