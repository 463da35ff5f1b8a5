"""Named partition diagrams.

The small library of diagrams everything else is phrased in: the pair,
the singleton, the crossing, the four block, the mixing family h(s), the
block joiner family k(l), and friends. Each builder returns a canonical
Partition.
"""

from __future__ import annotations

from pcat.partition import InputError, Partition


def singleton():
    return Partition(0, 1, (1,))


def double_singleton():
    return Partition(0, 2, (1, 2))


def pair():
    return Partition(0, 2, (1, 1))


def copair():
    return Partition(2, 0, (1, 1))


def identity():
    return Partition(1, 1, (1, 1))


def identity_strands(m):
    """The tensor power of the identity: m parallel strands."""
    if m < 0:
        raise InputError("strand count must be nonnegative")
    ids = tuple(range(1, m + 1))
    return Partition(m, m, ids + ids)


def four_block():
    return Partition(0, 4, (1, 1, 1, 1))


def crossing():
    return Partition(2, 2, (1, 2, 2, 1))


def half_lib():
    """Blocks {1,3'}, {2,2'}, {3,1'}: the strand reverser."""
    return Partition(3, 3, (1, 2, 3, 3, 2, 1))


def pair_positioner():
    """Blocks {1,2,2',3'} and {3,1'}; word abbabb."""
    return Partition(3, 3, (1, 1, 2, 2, 1, 1))


def h(s):
    """Two blocks interleaved s times each: the word abab...ab of length 2s."""
    if s < 1:
        raise InputError(f"h needs s >= 1, got {s}")
    return Partition(0, 2 * s, (1, 2) * s)


def k(l):
    """The block joiner on l strands: a four block around the outside
    (points 1, l+2 of both rows) with l identity strands threaded through.
    """
    if l < 1:
        raise InputError(f"k needs l >= 1, got {l}")
    row = (1,) + tuple(range(2, l + 2)) + (1,)
    return Partition(l + 2, l + 2, row + row)


def k_via_recursion(l):
    """k(l) built by induction from k(1): cap the seam of k(l-1) tensor k(1).

    Stacking a pair above and a copair below the two middle columns of
    k(l-1) tensor k(1) fuses the two outer four blocks into one. Must agree
    with k(l); tested.
    """
    if l < 1:
        raise InputError(f"k needs l >= 1, got {l}")
    cur = k(1)
    for step in range(1, l):
        mid = cur.tensor(k(1))
        top = identity_strands(step + 1).tensor(pair()).tensor(identity_strands(2))
        bottom = identity_strands(step + 1).tensor(copair()).tensor(identity_strands(2))
        cur = top.compose(mid).partition.compose(bottom).partition
    return cur


def nested_pairs(l):
    """l pair blocks nested inside one another, in P(0, 2l)."""
    if l < 0:
        raise InputError("nesting depth must be nonnegative")
    up = tuple(range(1, l + 1))
    return Partition(0, 2 * l, up + up[::-1])


_PLAIN = {
    "singleton": singleton,
    "dsingleton": double_singleton,
    "double_singleton": double_singleton,
    "pair": pair,
    "copair": copair,
    "id": identity,
    "identity": identity,
    "fourblock": four_block,
    "four_block": four_block,
    "cross": crossing,
    "crossing": crossing,
    "halflib": half_lib,
    "half_lib": half_lib,
    "primary": pair_positioner,
    "pair_positioner": pair_positioner,
}

_PARAMETRIC = {"h": h, "k": k}


def named_partition(name, param=None):
    """Look up a diagram by mnemonic; h and k take a positive parameter."""
    if name in _PARAMETRIC:
        if param is None:
            raise InputError(f"{name} needs a parameter")
        return _PARAMETRIC[name](param)
    if name in _PLAIN:
        if param is not None:
            raise InputError(f"{name} takes no parameter")
        return _PLAIN[name]()
    raise InputError(f"unknown partition name {name!r}")
