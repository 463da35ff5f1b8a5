"""Bounded truncations of partition categories.

A category of partitions always contains the identity and the pair, and is
closed under tensor, composition, involution and rotation. Those categories
are infinite; this module computes their finite slices: all members with at
most max_points points, exploring intermediates up to max_points + slack.

The engine does not enumerate raw operation pairs blindly. It closes the
member set under a family of derived moves, each of which is a finite
composite of the four category operations with partitions already known to
lie in the category:

  always available   involution; the four rotations; capping two adjacent
                     lower points (a copair layer below); inserting a fresh
                     adjacent lower pair (a pair layer below)
  if crossing found  swapping two adjacent lower points (a crossing layer)
  if four block      welding the blocks of two adjacent lower points
  if singleton       inserting or deleting a single lower point
  if double          inserting two fresh singleton points; detaching a
    singleton        point from its block into a singleton
  if pair positioner joining any two blocks (the block joiner family k(l)
                     realizes this; its members stay in the category)

plus tensor and composition of member pairs. Conditional moves switch on
permanently once their trigger partition is derived; every member found
before that is revisited under the enlarged move set, so the final member
set is the least fixpoint and does not depend on processing order.

Results larger than max_points but within the slack live in a scaffold tier
that is only rotated, involuted and capped; that is exactly what a detour
through an oversized intermediate can contribute back below the bound.
"""

from __future__ import annotations

from collections import deque

from pcat.catalog import identity, pair
from pcat.partition import (
    InputError,
    Partition,
    _canon,
    _compose,
    _involute,
    _rotate,
    _tensor,
)

YES = "yes"
UNKNOWN = "unknown"

# compose is the one operation whose operands can dwarf its result; pairing
# every composable couple at large sizes buys nothing the derived moves do
# not already provide, so it is restricted to small operands
_COMPOSE_CAP = 6

_SWAP, _WELD, _POINT, _DPOINT, _JOIN = 1, 2, 4, 8, 16

_TRIGGER_BITS = {
    (2, 2, (1, 2, 2, 1)): _SWAP,
    (0, 4, (1, 1, 1, 1)): _WELD,
    (0, 1, (1,)): _POINT,
    (0, 2, (1, 2)): _DPOINT,
    (3, 3, (1, 1, 2, 2, 1, 1)): _JOIN,
}


# ---------------------------------------------------------------------------
# single-leg machinery

def is_single_leg(p):
    """True iff no two consecutive lower points share a block.

    Only defined for partitions without upper points.
    """
    if p.upper_count != 0:
        raise InputError("single-leg form is defined on lower-row partitions")
    b = p.blocks
    return all(b[i] != b[i + 1] for i in range(len(b) - 1))


def parity_reduce(p):
    """One reduction pass: each maximal run of a block is kept as a single
    point if the run length is odd and dropped entirely if even.

    Runs of the same block are judged independently; block identity is kept,
    so separated runs of one block stay connected. Lower-row partitions only.
    """
    if p.upper_count != 0:
        raise InputError("parity reduction needs a lower-row partition")
    b = p.blocks
    kept = []
    i = 0
    while i < len(b):
        j = i
        while j < len(b) and b[j] == b[i]:
            j += 1
        if (j - i) % 2:
            kept.append(b[i])
        i = j
    return Partition(0, len(kept), kept)


def single_leg_version(p):
    """Iterate parity reduction to its fixed point.

    Upper points are first rotated down on the left, which reads the diagram
    in circular order. The result has no two consecutive points in one block
    and is unique for each input.
    """
    while p.upper_count:
        p = p.rotate("left", "down")
    while True:
        q = parity_reduce(p)
        if q == p:
            return p
        p = q


def connect_blocks(p, b1, b2):
    """Merge two existing blocks of p into one."""
    present = set(p.blocks)
    if b1 == b2:
        raise InputError("need two distinct blocks to connect")
    if b1 not in present or b2 not in present:
        raise InputError(f"no such block pair ({b1}, {b2})")
    merged = tuple(b1 if v == b2 else v for v in p.blocks)
    return Partition(p.upper_count, p.lower_count, merged)


# ---------------------------------------------------------------------------
# move kernels on raw triples; i is a lower-row position, results canonical

def _cap(k, l, b, i):
    x, y = b[k + i], b[k + i + 1]
    rest = b[:k + i] + b[k + i + 2:]
    if x != y:
        rest = tuple(x if v == y else v for v in rest)
    return k, l - 2, _canon(rest)


def _cup(k, l, b, i):
    fresh = len(b) + 1  # larger than any used id
    return k, l + 2, _canon(b[:k + i] + (fresh, fresh) + b[k + i:])


def _swap_move(k, l, b, i):
    j = k + i
    return k, l, _canon(b[:j] + (b[j + 1], b[j]) + b[j + 2:])


def _weld(k, l, b, i):
    x, y = b[k + i], b[k + i + 1]
    return k, l, _canon(tuple(x if v == y else v for v in b))


def _ins_point(k, l, b, i):
    fresh = len(b) + 1
    return k, l + 1, _canon(b[:k + i] + (fresh,) + b[k + i:])


def _ins_dpoint(k, l, b, i):
    f1, f2 = len(b) + 1, len(b) + 2
    return k, l + 2, _canon(b[:k + i] + (f1, f2) + b[k + i:])


def _del_point(k, l, b, i):
    return k, l - 1, _canon(b[:k + i] + b[k + i + 1:])


def _detach(k, l, b, i):
    fresh = len(b) + 1
    return k, l, _canon(b[:k + i] + (fresh,) + b[k + i + 1:])


def _join_move(k, l, b, b1, b2):
    return k, l, _canon(tuple(b1 if v == b2 else v for v in b))


# ---------------------------------------------------------------------------

class CategoryTruncation:
    """The members of ⟨generators⟩ with at most max_points points.

    saturated reports whether the move fixpoint was reached within the step
    budget; only a saturated truncation supports reading absence of a
    partition as evidence of non-membership.
    """

    def __init__(self, generators, max_points, slack, members, saturated):
        self.generators = tuple(generators)
        self.max_points = max_points
        self.slack = slack
        self.members = frozenset(members)
        self.saturated = saturated

    def member(self, p):
        """yes if p was derived, unknown otherwise. Never a definitive no:
        a bounded search cannot refute membership."""
        if p.points > self.max_points:
            raise InputError(
                f"partition has {p.points} points, truncation holds at most "
                f"{self.max_points}")
        return YES if p in self.members else UNKNOWN

    def sl_subset(self):
        """All members without upper points that are in single-leg form."""
        return frozenset(
            p for p in self.members
            if p.upper_count == 0 and is_single_leg(p))

    def __contains__(self, p):
        return p in self.members

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return (f"<CategoryTruncation {len(self.members)} members, "
                f"N={self.max_points}, slack={self.slack}, "
                f"saturated={self.saturated}>")

    def save(self, path):
        """Write the header line and one canonical member per line."""
        gens = "|".join(g.text() for g in self.generators)
        lines = [f"generators={gens};N={self.max_points};slack={self.slack};"
                 f"saturated={'true' if self.saturated else 'false'}"]
        for p in sorted(self.members,
                        key=lambda q: (q.points, q.upper_count, q.blocks)):
            lines.append(p.text())
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        if not lines:
            raise InputError(f"empty truncation file {path!r}")
        # generator texts contain ';', so split the fixed fields off the right
        head, n_part, s_part, sat_part = _split_header(lines[0])
        gens = [Partition.from_text(t) for t in head.split("|") if t]
        members = [Partition.from_text(ln) for ln in lines[1:]]
        return cls(gens, n_part, s_part, members, sat_part)


def _split_header(line):
    parts = line.rsplit(";", 3)
    if len(parts) != 4 or not parts[0].startswith("generators="):
        raise InputError(f"bad truncation header {line!r}")
    try:
        n = int(parts[1].removeprefix("N="))
        slack = int(parts[2].removeprefix("slack="))
    except ValueError:
        raise InputError(f"bad truncation header {line!r}") from None
    sat_text = parts[3].removeprefix("saturated=")
    if sat_text not in ("true", "false"):
        raise InputError(f"bad saturated flag {sat_text!r}")
    return parts[0].removeprefix("generators="), n, slack, sat_text == "true"


def member(t, p):
    return t.member(p)


def sl_subset(t):
    return t.sl_subset()


# ---------------------------------------------------------------------------

def closure(generators, max_points, slack=4, budget=None):
    """Close generators ∪ {identity, pair} under the derived moves.

    Returns a CategoryTruncation. budget limits the number of worklist pops;
    when it runs out the truncation is returned with saturated=False.
    """
    if max_points < 2:
        raise InputError("need max_points >= 2")
    if slack < 0:
        raise InputError("slack must be nonnegative")
    limit = max_points + slack

    members = set()
    scaffold = set()
    queue = deque()
    by_points = {n: [] for n in range(max_points + 1)}
    by_upper = {}
    by_lower = {}
    active = 0

    def admit(t):
        nonlocal active
        n = t[0] + t[1]
        if n <= max_points:
            if t in members:
                return
            members.add(t)
            by_points[n].append(t)
            by_upper.setdefault(t[0], []).append(t)
            by_lower.setdefault(t[1], []).append(t)
            queue.append((t, True))
            bit = _TRIGGER_BITS.get(t)
            if bit and not active & bit:
                active |= bit
                for m in members:
                    queue.append((m, False))
        elif n <= limit:
            if t not in scaffold:
                scaffold.add(t)
                queue.append((t, True))

    for g in generators:
        if g.points > limit:
            raise InputError(
                f"generator with {g.points} points exceeds the explored "
                f"range of {limit}")
    for p in (identity(), pair(), *generators):
        admit((p.upper_count, p.lower_count, p.blocks))

    pops = 0
    saturated = True
    while queue:
        if budget is not None and pops >= budget:
            saturated = False
            break
        t, full = queue.popleft()
        pops += 1
        k, l, b = t
        n = k + l

        admit(_involute(k, l, b))
        if k:
            admit(_rotate(k, l, b, "left", "down"))
            admit(_rotate(k, l, b, "right", "down"))
        if l:
            admit(_rotate(k, l, b, "left", "up"))
            admit(_rotate(k, l, b, "right", "up"))
        for i in range(l - 1):
            admit(_cap(k, l, b, i))

        if n > max_points:
            continue  # scaffold entries get nothing further

        if full:
            if n + 2 <= max_points:
                for i in range(l + 1):
                    admit(_cup(k, l, b, i))
            room = limit - n
            for sz in range(min(room, max_points) + 1):
                for m in tuple(by_points[sz]):
                    admit(_tensor(k, l, b, m[0], m[1], m[2]))
                    admit(_tensor(m[0], m[1], m[2], k, l, b))
            if n <= _COMPOSE_CAP:
                if l:
                    for m in tuple(by_upper.get(l, ())):
                        if m[0] + m[1] <= _COMPOSE_CAP and k + m[1] <= limit:
                            admit(_compose(k, l, b, m[1], m[2])[:3])
                if k:
                    for m in tuple(by_lower.get(k, ())):
                        if m[0] + m[1] <= _COMPOSE_CAP and m[0] + l <= limit:
                            admit(_compose(m[0], m[1], m[2], l, b)[:3])

        if active & _SWAP:
            for i in range(l - 1):
                if b[k + i] != b[k + i + 1]:
                    admit(_swap_move(k, l, b, i))
        if active & _WELD:
            for i in range(l - 1):
                if b[k + i] != b[k + i + 1]:
                    admit(_weld(k, l, b, i))
        if active & _POINT:
            if n + 1 <= max_points:
                for i in range(l + 1):
                    admit(_ins_point(k, l, b, i))
            for i in range(l):
                admit(_del_point(k, l, b, i))
        if active & _DPOINT:
            if n + 2 <= max_points:
                for i in range(l + 1):
                    admit(_ins_dpoint(k, l, b, i))
            for i in range(l):
                if b.count(b[k + i]) > 1:
                    admit(_detach(k, l, b, i))
        if active & _JOIN:
            blocks = max(b, default=0)
            for b1 in range(1, blocks):
                for b2 in range(b1 + 1, blocks + 1):
                    admit(_join_move(k, l, b, b1, b2))

    return CategoryTruncation(
        generators, max_points, slack,
        (Partition._wrap(*t) for t in members), saturated)
