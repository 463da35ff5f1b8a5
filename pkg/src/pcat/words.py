"""Words in the infinite free product of order-two generators.

A word is a tuple of positive-integer letters, each letter an involution.
This module carries the group arithmetic (reduce, multiply, invert,
identify letters), the word attached to a partition by reading its boundary,
membership oracles for invariant normal subgroups, and the witness
constructions that realize word operations as partition operations.

Membership answers are the strings "yes", "no" and "unknown".
"""

from __future__ import annotations

import itertools
from collections import deque

from pcat.partition import InputError, Partition, parse_word, word_to_text
from pcat.category import is_single_leg

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


def reduce_word(w):
    """Delete adjacent equal letters until none remain.

    The rewriting aa -> e is confluent, so one stack pass is enough.
    """
    out = []
    for x in w:
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def multiply(w1, w2):
    return reduce_word(tuple(w1) + tuple(w2))


def inverse(w):
    """Letters square to e, so the inverse is the reversed word."""
    return reduce_word(tuple(w)[::-1])


def identify_letters(w, mapping):
    """Apply a letter substitution, then reduce.

    mapping may be a dict (letters not listed stay fixed) or a callable.
    These substitutions generate the endomorphism semigroup under which all
    subgroups handled here are invariant.
    """
    if callable(mapping):
        sub = mapping
    else:
        sub = lambda x: mapping.get(x, x)
    return reduce_word(tuple(sub(x) for x in w))


def canonical_rename(w):
    """Rename letters to 1, 2, ... by first appearance."""
    rel = {}
    return tuple(rel.setdefault(x, len(rel) + 1) for x in w)


def word_of_partition(p):
    """The reduced boundary word of a diagram, one letter per block.

    Reading order is the circular one from Partition.to_word. Two diagrams
    with the same single-leg version give the same word up to renaming.
    """
    return reduce_word(p.to_word())


def f_generators(gens):
    """Reduced words of the generators, identity words dropped."""
    out = []
    for g in gens:
        w = word_of_partition(g)
        if w and w not in out:
            out.append(w)
    return out


# ---------------------------------------------------------------------------
# oracles

class Oracle:
    """A membership test for an invariant normal subgroup.

    The closed-form kinds decide; the bounded-search kind explores the
    invariant normal closure of its generator words and never answers no.
    Build instances through the classmethods or Oracle.parse.
    """

    def __init__(self, kind, s=None, gens=None, max_len=None, _search=None):
        self.kind = kind
        self.s = s
        self.gens = gens
        self.max_len = max_len
        self._search = _search

    @classmethod
    def trivial(cls):
        return cls("trivial")

    @classmethod
    def full(cls):
        return cls("full")

    @classmethod
    def even_letter_count(cls):
        return cls("even-count")

    @classmethod
    def even_length(cls):
        return cls("even-length")

    @classmethod
    def dihedral(cls, s):
        if s < 1:
            raise InputError(f"dihedral needs s >= 1, got {s}")
        return cls("dihedral", s=s)

    @classmethod
    def bfs_closure(cls, gens, max_len=12, attempt_cap=200_000):
        gens = tuple(tuple(g) for g in gens)
        found = _bfs_words(gens, max_len, attempt_cap)
        return cls("bfs", gens=gens, max_len=max_len, _search=found)

    @classmethod
    def parse(cls, text):
        """Oracle spec strings: trivial, full, even-count, even-length,
        dihedral:s=3, bfs:gens=abcabc,abab;L=12."""
        head, _, rest = text.partition(":")
        if head == "trivial":
            return cls.trivial()
        if head == "full":
            return cls.full()
        if head == "even-count":
            return cls.even_letter_count()
        if head == "even-length":
            return cls.even_length()
        if head == "dihedral":
            if not rest.startswith("s="):
                raise InputError(f"dihedral spec needs s=, got {text!r}")
            try:
                return cls.dihedral(int(rest[2:]))
            except ValueError:
                raise InputError(f"bad dihedral parameter in {text!r}") from None
        if head == "bfs":
            gens, max_len = None, 12
            for field in rest.split(";"):
                key, _, val = field.partition("=")
                if key == "gens":
                    gens = [parse_word(g) for g in val.split(",") if g]
                elif key == "L":
                    try:
                        max_len = int(val)
                    except ValueError:
                        raise InputError(f"bad L in {text!r}") from None
                else:
                    raise InputError(f"unknown bfs field {key!r}")
            if not gens:
                raise InputError(f"bfs spec needs gens=, got {text!r}")
            return cls.bfs_closure(gens, max_len)
        raise InputError(f"unknown oracle {text!r}")

    def spec(self):
        if self.kind == "dihedral":
            return f"dihedral:s={self.s}"
        if self.kind == "bfs":
            gens = ",".join(word_to_text(g) for g in self.gens)
            return f"bfs:gens={gens};L={self.max_len}"
        return self.kind

    def __repr__(self):
        return f"<Oracle {self.spec()}>"

    def decide(self, w):
        w = tuple(w)
        if self.kind == "full":
            return YES
        if self.kind == "trivial":
            return YES if reduce_word(w) == () else NO
        if self.kind == "even-count":
            counts = {}
            for x in w:
                counts[x] = counts.get(x, 0) + 1
            return YES if all(c % 2 == 0 for c in counts.values()) else NO
        if self.kind == "even-length":
            return YES if len(w) % 2 == 0 else NO
        if self.kind == "dihedral":
            if len(set(w)) > 2:
                raise InputError(
                    "dihedral oracles are defined on words in two letters")
            r = reduce_word(w)
            return YES if len(r) % (2 * self.s) == 0 else NO
        return YES if canonical_rename(reduce_word(w)) in self._search else UNKNOWN


def _bfs_words(gens, max_len, attempt_cap):
    """Explore the invariant normal closure of the generator words.

    Moves: inverse, conjugation by a present or one fresh letter, single
    letter identifications, and products against earlier finds with the
    partner's letters mapped over every alignment into the pool. Words are
    kept in canonical renaming, pruned at max_len. The attempt cap bounds
    candidate generations, so the result is a deterministic underapproximation.
    """
    seen = {()}
    order = []

    def admit(w):
        w = canonical_rename(reduce_word(w))
        if len(w) <= max_len and w not in seen:
            seen.add(w)
            order.append(w)
            frontier.append(w)

    frontier = deque()
    for g in gens:
        admit(g)
    attempts = 0
    while frontier and attempts < attempt_cap:
        w = frontier.popleft()
        sup = sorted(set(w))
        fresh = sup[-1] + 1 if sup else 1
        admit(inverse(w))
        attempts += 1
        for x in sup + [fresh]:
            admit((x,) + w + (x,))
            attempts += 1
        for a in sup:
            for b in sup:
                if a != b:
                    admit(identify_letters(w, {a: b}))
                    attempts += 1
        for v in list(order):
            vsup = sorted(set(v))
            pool = sup + [fresh + i for i in range(len(vsup))]
            for combo in itertools.product(pool, repeat=len(vsup)):
                v2 = identify_letters(v, dict(zip(vsup, combo)))
                admit(tuple(w) + v2)
                admit(v2 + tuple(w))
                attempts += 2
                if attempts >= attempt_cap:
                    break
            if attempts >= attempt_cap:
                break
    return seen


def subgroup_member(w, oracle):
    """Decide w ∈ H for the oracle's subgroup; yes, no or unknown."""
    if isinstance(w, str):
        w = parse_word(w)
    return oracle.decide(w)


def category_of_subgroup_member(p, oracle):
    """Membership of p in the category attached to the oracle's subgroup:
    test the boundary word. Sound because the subgroup is invariant and
    normal, so the cutting point of the circular reading does not matter."""
    return oracle.decide(word_of_partition(p))


# ---------------------------------------------------------------------------
# witnesses: partitions realizing word operations

def _require_single_leg(p, what):
    if p.upper_count != 0 or not is_single_leg(p):
        raise InputError(f"{what} needs a single-leg partition, got {p.text()}")


def group_witness(op, p, q=None, letter=None, shared=()):
    """Build a partition whose word is the given operation of the inputs'.

    product: tensor with q's letters renamed apart; pairs (block of p,
    block of q) in shared are connected afterwards, identifying those
    letters. inverse: the mirrored row. conjugate: an outer pair wrapped
    around p, labelled fresh when letter is None, or connected to the
    existing block letter.
    """
    _require_single_leg(p, "group_witness")
    if op == "inverse":
        return Partition(0, p.lower_count, p.blocks[::-1])
    if op == "conjugate":
        m = p.block_count
        if letter is None:
            x = m + 1
        else:
            if not 1 <= letter <= m:
                raise InputError(f"no block {letter} to conjugate by")
            x = letter
        return Partition(0, p.lower_count + 2, (x,) + p.blocks + (x,))
    if op == "product":
        if q is None:
            raise InputError("product needs two partitions")
        _require_single_leg(q, "group_witness")
        shift = p.block_count
        raw = p.blocks + tuple(b + shift for b in q.blocks)
        parent = {b: b for b in raw}

        def find(b):
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            return b

        for bp, bq in shared:
            if not 1 <= bp <= p.block_count or not 1 <= bq <= q.block_count:
                raise InputError(f"bad shared block pair ({bp}, {bq})")
            parent[find(bp)] = find(bq + shift)
        return Partition(0, len(raw), tuple(find(b) for b in raw))
    raise InputError(f"unknown witness operation {op!r}")
