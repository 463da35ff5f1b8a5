"""Two-row set partition diagrams and their exact category operations.

A diagram in P(k, l) is a set partition of k upper points (1..k, left to
right) and l lower points (1'..l', left to right). Diagrams are stored
canonically: block ids are 1..m in order of first appearance, scanning the
upper row left to right and then the lower row. Operations are exact;
composition additionally reports how many blocks were erased from the middle
row (the loop count needed to scale tensor maps).

The text format is ``k;l;b1,...,b(k+l)`` with canonical ids, e.g. ``0;2;1,1``
for the pair and ``0;0;`` for the empty diagram. Words (the circular boundary
reading) are tuples of positive ints with a letter display a..z, then [27]
and up; ``e`` denotes the empty word.
"""

from __future__ import annotations

from collections import namedtuple


class InputError(ValueError):
    """Malformed diagram, word or text format, or a violated precondition."""


CompositionResult = namedtuple("CompositionResult", ["partition", "loops"])


# ---------------------------------------------------------------------------
# kernel on raw (upper_count, lower_count, blocks) triples
#
# The closure engine feeds millions of diagrams through these, so they stay
# plain-tuple functions; Partition methods wrap them.

def _canon(assign):
    rel = {}
    out = []
    for b in assign:
        c = rel.get(b)
        if c is None:
            c = len(rel) + 1
            rel[b] = c
        out.append(c)
    return tuple(out)


def _tensor(k1, l1, b1, k2, l2, b2):
    shift = max(b1, default=0)
    up = list(b1[:k1]) + [x + shift for x in b2[:k2]]
    low = list(b1[k1:]) + [x + shift for x in b2[k2:]]
    return k1 + k2, l1 + l2, _canon(up + low)


def _compose(k, l, bp, m, bq):
    # nodes: p upper 0..k-1, middle k..k+l-1 (p lower = q upper), q lower k+l..
    n = k + l + m
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first = {}
    for pos in range(k + l):
        b = bp[pos]
        if b in first:
            ra, rb = find(first[b]), find(pos)
            if ra != rb:
                parent[rb] = ra
        else:
            first[b] = pos
    first = {}
    for pos in range(l + m):
        b = bq[pos]
        node = k + pos
        if b in first:
            ra, rb = find(first[b]), find(node)
            if ra != rb:
                parent[rb] = ra
        else:
            first[b] = node
    assign = [find(x) for x in range(k)] + [find(x) for x in range(k + l, n)]
    mid_roots = {find(x) for x in range(k, k + l)}
    loops = len(mid_roots.difference(assign))
    return k, m, _canon(assign), loops


def _involute(k, l, b):
    return l, k, _canon(b[k:] + b[:k])


def _rotate(k, l, b, side, direction):
    b = list(b)
    if direction == "down":
        if side == "left":
            arr = b[1:k] + [b[0]] + b[k:]
        else:
            arr = b[:k - 1] + b[k:] + [b[k - 1]]
        return k - 1, l + 1, _canon(arr)
    if side == "left":
        arr = [b[k]] + b[:k] + b[k + 1:]
    else:
        arr = b[:k] + [b[-1]] + b[k:-1]
    return k + 1, l - 1, _canon(arr)


# ---------------------------------------------------------------------------
# word text format (the boundary reading of a diagram is a word)

def parse_word(text):
    """Parse a word: a..z are letters 1..26, [n] beyond, 'e' alone is empty."""
    if text == "e":
        return ()
    if not text:
        raise InputError("empty word is spelled 'e'")
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if "a" <= ch <= "z":
            out.append(ord(ch) - 96)
            i += 1
        elif ch == "[":
            j = text.find("]", i)
            if j < 0:
                raise InputError(f"unterminated letter bracket in {text!r}")
            try:
                x = int(text[i + 1:j])
            except ValueError:
                raise InputError(f"bad letter index in {text!r}") from None
            if x < 1:
                raise InputError(f"letters are positive ints, got {x}")
            out.append(x)
            i = j + 1
        else:
            raise InputError(f"bad character {ch!r} in word {text!r}")
    return tuple(out)


def word_to_text(word):
    if not word:
        return "e"
    return "".join(chr(96 + x) if 1 <= x <= 26 else f"[{x}]" for x in word)


# ---------------------------------------------------------------------------

class Partition:
    """A two-row set partition diagram, always in canonical form.

    Treat instances as immutable; all operations return new diagrams.
    Equality and hashing use the (upper_count, lower_count, blocks) triple.
    """

    __slots__ = ("upper_count", "lower_count", "blocks", "_hash")

    def __init__(self, upper_count, lower_count, blocks):
        blocks = tuple(blocks)
        if upper_count < 0 or lower_count < 0:
            raise InputError("point counts must be nonnegative")
        if len(blocks) != upper_count + lower_count:
            raise InputError(
                f"expected {upper_count + lower_count} block ids, got {len(blocks)}")
        self.upper_count = upper_count
        self.lower_count = lower_count
        self.blocks = _canon(blocks)
        self._hash = hash((upper_count, lower_count, self.blocks))

    @classmethod
    def _wrap(cls, k, l, blocks):
        # trusted path for kernel output, skips validation and relabelling
        p = object.__new__(cls)
        p.upper_count = k
        p.lower_count = l
        p.blocks = blocks
        p._hash = hash((k, l, blocks))
        return p

    # -- text and word formats ------------------------------------------------

    @classmethod
    def from_text(cls, text):
        parts = text.strip().split(";")
        if len(parts) != 3:
            raise InputError(f"expected k;l;b1,...,bn, got {text!r}")
        try:
            k, l = int(parts[0]), int(parts[1])
            ids = [int(x) for x in parts[2].split(",")] if parts[2] else []
        except ValueError:
            raise InputError(f"bad numbers in partition text {text!r}") from None
        if any(x < 1 for x in ids):
            raise InputError("block ids are positive ints")
        return cls(k, l, ids)

    def text(self):
        return f"{self.upper_count};{self.lower_count};" + ",".join(map(str, self.blocks))

    @classmethod
    def from_word(cls, word):
        """Diagram in P(0, n) connecting all equal letters of the word."""
        if isinstance(word, str):
            word = parse_word(word)
        return cls(0, len(word), word)

    def to_word(self):
        """Boundary reading as a word: lower row left to right, then upper
        row right to left; with no lower points the upper row is read right
        to left. One letter per block, unreduced, first-appearance letters."""
        k = self.upper_count
        return _canon(self.blocks[k:] + self.blocks[:k][::-1])

    # -- category operations --------------------------------------------------

    def tensor(self, other):
        """Horizontal concatenation, other to the right of self."""
        k, l, b = _tensor(self.upper_count, self.lower_count, self.blocks,
                          other.upper_count, other.lower_count, other.blocks)
        return Partition._wrap(k, l, b)

    def compose(self, other):
        """Stack self on top of other, glue the middle row, erase it.

        Needs self.lower_count == other.upper_count. Returns a
        CompositionResult; loops counts the erased middle classes that touch
        no retained point.
        """
        if self.lower_count != other.upper_count:
            raise InputError(
                f"cannot compose P({self.upper_count},{self.lower_count}) "
                f"with P({other.upper_count},{other.lower_count})")
        k, m, b, loops = _compose(self.upper_count, self.lower_count, self.blocks,
                                  other.lower_count, other.blocks)
        return CompositionResult(Partition._wrap(k, m, b), loops)

    def involute(self):
        """Vertical flip: upper and lower rows exchanged."""
        l, k, b = _involute(self.upper_count, self.lower_count, self.blocks)
        return Partition._wrap(l, k, b)

    def rotate(self, side, direction):
        """Move the outermost point on the given side to the other row.

        direction 'down' takes the upper point, 'up' the lower one; the point
        keeps its block.
        """
        if side not in ("left", "right"):
            raise InputError(f"side must be left or right, got {side!r}")
        if direction not in ("up", "down"):
            raise InputError(f"direction must be up or down, got {direction!r}")
        if direction == "down" and self.upper_count == 0:
            raise InputError("cannot rotate down from an empty upper row")
        if direction == "up" and self.lower_count == 0:
            raise InputError("cannot rotate up from an empty lower row")
        k, l, b = _rotate(self.upper_count, self.lower_count, self.blocks,
                          side, direction)
        return Partition._wrap(k, l, b)

    def delta(self, i, j):
        """1 if every block carries one constant index value, else 0.

        i indexes the upper points, j the lower ones.
        """
        i, j = tuple(i), tuple(j)
        if len(i) != self.upper_count or len(j) != self.lower_count:
            raise InputError("index tuples must match the point counts")
        seen = {}
        for b, v in zip(self.blocks, i + j):
            if seen.setdefault(b, v) != v:
                return 0
        return 1

    # -- misc ------------------------------------------------------------------

    @property
    def points(self):
        return self.upper_count + self.lower_count

    @property
    def block_count(self):
        return max(self.blocks, default=0)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return (self.upper_count == other.upper_count
                and self.lower_count == other.lower_count
                and self.blocks == other.blocks)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<Partition {self.text()}>"

    def __str__(self):
        return self.text()


# ---------------------------------------------------------------------------
# op-style module interface

def make_partition(upper_count, lower_count, blocks):
    return Partition(upper_count, lower_count, blocks)


def from_word(word):
    return Partition.from_word(word)


def to_word(p):
    return p.to_word()


def tensor(p, q):
    return p.tensor(q)


def compose(p, q):
    return p.compose(q)


def involute(p):
    return p.involute()


def rotate(p, side, direction):
    return p.rotate(side, direction)


def delta(p, i, j):
    return p.delta(i, j)


def canonicalize(p):
    """Identity on Partition instances; they are canonical by construction."""
    if not isinstance(p, Partition):
        raise InputError("canonicalize expects a Partition")
    return p


def all_partitions(max_points):
    """Every diagram with at most max_points points, small sizes first."""
    if max_points < 0:
        raise InputError("max_points must be nonnegative")
    for total in range(max_points + 1):
        for assign in _set_partitions(total):
            for k in range(total + 1):
                yield Partition(k, total - k, assign)


def _set_partitions(n):
    # restricted growth strings
    if n == 0:
        yield ()
        return
    a = [1] * n
    m = [1] * n
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == m[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 1
            m[j] = m[i]
