"""Independent reference implementations for test expectations.

Nothing in this module imports pcat. Partitions are handled either as plain
(k, l, blocks) triples or as frozensets of point sets, operations are naive
and brute-force, and matrices are lists of lists. Slow on purpose: the point
is to have a second route to every value the test suite asserts.
"""

from fractions import Fraction
from itertools import product


# ---------------------------------------------------------------------------
# enumeration

def set_partitions(n):
    """All set partitions of n points as 1-based first-appearance id tuples."""
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


def two_row_partitions(max_points):
    """All (k, l, blocks) triples with k + l <= max_points."""
    for total in range(max_points + 1):
        for assign in set_partitions(total):
            for k in range(total + 1):
                yield k, total - k, canonical(k, total - k, assign)


def canonical(k, l, blocks):
    # renumber ids by first appearance scanning upper left to right, lower next
    rel = {}
    return tuple(rel.setdefault(b, len(rel) + 1) for b in blocks)


# ---------------------------------------------------------------------------
# structural predicates

def boundary_word(k, l, blocks):
    """Block ids in circular boundary order: lower row left to right, then
    upper row right to left, renamed by first appearance."""
    seq = list(blocks[k:]) + list(blocks[:k][::-1])
    rel = {}
    return tuple(rel.setdefault(b, len(rel) + 1) for b in seq)


def is_noncrossing(k, l, blocks):
    """No two blocks alternate a b a b around the boundary cycle."""
    word = list(blocks[k:]) + list(blocks[:k][::-1])
    n = len(word)
    for a in range(n):
        for b in range(a + 1, n):
            if word[b] == word[a]:
                continue
            for c in range(b + 1, n):
                if word[c] != word[a]:
                    continue
                for d in range(c + 1, n):
                    if word[d] == word[b]:
                        return False
    return True


def all_blocks_even(blocks):
    return all(list(blocks).count(b) % 2 == 0 for b in set(blocks))


def is_pairing(blocks):
    return all(list(blocks).count(b) == 2 for b in set(blocks))


def is_single_leg_triple(k, l, blocks):
    if k != 0:
        return False
    return all(blocks[i] != blocks[i + 1] for i in range(len(blocks) - 1))


# ---------------------------------------------------------------------------
# naive category operations on frozenset-of-points diagrams

def to_sets(k, l, blocks):
    by_id = {}
    for i in range(k):
        by_id.setdefault(blocks[i], []).append(("u", i + 1))
    for j in range(l):
        by_id.setdefault(blocks[k + j], []).append(("l", j + 1))
    return frozenset(frozenset(v) for v in by_id.values())


def from_sets(k, l, sets):
    order = [("u", i) for i in range(1, k + 1)] + [("l", j) for j in range(1, l + 1)]
    out = []
    for pt in order:
        for idx, blk in enumerate(sorted(sets, key=sorted)):
            if pt in blk:
                out.append(idx)
                break
        else:
            raise AssertionError(f"point {pt} missing")
    return canonical(k, l, tuple(out))


def naive_tensor(p, q):
    k1, l1, b1 = p
    k2, l2, b2 = q
    s1 = to_sets(k1, l1, b1)
    shifted = frozenset(
        frozenset(("u", i + k1) if row == "u" else ("l", i + l1) for row, i in blk)
        for blk in to_sets(k2, l2, b2)
    )
    return k1 + k2, l1 + l2, from_sets(k1 + k2, l1 + l2, s1 | shifted)


def naive_involute(p):
    k, l, b = p
    flipped = frozenset(
        frozenset(("l", i) if row == "u" else ("u", i) for row, i in blk)
        for blk in to_sets(k, l, b)
    )
    return l, k, from_sets(l, k, flipped)


def naive_rotate(p, side, direction):
    k, l, b = p
    if direction == "down":
        assert k >= 1
        if side == "left":
            move = {("u", i): ("u", i - 1) for i in range(2, k + 1)}
            move[("u", 1)] = ("l", 1)
            move.update({("l", j): ("l", j + 1) for j in range(1, l + 1)})
        else:
            move = {("u", i): ("u", i) for i in range(1, k)}
            move[("u", k)] = ("l", l + 1)
            move.update({("l", j): ("l", j) for j in range(1, l + 1)})
        k2, l2 = k - 1, l + 1
    else:
        assert l >= 1
        if side == "left":
            move = {("l", j): ("l", j - 1) for j in range(2, l + 1)}
            move[("l", 1)] = ("u", 1)
            move.update({("u", i): ("u", i + 1) for i in range(1, k + 1)})
        else:
            move = {("l", j): ("l", j) for j in range(1, l)}
            move[("l", l)] = ("u", k + 1)
            move.update({("u", i): ("u", i) for i in range(1, k + 1)})
        k2, l2 = k + 1, l - 1
    moved = frozenset(frozenset(move[pt] for pt in blk) for blk in to_sets(k, l, b))
    return k2, l2, from_sets(k2, l2, moved)


def naive_compose(p, q):
    """Stack p over q, glue the middle row, return ((k, m, blocks), loops)."""
    k, l, bp = p
    l2, m, bq = q
    assert l == l2
    blocks = []
    for blk in to_sets(k, l, bp):
        blocks.append({("pu", i) if row == "u" else ("mid", i) for row, i in blk})
    for blk in to_sets(l, m, bq):
        blocks.append({("mid", i) if row == "u" else ("ql", i) for row, i in blk})
    # merge any two classes sharing a point, until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                if blocks[i] and blocks[j] and blocks[i] & blocks[j]:
                    blocks[i] |= blocks[j]
                    blocks[j] = set()
                    changed = True
    blocks = [b for b in blocks if b]
    loops = 0
    kept = []
    for blk in blocks:
        ret = {pt for pt in blk if pt[0] != "mid"}
        if ret:
            kept.append(frozenset(("u", i) if row == "pu" else ("l", i) for row, i in ret))
        else:
            loops += 1
    return (k, m, from_sets(k, m, frozenset(kept))), loops


# ---------------------------------------------------------------------------
# words over involutive letters

def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def word_of(k, l, blocks):
    return free_reduce(boundary_word(k, l, blocks))


def rename_first_appearance(word):
    rel = {}
    return tuple(rel.setdefault(x, len(rel) + 1) for x in word)


def in_trivial(word):
    return not free_reduce(word)


def in_even_counts(word):
    w = free_reduce(word)
    return all(w.count(x) % 2 == 0 for x in set(w))


def in_even_length(word):
    return len(free_reduce(word)) % 2 == 0


def in_dihedral(word, s):
    """Image of the word trivial in the dihedral group of order 2s.

    Only words on at most two letters; the reduced word alternates, so it is
    trivial iff its length is an even multiple of... length 2*j with s | j.
    """
    w = free_reduce(word)
    assert len(set(w)) <= 2
    if not w:
        return True
    if len(w) % 2 == 1:
        return False
    return (len(w) // 2) % s == 0


# ---------------------------------------------------------------------------
# naive bounded fixpoint of the four category operations (tiny bounds only)

def naive_closure(generator_triples, max_points):
    cur = {(1, 1, (1, 1)), (0, 2, (1, 1))}
    cur |= {t for t in generator_triples}
    cur = {t for t in cur if t[0] + t[1] <= max_points}
    while True:
        new = set(cur)
        for t in cur:
            new.add(naive_involute(t))
            k, l, _ = t
            for side in ("left", "right"):
                if k >= 1:
                    new.add(naive_rotate(t, side, "down"))
                if l >= 1:
                    new.add(naive_rotate(t, side, "up"))
        for p in cur:
            for q in cur:
                if p[0] + p[1] + q[0] + q[1] <= max_points:
                    new.add(naive_tensor(p, q))
                if p[1] == q[0] and p[0] + q[1] <= max_points:
                    new.add(naive_compose(p, q)[0])
        if new == cur:
            return cur
        cur = new


# ---------------------------------------------------------------------------
# naive exact matrices

def naive_t_map(p, n):
    k, l, blocks = p
    rows = []
    for j in product(range(1, n + 1), repeat=l):
        row = []
        for i in product(range(1, n + 1), repeat=k):
            row.append(naive_delta(p, i, j))
        rows.append(row)
    return rows


def naive_delta(p, i, j):
    k, l, blocks = p
    values = {}
    for pos, b in enumerate(blocks):
        v = i[pos] if pos < k else j[pos - k]
        if values.setdefault(b, v) != v:
            return 0
    return 1


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    assert not a or len(a[0]) == inner
    return [[sum(a[r][t] * b[t][c] for t in range(inner)) for c in range(cols)]
            for r in range(rows)]


def mat_kron(a, b):
    br, bc = len(b), len(b[0]) if b else 0
    return [[a[r // br][c // bc] * b[r % br][c % bc]
             for c in range(len(a[0]) * bc)]
            for r in range(len(a) * br)]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_scale(a, s):
    return [[s * x for x in row] for row in a]


def mat_eq(a, b):
    if len(a) != len(b):
        return False
    return all(len(ra) == len(rb) and all(Fraction(x) == Fraction(y) for x, y in zip(ra, rb))
               for ra, rb in zip(a, b))
