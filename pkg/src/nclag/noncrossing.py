"""Noncrossing partitions, Kreweras complements, binary-tree branch
readings, and the Motzkin codec for words with bounded letter multiplicity.

Blocks are stored sorted by their minima with elements sorted inside, so
the ordered type is a plain projection.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from . import parking


class NoncrossingPartition:
    __slots__ = ("n", "blocks")

    def __init__(self, n, blocks):
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        blocks = tuple(sorted(blocks, key=lambda b: b[0]))
        seen = [e for b in blocks for e in b]
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError("blocks must partition 1..n")
        if not _blocks_noncrossing(blocks):
            raise ValueError("blocks are crossing")
        self.n = n
        self.blocks = blocks

    def ordered_type(self):
        return tuple(len(b) for b in self.blocks)

    def reduced_ordered_type(self):
        return tuple(len(b) - 1 for b in self.blocks if len(b) > 1)

    def block_of(self, e):
        for b in self.blocks:
            if e in b:
                return b
        raise ValueError(f"{e} not in ground set")

    def __eq__(self, other):
        return (
            isinstance(other, NoncrossingPartition)
            and other.n == self.n
            and other.blocks == self.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return to_text(self)

    @classmethod
    def singletons(cls, n):
        return cls(n, [(i,) for i in range(1, n + 1)])

    @classmethod
    def one_block(cls, n):
        return cls(n, [tuple(range(1, n + 1))])


def _blocks_noncrossing(blocks) -> bool:
    # two blocks cross iff their merged element sequence alternates 4+ runs
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            merged = sorted(
                [(e, 0) for e in blocks[a]] + [(e, 1) for e in blocks[b]]
            )
            runs = 1
            for k in range(1, len(merged)):
                if merged[k][1] != merged[k - 1][1]:
                    runs += 1
            if runs >= 4:
                return False
    return True


def is_noncrossing(blocks) -> bool:
    return _blocks_noncrossing(
        tuple(tuple(sorted(b)) for b in blocks)
    )


def ordered_type(p: NoncrossingPartition):
    return p.ordered_type()


def reduced_ordered_type(p: NoncrossingPartition):
    return p.reduced_ordered_type()


def to_text(p: NoncrossingPartition) -> str:
    sep = "," if p.n > 9 else ""
    return "|".join(sep.join(str(e) for e in b) for b in p.blocks)


def from_text(text: str) -> NoncrossingPartition:
    blocks = []
    for chunk in text.strip().split("|"):
        if "," in chunk:
            blocks.append(tuple(int(x) for x in chunk.split(",")))
        else:
            blocks.append(tuple(int(ch) for ch in chunk))
    n = max(e for b in blocks for e in b)
    return NoncrossingPartition(n, blocks)


# ---------------------------------------------------------------------------
# Bijection with nondecreasing parking functions


def ndpf_to_nc(w) -> NoncrossingPartition:
    """Decode a word whose letters are block minima with multiplicities the
    block sizes; non-minima fill the innermost open block."""
    w = tuple(w)
    if not parking.is_nondecreasing(w) or not parking.is_parking(w):
        raise ValueError("word must be a nondecreasing parking function")
    n = len(w)
    counts = Counter(w)
    blocks = {}
    remaining = {}
    stack = []
    for e in range(1, n + 1):
        if counts.get(e):
            blocks[e] = [e]
            remaining[e] = counts[e] - 1
            stack.append(e)
        else:
            while stack and remaining[stack[-1]] == 0:
                stack.pop()
            if not stack:
                raise ValueError("letters are not block minima")
            m = stack[-1]
            blocks[m].append(e)
            remaining[m] -= 1
    return NoncrossingPartition(n, list(blocks.values()))


def nc_to_ndpf(p: NoncrossingPartition):
    return tuple(sorted(b[0] for b in p.blocks for _ in b))


def enumerate_nc(n):
    """All noncrossing partitions of 1..n (Catalan(n) of them)."""
    return [ndpf_to_nc(w) for w in parking.enumerate_ndpf(n)]


# ---------------------------------------------------------------------------
# Kreweras complement via the permutation product


def nc_to_permutation(p: NoncrossingPartition):
    """One-line permutation whose cycles are the blocks, each traversed
    increasingly."""
    w = [0] * p.n
    for b in p.blocks:
        for k, e in enumerate(b):
            w[e - 1] = b[(k + 1) % len(b)]
    return w


def permutation_to_nc(w) -> NoncrossingPartition:
    n = len(w)
    seen = set()
    blocks = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        e = w[start - 1]
        while e != start:
            cyc.append(e)
            seen.add(e)
            e = w[e - 1]
        blocks.append(cyc)
    return NoncrossingPartition(n, blocks)


def kreweras(p: NoncrossingPartition) -> NoncrossingPartition:
    """The Kreweras complement: cycles of the inverse permutation composed
    with the long cycle (long cycle applied first)."""
    n = p.n
    w = nc_to_permutation(p)
    winv = [0] * n
    for i in range(1, n + 1):
        winv[w[i - 1] - 1] = i
    prod = [winv[i % n] for i in range(1, n + 1)]
    out = permutation_to_nc(prod)
    # noncrossing by theory; the constructor re-validates, but make the
    # cycle traversal consistency explicit too
    assert nc_to_permutation(out) == prod
    return out


# ---------------------------------------------------------------------------
# Binary trees and branch readings


class BinaryTree:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left
        self.right = right

    def size(self) -> int:
        n = 1
        if self.left:
            n += self.left.size()
        if self.right:
            n += self.right.size()
        return n

    def __eq__(self, other):
        return (
            isinstance(other, BinaryTree)
            and other.left == self.left
            and other.right == self.right
        )

    def __hash__(self):
        return hash((BinaryTree, self.left, self.right))

    def __repr__(self):
        l = repr(self.left) if self.left else ""
        r = repr(self.right) if self.right else ""
        return f"({l}.{r})"


def enumerate_trees(n):
    """All binary trees with n nodes."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _trees(n)


@lru_cache(maxsize=None)
def _trees(n):
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for l in _trees(k):
            for r in _trees(n - 1 - k):
                out.append(BinaryTree(l, r))
    return tuple(out)


def _infix_nodes(t):
    """Infix traversal as (path, side, node); subtrees may be shared
    between trees, so nodes are addressed by their root path."""
    out = []

    def walk(nd, path, side):
        if nd is None:
            return
        walk(nd.left, path + ("L",), "L")
        out.append((path, side, nd))
        walk(nd.right, path + ("R",), "R")

    walk(t, (), None)
    return out


def _chain_blocks(t, side):
    """Maximal chains of side-child edges, as lists of infix labels ordered
    top to bottom; a node is a chain top iff it is not a side-child."""
    nodes = _infix_nodes(t)
    label = {path: k + 1 for k, (path, _, _) in enumerate(nodes)}
    child = "left" if side == "L" else "right"
    chains = []
    for path, sd, nd in nodes:
        if sd == side:
            continue
        chain = []
        cur, cur_path = nd, path
        while cur is not None:
            chain.append(label[cur_path])
            cur = getattr(cur, child)
            cur_path = cur_path + (side,)
        chains.append(chain)
    return chains


def _branch_blocks(t, side):
    blocks = [sorted(c) for c in _chain_blocks(t, side)]
    blocks.sort(key=lambda b: b[0])
    return blocks


def tree_phi(t: BinaryTree):
    """The pair (left-branch partition, right-branch partition) of a tree
    under infix labeling; the second is the Kreweras complement of the
    first (asserted)."""
    if t is None:
        raise ValueError("tree must be nonempty")
    n = t.size()
    p_left = NoncrossingPartition(n, _branch_blocks(t, "L"))
    p_right = NoncrossingPartition(n, _branch_blocks(t, "R"))
    assert kreweras(p_left) == p_right
    return p_left, p_right


def tau(t: BinaryTree):
    """Ordered branch lengths (left-branch composition, right-branch
    composition)."""
    p_left, p_right = tree_phi(t)
    return p_left.ordered_type(), p_right.ordered_type()


def infix_successor(t: BinaryTree, i: int) -> int:
    """Next label in infix order, found by the two-move branch rule: one
    step down the right branch through i (cycling at the bottom), then one
    step up the left branch (cycling at the top)."""
    n = t.size()
    if not 1 <= i <= n:
        raise ValueError("label out of range")
    right_chain = {}
    for chain in _chain_blocks(t, "R"):
        for lbl in chain:
            right_chain[lbl] = chain
    left_chain = {}
    for chain in _chain_blocks(t, "L"):
        for lbl in chain:
            left_chain[lbl] = chain
    rb = right_chain[i]
    j = rb[(rb.index(i) + 1) % len(rb)]  # one step down, cycling
    lb = left_chain[j]
    return lb[(lb.index(j) - 1) % len(lb)]  # one step up, cycling


# ---------------------------------------------------------------------------
# Rebuilding a tree from its branch compositions


class RebuildFailure(ValueError):
    def __init__(self, message, step):
        super().__init__(f"{message} (at step {step})")
        self.step = step


class _Node:
    __slots__ = ("left", "right", "marked")

    def __init__(self):
        self.left = None
        self.right = None
        self.marked = False


def _freeze(node):
    if node is None:
        return None
    return BinaryTree(_freeze(node.left), _freeze(node.right))


def _first_unmarked(root):
    """(node, side) for the first unmarked node in infix order; the root
    counts as a left child."""
    found = []

    def walk(nd, side):
        if nd is None or found:
            return
        walk(nd.left, "L")
        if found:
            return
        if not nd.marked:
            found.append((nd, side))
            return
        walk(nd.right, "R")

    walk(root, "L")
    return found[0] if found else None


def rebuild_tree(i_comp, j_comp, trace=None):
    """Rebuild the unique tree whose ordered left-branch lengths are I and
    right-branch lengths are J, gluing one branch per step.

    A glued branch of size p marks its attachment node and adds p-1 new
    nodes; size-1 parts only mark.  Incompatible inputs raise
    RebuildFailure carrying the failing step index.
    """
    i_parts = list(i_comp)
    j_parts = list(j_comp)
    step = 1
    if not i_parts:
        if j_parts:
            raise RebuildFailure("no left branch to start from", step)
        return None
    root = _Node()
    cur = root
    for _ in range(i_parts[0] - 1):
        cur.left = _Node()
        cur = cur.left
    i_used, j_used = 1, 0
    if trace is not None:
        trace.append((f"i1={i_parts[0]}", _freeze(root)))
    while True:
        step += 1
        spot = _first_unmarked(root)
        if spot is None:
            break
        node, side = spot
        if side == "L":
            if j_used >= len(j_parts):
                raise RebuildFailure("ran out of right-branch parts", step)
            size = j_parts[j_used]
            j_used += 1
            label = f"j{j_used}={size}"
            node.marked = True
            cur = node
            for _ in range(size - 1):
                cur.right = _Node()
                cur = cur.right
        else:
            if i_used >= len(i_parts):
                raise RebuildFailure("ran out of left-branch parts", step)
            size = i_parts[i_used]
            i_used += 1
            label = f"i{i_used}={size}"
            node.marked = True
            cur = node
            for _ in range(size - 1):
                cur.left = _Node()
                cur = cur.left
        if trace is not None:
            trace.append((label, _freeze(root)))
    if i_used < len(i_parts) or j_used < len(j_parts):
        raise RebuildFailure("unused parts remain", step)
    return _freeze(root)


# ---------------------------------------------------------------------------
# Motzkin codec: words with bounded multiplicity and height-one paths


def is_s_word(w) -> bool:
    """Sorted word with i <= w_i <= n and no letter appearing three times."""
    n = len(w)
    if tuple(sorted(w)) != tuple(w):
        return False
    if any(not (i + 1 <= v <= n) for i, v in enumerate(w)):
        return False
    return all(c <= 2 for c in Counter(w).values())


def is_sprime_word(w) -> bool:
    """Nondecreasing parking function with letter multiplicity at most 2."""
    return (
        parking.is_nondecreasing(w)
        and parking.is_parking(w)
        and all(c <= 2 for c in Counter(w).values())
    )


def s_to_sprime(w):
    """The reversal-complement bijection between the two word sets."""
    if not is_s_word(w):
        raise ValueError("word outside the source set")
    n = len(w)
    return tuple(n + 1 - v for v in reversed(w))


def sprime_to_s(w):
    if not is_sprime_word(w):
        raise ValueError("word outside the target set")
    n = len(w)
    return tuple(n + 1 - v for v in reversed(w))


def word_to_path(w) -> str:
    """Motzkin path of a bounded-multiplicity word: pair minima rise, pair
    maxima fall, singletons stay level."""
    if not is_sprime_word(w):
        raise ValueError("word outside the domain")
    p = ndpf_to_nc(w)
    steps = {}
    for b in p.blocks:
        if len(b) == 1:
            steps[b[0]] = "H"
        else:
            steps[b[0]] = "U"
            steps[b[1]] = "D"
    return "".join(steps[e] for e in range(1, p.n + 1))


def path_to_word(path: str):
    """Inverse codec: rebuild the matching, then read off block minima."""
    n = len(path)
    stack = []
    blocks = []
    for k, ch in enumerate(path, start=1):
        if ch == "U":
            stack.append(k)
        elif ch == "D":
            if not stack:
                raise ValueError("path dips below the axis")
            blocks.append((stack.pop(), k))
        elif ch == "H":
            blocks.append((k,))
        else:
            raise ValueError(f"bad step {ch!r}")
    if stack:
        raise ValueError("path does not return to the axis")
    return nc_to_ndpf(NoncrossingPartition(n, blocks))


def enumerate_s_words(n, upsteps=None):
    """All source words of length n, optionally only those with a given
    number of repeated letters."""
    out = []
    for w in parking.enumerate_ndpf(n):
        if all(c <= 2 for c in Counter(w).values()):
            if upsteps is None or sum(
                1 for c in Counter(w).values() if c == 2
            ) == upsteps:
                out.append(sprime_to_s(w))
    return sorted(out)
