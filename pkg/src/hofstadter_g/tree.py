"""The infinite labelled tree whose parent map realizes G.

The root has two children. Its left child roots a copy of the whole tree;
its right child (label 2) has a single child rooting another copy. Levels
are labelled bottom-up from the root, and right to left within a level.

Coordinates ``(height, idx)`` count ``idx`` from the right, starting at 1.
At height h >= 2 the rightmost F(h) positions belong to the copy hanging
under vertex 2 (sitting at height h-2 of that copy) and the remaining
F(h+1) positions to the left copy (at height h-1 of it). Every coordinate
query walks down this split until it reaches the root or vertex 2, then
translates the answer back out.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import NoParentError, RangeError, ValidationError
from .fibzeck import FIB, MAX_FIB_INDEX, fib

# Height h holds F(h+2) vertices; heights 0..h hold F(h+4) - 2.
MAX_HEIGHT = MAX_FIB_INDEX - 4
# _BELOW[h] = number of vertices strictly below height h = F(h+3) - 2
_BELOW = [FIB[h + 3] - 2 for h in range(MAX_HEIGHT + 2)]
MAX_LABEL = _BELOW[MAX_HEIGHT + 1]

EXPLICIT_CAP = 25
RENDER_CAP = 8


@dataclass(frozen=True)
class TreeCoord:
    height: int
    idx: int

    def __post_init__(self):
        if not 0 <= self.height <= MAX_HEIGHT:
            raise RangeError(f"height {self.height} outside 0..{MAX_HEIGHT}")
        size = FIB[self.height + 2]
        if not 1 <= self.idx <= size:
            raise ValidationError(
                f"idx {self.idx} outside 1..{size} at height {self.height}"
            )


def level_size(h: int) -> int:
    if h < 0:
        raise ValidationError(f"height must be >= 0, got {h}")
    return fib(h + 2)


def cumulative_size(h: int) -> int:
    if h < 0:
        raise ValidationError(f"height must be >= 0, got {h}")
    return fib(h + 4) - 2


def _check_label(label: int) -> None:
    if label < 1:
        raise ValidationError(f"labels start at 1, got {label}")
    if label > MAX_LABEL:
        raise RangeError(f"label {label} exceeds 64-bit tree range ({MAX_LABEL})")


def label_to_coord(label: int) -> TreeCoord:
    _check_label(label)
    h = bisect_left(_BELOW, label) - 1
    return TreeCoord(h, label - _BELOW[h])


def coord_to_label(coord: TreeCoord) -> int:
    return _BELOW[coord.height] + coord.idx


def subtree_of(label: int) -> tuple[str, int]:
    """Which copy of the tree holds ``label``, and its label inside that copy.

    ``"left"`` is the copy rooted at vertex 3, ``"right"`` the copy hanging
    under vertex 2. Vertices 1 and 2 belong to neither.
    """
    coord = label_to_coord(label)
    h, i = coord.height, coord.idx
    if label == 3:
        return "left", 1
    if h < 2:
        raise ValidationError(f"vertex {label} is not inside either copy")
    if i <= FIB[h]:
        return "right", _BELOW[h - 2] + i
    return "left", _BELOW[h - 1] + i - FIB[h]


def _parent(h: int, i: int) -> tuple[int, int]:
    # Descend into the copy that owns (h, i); record each hop to undo it.
    hops = []
    while True:
        if h == 1:
            h, i = 0, 1
            break
        if i <= FIB[h]:
            if h == 2:
                h, i = 1, 1
                break
            hops.append(2)
            h -= 2
        else:
            i -= FIB[h]
            hops.append(1)
            h -= 1
    for hop in reversed(hops):
        h += hop
        if hop == 1:
            i += FIB[h]
    return h, i


def parent_coord(coord: TreeCoord) -> TreeCoord:
    if coord.height == 0:
        raise NoParentError("the root has no parent")
    return TreeCoord(*_parent(coord.height, coord.idx))


def parent_label(label: int) -> int:
    """Label of the parent of ``label``; parent_label(n + 1) == G(n)."""
    _check_label(label)
    if label == 1:
        raise NoParentError("the root has no parent")
    h = bisect_left(_BELOW, label) - 1
    ph, pi = _parent(h, label - _BELOW[h])
    return _BELOW[ph] + pi


def children_count(label: int) -> int:
    """Number of children of ``label``, found by walking down the split.

    Every vertex is, inside some nested copy, either that copy's root
    (two children) or that copy's vertex 2 (one child).
    """
    coord = label_to_coord(label)
    h, i = coord.height, coord.idx
    while True:
        if h == 0:
            return 2
        if h == 1:
            return 1 if i == 1 else 2
        if i <= FIB[h]:
            h -= 2
        else:
            i -= FIB[h]
            h -= 1


@dataclass(frozen=True)
class ExplicitTree:
    """Materialized tree through ``max_height``.

    ``parent[v]`` is the parent label of v (0 for the root, index 0 unused);
    ``children[v]`` lists v's children left to right; ``levels[h]`` lists
    the labels at height h left to right.
    """

    max_height: int
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    levels: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.parent) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(self.parent[v], v) for v in range(2, len(self.parent))]


_ROOT, _RIGHT = 0, 1


def build_explicit(max_height: int) -> ExplicitTree:
    """Grow the tree level by level straight from its recursive definition.

    Each vertex is tagged as the root of some copy (children: left copy's
    root, then a right vertex) or as a right vertex (one child: a copy's
    root). No coordinate arithmetic is used, so this doubles as an
    independent check on the functions above.
    """
    if max_height < 0:
        raise ValidationError(f"height must be >= 0, got {max_height}")
    if max_height > EXPLICIT_CAP:
        raise RangeError(f"explicit trees are capped at height {EXPLICIT_CAP}")
    parent = [0, 0]
    children: list[list[int]] = [[], []]
    levels = [(1,)]
    level = [(_ROOT, 1)]  # (kind, label), left to right
    for _ in range(max_height):
        kids = []
        for kind, label in level:
            if kind == _ROOT:
                kids.append((_ROOT, label))
                kids.append((_RIGHT, label))
            else:
                kids.append((_ROOT, label))
        start = len(parent) - 1
        size = len(kids)
        parent.extend([0] * size)
        children.extend([] for _ in range(size))
        labels = []
        nxt = []
        for pos, (kind, par) in enumerate(kids):
            v = start + size - pos  # right to left
            parent[v] = par
            children[par].append(v)
            labels.append(v)
            nxt.append((kind, v))
        levels.append(tuple(labels))
        level = nxt
    return ExplicitTree(
        max_height,
        tuple(parent),
        tuple(tuple(c) for c in children),
        tuple(levels),
    )


def to_dot(tree: ExplicitTree) -> str:
    lines = ["digraph G {"]
    lines += [f"  {p} -> {c};" for p, c in tree.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_ascii(tree: ExplicitTree) -> str:
    """Draw the tree top-down with each parent centred over its children."""
    if tree.max_height > RENDER_CAP:
        raise RangeError(f"ASCII rendering is capped at height {RENDER_CAP}")
    width = len(str(tree.size))
    step = width + 1
    x: dict[int, int] = {}
    slot = 0

    def place(v: int) -> None:
        nonlocal slot
        kids = tree.children[v]
        if not kids:
            x[v] = slot * step
            slot += 1
            return
        for c in kids:
            place(c)
        x[v] = (x[kids[0]] + x[kids[-1]]) // 2

    place(1)
    total = slot * step + width
    rows = []
    for h, level in enumerate(tree.levels):
        row = [" "] * total
        for v in level:
            text = str(v)
            start = max(x[v] - (len(text) - 1) // 2, 0)
            row[start : start + len(text)] = text
        rows.append("".join(row).rstrip())
        if h == tree.max_height:
            break
        row = [" "] * total
        for v in level:
            for c in tree.children[v]:
                if x[c] < x[v]:
                    row[(x[v] + x[c]) // 2] = "/"
                elif x[c] > x[v]:
                    row[(x[v] + x[c] + 1) // 2] = "\\"
                else:
                    row[x[v]] = "|"
        rows.append("".join(row).rstrip())
    return "\n".join(rows) + "\n"
