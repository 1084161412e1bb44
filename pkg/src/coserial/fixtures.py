"""Named example quivers and seeded random generators."""

from __future__ import annotations

import random
import re
from typing import Callable, Optional

from .comodule import Representation
from .linalg import GF2, Field, Matrix
from .quiver import FamilyDecl, ValuedQuiver, emit_dsl


def line(n: int) -> ValuedQuiver:
    """1 -> 2 -> ... -> n."""
    if n < 1:
        raise ValueError("line needs at least one vertex")
    return ValuedQuiver.build(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def crown(n: int) -> ValuedQuiver:
    """Oriented cycle on 1..n with arrows i+1 -> i and 1 -> n (a loop when n = 1)."""
    if n < 1:
        raise ValueError("crown needs at least one vertex")
    if n == 1:
        return ValuedQuiver.build([1], [(1, 1)])
    return ValuedQuiver.build(range(1, n + 1), [(i + 1, i) for i in range(1, n)] + [(1, n)])


def two_loop() -> ValuedQuiver:
    """One vertex with two loops, stored as a single loop labelled (2,2)."""
    return ValuedQuiver.build(["a"], [("a", "a", 2, 2)])


def vee() -> ValuedQuiver:
    return ValuedQuiver.build([1, 2, 3], [(1, 3), (2, 3)])


def triangle() -> ValuedQuiver:
    return ValuedQuiver.build([1, 2, 3], [(1, 2), (2, 3), (1, 3)])


def _window(kind: str, order: list[int]) -> ValuedQuiver:
    names = [str(i) for i in order]
    return ValuedQuiver.build(names, list(zip(names, names[1:])), FamilyDecl(kind, tuple(names)))


def window_biinfinite(n: int) -> ValuedQuiver:
    """Window -n .. n of the line infinite in both directions."""
    return _window("LineBiInfinite", list(range(-n, n + 1)))


def window_right(n: int) -> ValuedQuiver:
    """Window 0 -> 1 -> ... -> n of the line with a source and no sink."""
    return _window("LineRightInfinite", list(range(0, n + 1)))


def window_left(n: int) -> ValuedQuiver:
    """Window n -> ... -> 1 -> 0 of the line with a sink and no source."""
    return _window("LineLeftInfinite", list(range(n, -1, -1)))


FIXTURES: dict[str, tuple[Callable, bool]] = {
    # name -> (constructor, takes a size argument)
    "line": (line, True),
    "crown": (crown, True),
    "two-loop": (two_loop, False),
    "vee": (vee, False),
    "triangle": (triangle, False),
    "window-biinfinite": (window_biinfinite, True),
    "window-right": (window_right, True),
    "window-left": (window_left, True),
}

_SPEC = re.compile(r"^\s*([a-z-]+)\s*(?:\(\s*(-?\d+)\s*\))?\s*$")


def fixture(spec: str, size: Optional[int] = None) -> ValuedQuiver:
    """Build a fixture from ``name``, ``name(n)`` or a name plus ``size``."""
    m = _SPEC.match(spec)
    if not m or m.group(1) not in FIXTURES:
        raise KeyError(f"unknown fixture {spec!r}; choose from {', '.join(FIXTURES)}")
    name, arg = m.group(1), m.group(2)
    ctor, sized = FIXTURES[name]
    if arg is not None:
        size = int(arg)
    if sized:
        if size is None:
            raise ValueError(f"fixture {name} needs a size")
        return ctor(size)
    if size is not None:
        raise ValueError(f"fixture {name} takes no size")
    return ctor()


def fixture_text(spec: str, size: Optional[int] = None) -> str:
    return emit_dsl(fixture(spec, size))


# ---------------------------------------------------------------------------
# Random generators


def random_quiver(rng: random.Random, max_vertices: int = 8, max_label: int = 2) -> ValuedQuiver:
    """A small random valued quiver.

    One third are random disjoint unions of lines and crowns, so serial
    shapes show up often; the rest are random digraphs. Labels are (1,1)
    most of the time.
    """
    n = rng.randint(1, max_vertices)
    names = [str(i) for i in range(1, n + 1)]

    def label():
        if rng.random() < 0.8:
            return (1, 1)
        return (rng.randint(1, max_label), rng.randint(1, max_label))

    arrows = {}
    if rng.random() < 1 / 3:
        order = names[:]
        rng.shuffle(order)
        i = 0
        while i < n:
            size = rng.randint(1, n - i)
            block = order[i: i + size]
            for a, b in zip(block, block[1:]):
                arrows[(a, b)] = label()
            if rng.random() < 0.5:
                arrows[(block[-1], block[0])] = label()
            i += size
    else:
        density = rng.uniform(0.05, 0.35)
        for a in names:
            for b in names:
                if rng.random() < (density / 3 if a == b else density):
                    arrows[(a, b)] = label()
    return ValuedQuiver.build(names, [(a, b, *lab) for (a, b), lab in arrows.items()])


def random_acyclic_quiver(rng: random.Random, max_vertices: int = 7, max_label: int = 3) -> ValuedQuiver:
    """A random acyclic valued quiver: arrows only go from lower to higher positions of a shuffled order."""
    n = rng.randint(2, max_vertices)
    names = [str(i) for i in range(1, n + 1)]
    order = names[:]
    rng.shuffle(order)
    density = rng.uniform(0.2, 0.6)
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                d1 = 1 if rng.random() < 0.6 else rng.randint(1, max_label)
                d2 = 1 if rng.random() < 0.6 else rng.randint(1, max_label)
                arrows.append((order[i], order[j], d1, d2))
    return ValuedQuiver.build(names, arrows)


def random_pointed_quiver(rng: random.Random, max_vertices: int = 4) -> ValuedQuiver:
    """A random pointed quiver (labels (m,m)) that may contain cycles and loops."""
    n = rng.randint(1, max_vertices)
    names = [str(i) for i in range(1, n + 1)]
    arrows = []
    for a in names:
        for b in names:
            if rng.random() < (0.15 if a == b else 0.35):
                m = 1 if rng.random() < 0.8 else 2
                arrows.append((a, b, m, m))
    return ValuedQuiver.build(names, arrows)


def random_nilpotent_rep(rng: random.Random, q: ValuedQuiver, max_total: int = 5, field: Field = GF2,
                         density: float = 0.6) -> Representation:
    """A random nilpotent representation of a pointed quiver.

    Basis vectors get random levels; an arrow may only send a vector to
    vectors of strictly lower level, which forces nilpotency even on cycles.
    """
    total = rng.randint(1, max_total)
    verts = list(q.vertices)
    dims = {v: 0 for v in verts}
    levels: dict[str, list[int]] = {v: [] for v in verts}
    for _ in range(total):
        v = rng.choice(verts)
        dims[v] += 1
        levels[v].append(rng.randint(0, total - 1))
    elements = list(field.elements()) if hasattr(field, "elements") else [field.coerce(x) for x in (-2, -1, 1, 2)]
    nonzero = [x for x in elements if not field.is_zero(x)]
    maps = {}
    for key in q.arrow_keys():
        rows = []
        for r in range(dims[key.dst]):
            row = []
            for c in range(dims[key.src]):
                ok = levels[key.dst][r] < levels[key.src][c] and rng.random() < density
                row.append(rng.choice(nonzero) if ok else field.zero)
            rows.append(row)
        maps[key] = Matrix(field, dims[key.dst], dims[key.src], rows)
    return Representation(q, dims, maps, field)
