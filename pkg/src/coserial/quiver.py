"""Valued quivers: data model, the line-oriented DSL, DOT output and graph walks."""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import (
    BadLabel,
    DuplicateArrow,
    NonPointedLabel,
    QuiverSyntaxError,
    UnknownVertex,
)

FAMILY_KINDS = ("LineBiInfinite", "LineRightInfinite", "LineLeftInfinite")


def vertex_key(name: str):
    """Sort key: integer-like names numerically first, then the rest lexically."""
    try:
        return (0, int(name), "")
    except ValueError:
        return (1, 0, name)


def sort_vertices(names: Iterable[str]) -> list[str]:
    return sorted(names, key=vertex_key)


@dataclass(frozen=True)
class ValuedArrow:
    src: str
    dst: str
    d1: int = 1
    d2: int = 1

    def __post_init__(self):
        if self.d1 < 1 or self.d2 < 1:
            raise BadLabel(f"label ({self.d1},{self.d2}) must be positive")

    @property
    def label(self) -> tuple[int, int]:
        return (self.d1, self.d2)

    @property
    def is_loop(self) -> bool:
        return self.src == self.dst

    def sort_key(self):
        return (vertex_key(self.src), vertex_key(self.dst))


class ArrowKey(NamedTuple):
    """One arrow of the pointed multiquiver: copy ``index`` of the valued arrow src->dst."""

    src: str
    dst: str
    index: int = 0


@dataclass(frozen=True)
class FamilyDecl:
    kind: str
    window: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")


@dataclass(frozen=True)
class ValuedQuiver:
    vertices: tuple[str, ...]
    arrows: tuple[ValuedArrow, ...] = ()
    family: Optional[FamilyDecl] = None
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _vset: frozenset = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = sort_vertices(set(self.vertices))
        if len(verts) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        vset = set(verts)
        index = {}
        for a in self.arrows:
            for end in (a.src, a.dst):
                if end not in vset:
                    raise UnknownVertex(end)
            if (a.src, a.dst) in index:
                raise DuplicateArrow(a.src, a.dst)
            index[(a.src, a.dst)] = a
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows, key=ValuedArrow.sort_key)))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_vset", frozenset(verts))

    @classmethod
    def build(cls, vertices: Iterable, arrows: Iterable = (), family: Optional[FamilyDecl] = None) -> "ValuedQuiver":
        """Convenience constructor: arrows may be ValuedArrow or (src, dst[, d1, d2]) tuples."""
        out = []
        for a in arrows:
            if isinstance(a, ValuedArrow):
                out.append(a)
            else:
                a = tuple(a)
                out.append(ValuedArrow(str(a[0]), str(a[1]), *(int(x) for x in a[2:])))
        return cls(tuple(str(v) for v in vertices), tuple(out), family)

    def __contains__(self, v) -> bool:
        return v in self._vset

    def arrow(self, src: str, dst: str) -> Optional[ValuedArrow]:
        return self._index.get((src, dst))

    def require(self, *names: str) -> None:
        for n in names:
            if n not in self._vset:
                raise UnknownVertex(n)

    def in_arrows(self, v: str) -> list[ValuedArrow]:
        return [a for a in self.arrows if a.dst == v]

    def out_arrows(self, v: str) -> list[ValuedArrow]:
        return [a for a in self.arrows if a.src == v]

    def successors(self, v: str) -> list[str]:
        return [a.dst for a in self.arrows if a.src == v]

    def predecessors(self, v: str) -> list[str]:
        return [a.src for a in self.arrows if a.dst == v]

    def adjacency(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            adj[a.src].append(a.dst)
        return adj

    @property
    def is_pointed(self) -> bool:
        return all(a.d1 == a.d2 for a in self.arrows)

    def require_pointed(self) -> None:
        for a in self.arrows:
            if a.d1 != a.d2:
                raise NonPointedLabel(a)

    def arrow_keys(self) -> list[ArrowKey]:
        """Arrows of the underlying pointed multiquiver (label (m,m) gives m copies)."""
        self.require_pointed()
        return [ArrowKey(a.src, a.dst, i) for a in self.arrows for i in range(a.d1)]

    def subquiver(self, keep: Iterable[str]) -> "ValuedQuiver":
        keep = set(keep)
        return ValuedQuiver(
            tuple(v for v in self.vertices if v in keep),
            tuple(a for a in self.arrows if a.src in keep and a.dst in keep),
        )

    def without_family(self) -> "ValuedQuiver":
        return ValuedQuiver(self.vertices, self.arrows)


def from_multiarrows(vertices: Iterable, pairs: Iterable[tuple]) -> ValuedQuiver:
    """Pointed valued quiver from a raw multiquiver: k parallel arrows x->y become label (k,k)."""
    counts: dict[tuple[str, str], int] = defaultdict(int)
    for s, t in pairs:
        counts[(str(s), str(t))] += 1
    return ValuedQuiver.build(vertices, [(s, t, k, k) for (s, t), k in counts.items()])


# ---------------------------------------------------------------------------
# DSL

def _strip_comment(line: str) -> str:
    if line.lstrip().startswith("#"):
        return ""
    m = re.search(r"\s#", line)
    return line[: m.start()] if m else line


def _int_token(tok: str, lineno: int) -> int:
    if not re.fullmatch(r"[+-]?\d+", tok):
        raise QuiverSyntaxError(f"expected an integer label, got {tok!r}", lineno)
    return int(tok)


def parse_quiver(text: str) -> ValuedQuiver:
    """Parse the quiver DSL.

    Statements, one per line::

        vertex <name>
        arrow <src> <dst> [<d1> <d2>]
        family <LineBiInfinite|LineRightInfinite|LineLeftInfinite>

    ``#`` starts a comment; blank lines are ignored. Omitted labels are (1,1).
    """
    vertices: list[str] = []
    seen: set[str] = set()
    arrows: list[tuple[ValuedArrow, int]] = []
    pairs: set[tuple[str, str]] = set()
    family_kind = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _strip_comment(raw).split()
        if not toks:
            continue
        kw, args = toks[0], toks[1:]
        if kw == "vertex":
            if len(args) != 1:
                raise QuiverSyntaxError("usage: vertex <name>", lineno)
            name = args[0]
            if name in seen:
                raise QuiverSyntaxError(f"vertex {name!r} declared twice", lineno)
            seen.add(name)
            vertices.append(name)
        elif kw == "arrow":
            if len(args) not in (2, 4):
                raise QuiverSyntaxError("usage: arrow <src> <dst> [<d1> <d2>]", lineno)
            src, dst = args[0], args[1]
            d1, d2 = (1, 1) if len(args) == 2 else (_int_token(args[2], lineno), _int_token(args[3], lineno))
            if d1 < 1 or d2 < 1:
                raise BadLabel(f"label ({d1},{d2}) must have positive components", lineno)
            if (src, dst) in pairs:
                raise DuplicateArrow(src, dst, lineno)
            pairs.add((src, dst))
            arrows.append((ValuedArrow(src, dst, d1, d2), lineno))
        elif kw == "family":
            if len(args) != 1 or args[0] not in FAMILY_KINDS:
                raise QuiverSyntaxError(f"usage: family <{'|'.join(FAMILY_KINDS)}>", lineno)
            if family_kind is not None:
                raise QuiverSyntaxError("family declared twice", lineno)
            family_kind = args[0]
        else:
            raise QuiverSyntaxError(f"unknown statement {kw!r}", lineno)
    for a, lineno in arrows:
        for end in (a.src, a.dst):
            if end not in seen:
                raise UnknownVertex(end, lineno)
    family = None
    if family_kind is not None:
        family = FamilyDecl(family_kind, _window_order(vertices, [a for a, _ in arrows]))
    return ValuedQuiver(tuple(vertices), tuple(a for a, _ in arrows), family)


def _window_order(vertices: list[str], arrows: list[ValuedArrow]) -> tuple[str, ...]:
    """Vertices in path order when the arrows form one simple directed path; else declaration order."""
    succ = {}
    indeg: dict[str, int] = defaultdict(int)
    for a in arrows:
        if a.src in succ or a.is_loop:
            return tuple(vertices)
        succ[a.src] = a.dst
        indeg[a.dst] += 1
    starts = [v for v in vertices if indeg[v] == 0]
    if len(starts) != 1 or any(c > 1 for c in indeg.values()):
        return tuple(vertices)
    order = [starts[0]]
    while order[-1] in succ and len(order) <= len(vertices):
        order.append(succ[order[-1]])
    if len(order) != len(vertices) or len(set(order)) != len(order):
        return tuple(vertices)
    return tuple(order)


def emit_dsl(q: ValuedQuiver) -> str:
    """Deterministic DSL text; parse_quiver(emit_dsl(q)) == q."""
    lines = []
    if q.family is not None:
        lines.append(f"family {q.family.kind}")
        order = list(q.family.window) + [v for v in q.vertices if v not in q.family.window]
    else:
        order = list(q.vertices)
    lines += [f"vertex {v}" for v in order]
    for a in q.arrows:
        lines.append(f"arrow {a.src} {a.dst} {a.d1} {a.d2}")
    return "\n".join(lines) + "\n"


_DOT_ID = re.compile(r"^(?:[A-Za-z_][A-Za-z_0-9]*|-?(?:\.[0-9]+|[0-9]+(?:\.[0-9]*)?))$")


def dot_id(name: str) -> str:
    if _DOT_ID.match(name):
        return name
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(q: ValuedQuiver, name: str = "Q") -> str:
    lines = [f"digraph {dot_id(name)} {{"]
    for v in q.vertices:
        lines.append(f"  {dot_id(v)};")
    for a in q.arrows:
        lines.append(f'  {dot_id(a.src)} -> {dot_id(a.dst)} [label="({a.d1},{a.d2})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Graph algorithms


def opposite(q: ValuedQuiver) -> ValuedQuiver:
    """Reverse every arrow and swap its label components."""
    family = None
    if q.family is not None:
        flipped = {"LineRightInfinite": "LineLeftInfinite", "LineLeftInfinite": "LineRightInfinite"}
        family = FamilyDecl(flipped.get(q.family.kind, q.family.kind), tuple(reversed(q.family.window)))
    return ValuedQuiver(
        q.vertices,
        tuple(ValuedArrow(a.dst, a.src, a.d2, a.d1) for a in q.arrows),
        family,
    )


def connected_components(q: ValuedQuiver) -> list[tuple[str, ...]]:
    """Weakly connected components, each sorted, ordered by least vertex."""
    nbrs: dict[str, set[str]] = {v: set() for v in q.vertices}
    for a in q.arrows:
        nbrs[a.src].add(a.dst)
        nbrs[a.dst].add(a.src)
    seen: set[str] = set()
    comps = []
    for v in q.vertices:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sort_vertices(comp)))
    return comps


def reachable_from(q: ValuedQuiver, x: str) -> set[str]:
    """Vertices reachable from x by a path of length >= 1."""
    adj = q.adjacency()
    out: set[str] = set()
    stack = list(adj[x])
    while stack:
        y = stack.pop()
        if y in out:
            continue
        out.add(y)
        stack.extend(adj[y])
    return out


def reachability(q: ValuedQuiver, x: str, y: str) -> bool:
    """True iff a directed path of length >= 1 runs from x to y."""
    q.require(x, y)
    return y in reachable_from(q, x)


def cycle_census(q: ValuedQuiver) -> list[tuple[str, ...]]:
    """All simple directed cycles, each listed once starting from its least vertex."""
    order = {v: i for i, v in enumerate(q.vertices)}
    adj = {v: sorted(set(ws), key=order.__getitem__) for v, ws in q.adjacency().items()}
    cycles: list[tuple[str, ...]] = []
    for s in q.vertices:
        rank = order[s]
        path = [s]
        on_path = {s}

        def walk(v: str) -> None:
            for w in adj[v]:
                if w == s:
                    cycles.append(tuple(path))
                elif order[w] > rank and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    walk(w)
                    path.pop()
                    on_path.discard(w)

        walk(s)
    return cycles


def iter_paths(q: ValuedQuiver, src: str, dst: str, allowed_interior: set[str], limit: int) -> Iterator[list[ValuedArrow]]:
    """Arrow sequences src -> ... -> dst whose interior vertices lie in allowed_interior.

    The caller must ensure the set is finite (no usable cycle through the interior).
    """
    out_arrows: dict[str, list[ValuedArrow]] = defaultdict(list)
    for a in q.arrows:
        out_arrows[a.src].append(a)
    count = 0
    stack: list[tuple[str, list[ValuedArrow]]] = [(src, [])]
    while stack:
        v, path = stack.pop()
        for a in reversed(out_arrows[v]):
            if a.dst == dst:
                count += 1
                if count > limit:
                    raise RuntimeError(f"path enumeration exceeded {limit} paths")
                yield path + [a]
            if a.dst in allowed_interior:
                if len(path) > len(q.vertices) * (limit + 1):
                    raise RuntimeError("path enumeration did not terminate")
                stack.append((a.dst, path + [a]))
