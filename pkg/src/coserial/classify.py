"""Quiver-level seriality, shape classification and the prime/co-noetherian test."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import DisconnectedInput, FamilyWindowMismatch, NotRightSerialInput, NotSerialInput
from .quiver import (
    FAMILY_KINDS,
    ValuedQuiver,
    connected_components,
    cycle_census,
    reachability,
)
from .verdict import Verdict, Witness

INFINITE_SHAPES = {
    "LineBiInfinite": "AInfinityBi",
    "LineRightInfinite": "AInfinityRight",
    "LineLeftInfinite": "AInfinityLeft",
}


def _arrow_tuple(a) -> tuple:
    return (a.src, a.dst, a.d1, a.d2)


def is_right_serial(q: ValuedQuiver) -> Verdict:
    """Every vertex is the sink of at most one arrow, and every arrow has d1 = 1."""
    indeg: dict[str, int] = {v: 0 for v in q.vertices}
    for a in q.arrows:
        indeg[a.dst] += 1
    for v in q.vertices:
        if indeg[v] > 1:
            return Verdict(False, Witness("in_degree", vertex=v, detail=f"vertex {v} is the sink of {indeg[v]} arrows"))
    for a in q.arrows:
        if a.d1 != 1:
            return Verdict(False, Witness("label", arrow=_arrow_tuple(a), detail=f"d1 = {a.d1} on {a.src}->{a.dst}"))
    return Verdict(True)


def is_left_serial(q: ValuedQuiver) -> Verdict:
    """Every vertex is the source of at most one arrow, and every arrow has d2 = 1."""
    outdeg: dict[str, int] = {v: 0 for v in q.vertices}
    for a in q.arrows:
        outdeg[a.src] += 1
    for v in q.vertices:
        if outdeg[v] > 1:
            return Verdict(False, Witness("out_degree", vertex=v, detail=f"vertex {v} is the source of {outdeg[v]} arrows"))
    for a in q.arrows:
        if a.d2 != 1:
            return Verdict(False, Witness("label", arrow=_arrow_tuple(a), detail=f"d2 = {a.d2} on {a.src}->{a.dst}"))
    return Verdict(True)


def is_serial(q: ValuedQuiver) -> Verdict:
    r = is_right_serial(q)
    return r if not r else is_left_serial(q)


# ---------------------------------------------------------------------------
# Shapes


@dataclass(frozen=True)
class ShapeClass:
    kind: str  # A, ATilde, AInfinityRight, AInfinityLeft, AInfinityBi, NotSerial
    n: Optional[int] = None
    witness: Optional[Witness] = None

    @property
    def is_serial(self) -> bool:
        return self.kind != "NotSerial"

    @property
    def name(self) -> str:
        return f"{self.kind}_{self.n}" if self.n is not None else self.kind

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class ComponentShape:
    vertices: tuple[str, ...]
    shape: ShapeClass

    def to_json(self) -> dict:
        out: dict = {"vertices": list(self.vertices), "shape": self.shape.name}
        if self.shape.witness is not None:
            out["witness"] = self.shape.witness.to_json()
        return out


def check_family(q: ValuedQuiver) -> None:
    """Raise FamilyWindowMismatch unless the window is exactly q, a simple (1,1)-labelled path."""
    fam = q.family
    if fam is None:
        return
    if fam.kind not in FAMILY_KINDS:
        raise FamilyWindowMismatch(f"unknown family {fam.kind}")
    if sorted(fam.window) != sorted(q.vertices) or len(set(fam.window)) != len(fam.window):
        raise FamilyWindowMismatch("family window does not list exactly the quiver's vertices")
    if len(q.arrows) != len(fam.window) - 1:
        raise FamilyWindowMismatch("a windowed line has exactly one arrow between consecutive window vertices")
    for x, y in zip(fam.window, fam.window[1:]):
        a = q.arrow(x, y)
        if a is None or a.label != (1, 1):
            raise FamilyWindowMismatch(f"window step {x} -> {y} is not an arrow labelled (1,1)")


def _component_shape(q: ValuedQuiver) -> ShapeClass:
    for test in (is_right_serial, is_left_serial):
        v = test(q)
        if not v:
            return ShapeClass("NotSerial", witness=v.witness)
    n, m = len(q.vertices), len(q.arrows)
    # in- and out-degree at most one on a connected quiver: a path or a cycle
    if m == n - 1:
        return ShapeClass("A", n)
    if m == n:
        return ShapeClass("ATilde", n)
    return ShapeClass("NotSerial", witness=Witness("shape", detail=f"{n} vertices but {m} arrows"))


def serial_shape(q: ValuedQuiver) -> list[ComponentShape]:
    """Shape of every weakly connected component."""
    if q.family is not None:
        check_family(q)
        return [ComponentShape(q.vertices, ShapeClass(INFINITE_SHAPES[q.family.kind]))]
    return [ComponentShape(c, _component_shape(q.subquiver(c))) for c in connected_components(q)]


def _require_serial(q: ValuedQuiver) -> list[ComponentShape]:
    shapes = serial_shape(q)
    for cs in shapes:
        if not cs.shape.is_serial:
            raise NotSerialInput(f"component {list(cs.vertices)} is not serial", cs.shape.witness)
    return shapes


def is_hom_computable_serial(q: ValuedQuiver, coalgebra_finite_dimensional: bool = False) -> Verdict:
    """Lines of every kind are Hom-computable; a crown only when the coalgebra is finite dimensional."""
    for cs in _require_serial(q):
        if cs.shape.kind == "ATilde" and not coalgebra_finite_dimensional:
            return Verdict(False, reason=f"component {cs.shape.name} is a crown and the coalgebra is infinite dimensional",
                           witness=Witness("crown", vertex=cs.vertices[0], detail=cs.shape.name))
    if any(cs.shape.kind == "ATilde" for cs in serial_shape(q)):
        return Verdict(True, reason="crown components, but the coalgebra is finite dimensional")
    return Verdict(True, reason="every component is a line")


def is_representation_directed_serial(q: ValuedQuiver) -> Verdict:
    for cs in _require_serial(q):
        if cs.shape.kind == "ATilde":
            return Verdict(False, reason=f"component {cs.shape.name} carries a cycle of non-isomorphisms",
                           witness=Witness("crown", vertex=cs.vertices[0], detail=cs.shape.name))
    return Verdict(True, reason="no crown component")


@dataclass(frozen=True)
class ComponentForm:
    vertices: tuple[str, ...]
    form: str  # "acyclic", "unique_cycle" or "alarm"
    cycles: tuple = ()

    @property
    def alarm(self) -> bool:
        return self.form == "alarm"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "form": self.form, "cycles": [list(c) for c in self.cycles]}


def right_serial_shape_report(q: ValuedQuiver) -> list[ComponentForm]:
    """Each component of a right-serial quiver is a tree or carries exactly one cycle.

    More than one cycle would contradict that structure; it is reported as
    an ``alarm`` form instead of being hidden.
    """
    v = is_right_serial(q)
    if not v:
        raise NotRightSerialInput("quiver is not right serial", v.witness)
    out = []
    for comp in connected_components(q):
        cycles = tuple(cycle_census(q.subquiver(comp)))
        form = "acyclic" if not cycles else "unique_cycle" if len(cycles) == 1 else "alarm"
        out.append(ComponentForm(comp, form, cycles))
    return out


# ---------------------------------------------------------------------------
# Prime / co-noetherian decision chain for hereditary path coalgebras


@dataclass(frozen=True)
class EGVerdict:
    kind: str  # SerialCrown, SerialPoint, PrimeObstruction, CoNoetherianObstruction, NotHereditaryModelNote
    n: Optional[int] = None
    pair: Optional[tuple] = None
    evidence: dict = field(default_factory=dict, compare=False)
    vertex: Optional[str] = None
    label: Optional[object] = None
    note: str = ""

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.n is not None:
            out["n"] = self.n
        if self.pair is not None:
            out["pair"] = list(self.pair)
            out["evidence"] = dict(self.evidence)
        if self.vertex is not None:
            out["vertex"] = self.vertex
        if self.label is not None:
            out["label"] = list(self.label) if isinstance(self.label, tuple) else self.label
        if self.note:
            out["note"] = self.note
        return out


def eg_classify(q: ValuedQuiver) -> EGVerdict:
    """Decide whether the path coalgebra of q is prime and co-noetherian, hence a crown."""
    from .localize import localize_colocal

    comps = connected_components(q)
    if len(comps) != 1:
        raise DisconnectedInput(f"quiver has {len(comps)} connected components")
    if len(q.vertices) == 1:
        v = q.vertices[0]
        loop = q.arrow(v, v)
        if loop is None:
            return EGVerdict("SerialPoint", vertex=v, note="single vertex without a loop: the coalgebra is the base field")
        if loop.d1 >= 2 or loop.d2 >= 2:
            return EGVerdict("CoNoetherianObstruction", vertex=v, label=loop.label)
        return EGVerdict("SerialCrown", n=1)
    for x in q.vertices:
        for y in q.vertices:
            if x == y:
                continue
            fwd, back = reachability(q, x, y), reachability(q, y, x)
            if fwd != back or not fwd:
                return EGVerdict("PrimeObstruction", pair=(x, y), evidence={"x_to_y": fwd, "y_to_x": back})
    for x in q.vertices:
        loc = localize_colocal(q, x)
        if not loc.is_finite:
            return EGVerdict("CoNoetherianObstruction", vertex=x, label="infinite")
        loop = loc.quiver.arrow(x, x)
        if loop is not None and loop.label != (1, 1):
            return EGVerdict("CoNoetherianObstruction", vertex=x, label=loop.label)
    shape = _component_shape(q)
    if shape.kind == "ATilde":
        return EGVerdict("SerialCrown", n=shape.n)
    return EGVerdict("NotHereditaryModelNote",
                     note=f"all quiver-level checks passed but the shape is {shape.name}; internal-consistency alarm")


# ---------------------------------------------------------------------------
# Aggregate report


@dataclass
class ClassificationReport:
    components: list
    right_serial: Verdict
    left_serial: Verdict
    hom_computable: Verdict
    representation_directed: Verdict
    eg: Optional[EGVerdict]
    eg_error: str = ""

    @property
    def serial(self) -> bool:
        return bool(self.right_serial) and bool(self.left_serial)

    def to_json(self) -> dict:
        if self.eg is not None:
            eg = self.eg.to_json()
        else:
            eg = {"kind": "NotApplicable", "note": self.eg_error}
        return {
            "components": [c.to_json() for c in self.components],
            "right_serial": self.right_serial.to_json(),
            "left_serial": self.left_serial.to_json(),
            "hom_computable": self.hom_computable.to_json(),
            "representation_directed": self.representation_directed.to_json(),
            "eg": eg,
        }


def classify(q: ValuedQuiver, coalgebra_finite_dimensional: bool = False) -> ClassificationReport:
    comps = serial_shape(q)
    right, left = is_right_serial(q), is_left_serial(q)
    if all(c.shape.is_serial for c in comps):
        hom = is_hom_computable_serial(q, coalgebra_finite_dimensional)
        directed = is_representation_directed_serial(q)
    else:
        hom = Verdict(False, reason="not serial: the criterion applies to serial quivers only")
        directed = Verdict(False, reason="not serial: the criterion applies to serial quivers only")
    eg, eg_error = None, ""
    try:
        eg = eg_classify(q)
    except DisconnectedInput as exc:
        eg_error = str(exc)
    return ClassificationReport(comps, right, left, hom, directed, eg, eg_error)
