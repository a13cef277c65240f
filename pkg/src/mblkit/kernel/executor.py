from __future__ import annotations

from ..dsl import Program, static_check
from ..dsl.ast import INITIAL_POINT, ListLit, PointLit, Ref
from ..dsl.check import errors
from ..geom import Point
from . import ops
from .document import Config, ExecError, LayoutDocument


class Interpreter:
    """Runs statements one at a time against a document.

    Variables map to entity ids (a split binds its list variable to a pair).
    """

    def __init__(self, config: Config | None = None, doc: LayoutDocument | None = None):
        self.doc = doc or LayoutDocument(config or Config())
        self.env: dict[str, object] = {}

    def snapshot(self):
        return self.doc.snapshot(), dict(self.env)

    def restore(self, snap):
        self.doc.restore(snap[0])
        self.env = dict(snap[1])

    def _get(self, v):
        if isinstance(v, Ref):
            if v.name == INITIAL_POINT:
                return Point(0.0, 0.0)
            eid = self.env[v.name]
            return self.doc.entity(eid)
        if isinstance(v, PointLit):
            return Point(float(v.x), float(v.y))
        if isinstance(v, ListLit):
            return [self._get(i) for i in v.items]
        if isinstance(v, bool) or isinstance(v, str):
            return v
        return float(v)

    def run(self, st, index: int):
        try:
            self._run(st)
        except ExecError as e:
            e.index = index
            e.args = (f"statement {index + 1}: {e.category}: {e.message}",)
            raise
        if self.doc.log:
            self.doc.log[-1]["statement"] = index

    def _run(self, st):
        a = {k: self._get(v) for k, v in st.full_arguments().items()}
        kind = st.sig.key
        doc = self.doc
        result = None
        if kind == "module-absolute":
            result = ops.create_module_absolute(doc, a["name"], a["point"], a["length"], a["width"])
        elif kind == "module-relative":
            result = ops.create_module_relative(doc, a["name"], a["module"], a["direction"], a["length"],
                                                a["width"], a["alignment"], a["offset_direction"], a["offset"])
        elif kind == "split":
            pieces = ops.split_module(doc, a["module"], a["direction"], a["ratio"])
            self._retire(st.arguments()["module"])
            if st.binding:
                self.env[st.binding[1]] = tuple(p.id for p in pieces)
            for var, p in zip(st.parts, pieces):
                if var:
                    self.env[var] = p.id
            return
        elif kind == "merge":
            merged = ops.merge_modules(doc, a["modules"])
            names = [r.name for r in st.arguments()["modules"].items]
            for n in (names if st.binding else names[1:]):
                self._retire(Ref(n))
            if not st.binding:
                self.env[names[0]] = merged.id
            result = merged
        elif kind == "unit-from-modules":
            result = ops.create_unit_from_modules(doc, a["name"], a["modules"])
        elif kind == "unit-directional":
            result = ops.create_unit_directional(doc, a["name"], a["modules"], a["direction"], a["dimensions"])
        elif kind == "room-container":
            result = ops.create_room_in_container(doc, a["name"], a.get("module"), a["unit"], a["regular"])
        elif kind == "room-directional":
            result = ops.create_room_directional(doc, a["name"], a.get("module"), a["unit"], a["direction"],
                                                 a["dimension"], a["open"])
        elif kind == "room-corner":
            result = ops.create_room_corner(doc, a["name"], a.get("module"), a["unit"], a["corner"], a["length"],
                                            a["width"], a["offset_direction"], a["offset"], a["open"])
        elif kind == "room-relative":
            result = ops.create_room_relative(doc, a["name"], a["unit"], a["room"], a["direction"], a["length"],
                                              a["width"], a["alignment"], a["offset_direction"], a["offset"],
                                              a["open"])
        elif kind == "room-at-point":
            result = ops.create_room_at_point(doc, a["name"], a["unit"], a["point"], a["length"], a["width"])
        elif kind in ("door-for-room", "door-for-module"):
            host = a.get("room") or a.get("module")
            result = ops.create_door(doc, host, a["direction"], a["alignment"], a["offset"], a["set"],
                                     a["set_dimension"], a["dimension"])
        elif kind in ("door-midpoint-room", "door-midpoint-module"):
            host = a.get("room") or a.get("module")
            result = ops.create_door(doc, host, a["direction"], "none", 0.0, dimension=a["dimension"])
        elif kind == "hole":
            result = ops.create_hole(doc, a["module"], a["direction"], a["alignment"], a["offset"], a["dimension"])
        else:  # pragma: no cover - signatures and dispatch are kept in sync by tests
            raise ExecError("not-compiled", f"no semantics for {kind!r}")
        if st.binding and result is not None:
            self.env[st.binding[1]] = result.id

    def _retire(self, ref: Ref):
        self.env.pop(ref.name, None)


def execute(program: Program, config: Config | None = None, check: bool = True) -> LayoutDocument:
    """Run a compile-clean program and return the resulting document."""
    if check:
        errs = errors(static_check(program))
        if errs:
            raise ExecError("not-compiled", f"program has {len(errs)} static error(s); first: {errs[0]}",
                            errs[0].statement)
    it = Interpreter(config)
    for i, st in enumerate(program.statements):
        it.run(st, i)
    return it.doc
