"""Execute one program and write its layout JSON, SVG plan and relation matrices.

    python3 scripts/build_demo.py tests/data/gold/g20_full_building.cs --out demo/
"""
import argparse
from pathlib import Path

from mblkit.dsl import parse_strict
from mblkit.harness import atomic_write_text, export_layout, render_svg
from mblkit.kernel import execute
from mblkit.topology import analyze

DEFAULT = Path(__file__).resolve().parents[1] / "tests" / "data" / "gold" / "g20_full_building.cs"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("program", nargs="?", default=str(DEFAULT))
    ap.add_argument("--out", default="demo")
    args = ap.parse_args()

    doc = execute(parse_strict(Path(args.program).read_text(encoding="utf-8")))
    report = analyze(doc)
    out = Path(args.out)
    atomic_write_text(out / "layout.json", export_layout(doc, topology=True))
    atomic_write_text(out / "plan.svg", render_svg(doc))
    for name in ("module_adjacency", "room_adjacency", "room_connectivity", "room_conjoint"):
        atomic_write_text(out / f"{name}.csv", getattr(report, name).to_csv())

    print(f"{len(doc.modules)} modules, {len(doc.units)} units, {len(doc.rooms)} rooms, "
          f"{len(doc.doors)} doors, {len(doc.holes)} holes, {len(doc.walls)} walls")
    for room in doc.rooms.values():
        r = room.rect
        print(f"  {room.name:<16} {r.length:>7.0f} x {r.width:<7.0f} at ({r.x:.0f}, {r.y:.0f})")
    linked = [(report.room_connectivity.names[i], report.room_connectivity.names[j])
              for i, j, v in report.room_connectivity.pairs()]
    print("connected rooms:", ", ".join(f"{a}-{b}" for a, b in linked) or "none")
    print("containment ok:", report.ok)
    print(f"wrote {out}/")


if __name__ == "__main__":
    main()
