"""Command-line interface.

Every subcommand prints a line-oriented key-value report to standard output.
Renderings go to files:  SVG via ``--svg`` (deterministic bytes) and
matplotlib figures via ``--figure`` (format by extension).  Exit status 0
means success or an affirmative answer, 1 a negative answer (a witness is
printed), 2 an error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures as fixture_store
from .errors import NotStretchable, TrirepError
from .faa import (
    FaceCornerSpec,
    check_assignment_conditions,
    check_outline_convexity,
    enumerate_faas,
    pseudosegments_of,
)
from .harmonic import assemble, check_solvability, is_gfaa, solve, verify_drawing
from .formats import (
    face_key,
    parse_faa,
    parse_arrangement,
    parse_graph,
    resolve_assignment,
    resolve_weights,
    serialize_dissection,
    serialize_drawing,
    serialize_stretch,
)
from .planar import check_internally_3connected
from .schnyder import compute_schnyder_wood, primal_dual_representation, verify_schnyder
from .stretching import check_stretchable, stretch
from .svg import RenderSpec, render_svg

OK, NEGATIVE, ERROR = 0, 1, 2


def _load_graph(path: str):
    doc = parse_graph(Path(path).read_text())
    sg = doc.to_suspended_graph()
    return doc, sg


def _load_faa(doc, sg, faa_path: str | None):
    if faa_path:
        return parse_faa(Path(faa_path).read_text(), sg)
    return resolve_assignment(doc, sg)


def _render_spec(args) -> RenderSpec:
    return RenderSpec(width=args.size, height=args.size, labels=args.labels)


def _emit_svg(obj, args, verified: bool = True) -> None:
    if args.svg:
        Path(args.svg).write_text(render_svg(obj, _render_spec(args), verified=verified))
        print(f"svg {args.svg}")


def _emit_figure(obj, args) -> None:
    if args.figure:
        from . import figures
        from .harmonic import Drawing
        from .schnyder import Dissection

        if isinstance(obj, Dissection):
            figures.save_dissection_figure(obj, args.figure, labels=args.labels)
        elif isinstance(obj, Drawing):
            figures.save_drawing_figure(obj, args.figure, labels=args.labels)
        print(f"figure {args.figure}")


def cmd_check(args) -> int:
    doc, sg = _load_graph(args.graph)
    connected3 = check_internally_3connected(sg)
    print(f"internally-3-connected {'true' if connected3 else 'false'}")
    assignment = _load_faa(doc, sg, args.faa)
    if assignment is None:
        return OK if connected3 else NEGATIVE
    report = check_assignment_conditions(assignment, FaceCornerSpec(mode=args.spec))
    print(f"cv {'pass' if report.cv_ok else 'fail'}")
    print(f"cf {'pass' if report.cf_ok else 'fail'}")
    for v in report.violations:
        print(f"violation {v}")
    if not report.ok:
        return NEGATIVE
    outline = check_outline_convexity(assignment, mode=args.mode, budget=args.budget)
    print(f"outline-convexity {'pass' if outline.ok else 'fail'} checked {outline.checked}")
    if not outline.ok:
        for u, v in outline.witness.walk:
            print(f"witness-edge {u} {v}")
        return NEGATIVE
    return OK if connected3 else NEGATIVE


def cmd_segments(args) -> int:
    doc, sg = _load_graph(args.graph)
    assignment = _load_faa(doc, sg, args.faa)
    if assignment is None:
        print("error no flat angle assignment given")
        return ERROR
    try:
        family = pseudosegments_of(assignment)
    except TrirepError as exc:
        print(f"arc-error {exc}")
        return NEGATIVE
    for path in family.segments:
        edges = " ".join(f"{a}-{b}" for a, b in zip(path, path[1:]))
        print(f"segment {edges}")
    return OK


def cmd_sltr(args) -> int:
    doc, sg = _load_graph(args.graph)
    assignment = _load_faa(doc, sg, args.faa)
    if assignment is None:
        from .faa import FlatAngleAssignment

        assignment = FlatAngleAssignment(sg, {})
    cond = check_assignment_conditions(assignment, FaceCornerSpec())
    if not cond.ok:
        for v in cond.violations:
            print(f"violation {v}")
        return NEGATIVE
    family = pseudosegments_of(assignment)
    weights = resolve_weights(doc, sg.graph, family)
    pole = doc.poles or None
    kwargs = {"weights": weights, "family": family}
    if pole:
        kwargs["pole_triangle"] = pole
    system = assemble(assignment, **kwargs)
    if not check_solvability(system):
        print("solvable false")
        return NEGATIVE
    drawing = solve(system)
    report = verify_drawing(drawing, assignment, family, tol=args.tol)
    sys.stdout.write(serialize_drawing(drawing, report))
    _emit_svg(drawing, args, verified=report.all_pass)
    _emit_figure(drawing, args)
    return OK if report.all_pass else NEGATIVE


def cmd_search(args) -> int:
    doc, sg = _load_graph(args.graph)
    good = 0
    total = 0
    for assignment in enumerate_faas(sg, FaceCornerSpec(), budget=args.budget):
        total += 1
        ok = is_gfaa(assignment, tol=args.tol)
        good += ok
        pairs = " ".join(
            f"{v}:{face_key(sg.graph, f)}"
            for v, f in sorted(assignment.assignments.items(), key=lambda kv: str(kv[0]))
        )
        print(f"faa {total} {'good' if ok else 'bad'} {pairs}")
    print(f"faa-count {total}")
    print(f"good-count {good}")
    if good == 0:
        print("result no-valid-faa")
        return NEGATIVE
    return OK


def cmd_schnyder(args) -> int:
    doc, sg = _load_graph(args.graph)
    wood = compute_schnyder_wood(sg)
    for u, v, color in wood.arcs():
        print(f"arc {u} {v} {color}")
    report = verify_schnyder(wood)
    print(f"ok {'true' if report.ok else 'false'}")
    for v in report.violations:
        print(f"violation {v}")
    return OK if report.ok else NEGATIVE


def cmd_primal_dual(args) -> int:
    doc, sg = _load_graph(args.graph)
    dissection = primal_dual_representation(sg, tol=args.tol)
    sys.stdout.write(serialize_dissection(dissection))
    _emit_svg(dissection, args)
    _emit_figure(dissection, args)
    return OK


def cmd_stretch(args) -> int:
    arrangement = parse_arrangement(Path(args.arrangement).read_text())
    report = check_stretchable(arrangement, budget=args.budget)
    if not report.ok:
        print("stretchable false")
        witness = " ".join(str(i) for i in report.witness_subset)
        print(f"witness-subset {witness}")
        return NEGATIVE
    try:
        result = stretch(arrangement, tol=args.tol)
    except NotStretchable as exc:
        print("stretchable false")
        print(f"witness-subset {exc.witness}")
        return NEGATIVE
    print("stretchable true")
    sys.stdout.write(serialize_stretch(result))
    _emit_svg(result.drawing, args)
    _emit_figure(result.drawing, args)
    return OK


def cmd_oracle(args) -> int:
    directory = Path(args.fixtures) if args.fixtures else Path(fixture_store.fixtures_directory())
    files = sorted(directory.glob("*.graph"))
    if not files:
        print(f"error no .graph fixtures in {directory}")
        return ERROR
    disagreements = 0
    for path in files:
        doc = parse_graph(path.read_text())
        sg = doc.to_suspended_graph()
        if len(sg.graph.rotation) > args.max_vertices:
            print(f"fixture {path.stem} skipped vertices {len(sg.graph.rotation)}")
            continue
        pairs = 0
        mismatches = 0
        for assignment in enumerate_faas(sg, FaceCornerSpec(), budget=args.budget):
            pairs += 1
            good = is_gfaa(assignment, tol=args.tol)
            combinatorial = check_outline_convexity(
                assignment, mode=args.mode, budget=args.budget
            ).ok
            if good != combinatorial:
                mismatches += 1
        disagreements += mismatches
        print(f"fixture {path.stem} pairs {pairs} disagreements {mismatches}")
    print(f"total-disagreements {disagreements}")
    return OK if disagreements == 0 else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trirep",
        description="Straight-line triangle representations of plane graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph: bool = True) -> None:
        if graph:
            p.add_argument("graph", help="graph document")
        p.add_argument("--tol", type=float, default=1e-7, help="geometric tolerance")
        p.add_argument("--budget", type=int, default=10_000_000, help="enumeration budget")
        p.add_argument("--svg", help="write an SVG rendering to this path")
        p.add_argument("--figure", help="write a matplotlib figure to this path")
        p.add_argument("--size", type=int, default=640, help="render canvas size")
        p.add_argument("--labels", action="store_true", help="label vertices in renderings")

    p = sub.add_parser("check", help="internal 3-connectivity and assignment conditions")
    common(p)
    p.add_argument("--faa", help="graph document carrying the faa block")
    p.add_argument("--mode", choices=("full", "simple-cycles"), default="simple-cycles")
    p.add_argument("--spec", choices=("exact", "budget"), default="exact")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("segments", help="emit the pseudosegment family of an assignment")
    common(p)
    p.add_argument("--faa", help="graph document carrying the faa block")
    p.set_defaults(func=cmd_segments)

    p = sub.add_parser("sltr", help="solve the harmonic system and verify the drawing")
    common(p)
    p.add_argument("--faa", help="graph document carrying the faa block")
    p.set_defaults(func=cmd_sltr)

    p = sub.add_parser("search", help="enumerate assignments and report the good ones")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("schnyder", help="compute and verify a Schnyder wood")
    common(p)
    p.set_defaults(func=cmd_schnyder)

    p = sub.add_parser("primal-dual", help="primal-dual triangle contact representation")
    common(p)
    p.set_defaults(func=cmd_primal_dual)

    p = sub.add_parser("stretch", help="stretch a pseudosegment arrangement")
    common(p, graph=False)
    p.add_argument("arrangement", help="arrangement document")
    p.set_defaults(func=cmd_stretch)

    p = sub.add_parser("oracle", help="run the solve/outline equivalence suite on fixtures")
    common(p, graph=False)
    p.add_argument("--fixtures", help="directory of .graph fixtures (default: packaged)")
    p.add_argument("--mode", choices=("full", "simple-cycles"), default="simple-cycles")
    p.add_argument("--max-vertices", type=int, default=12)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TrirepError as exc:
        print(f"error {exc}", file=sys.stderr)
        return ERROR
    except OSError as exc:
        print(f"error {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
