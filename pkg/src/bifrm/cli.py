"""Command-line interface: ``bifrm <command> ...``.

Exit codes: 0 success, 1 a checked property or theorem fails, 2 bad input,
3 a size cap was exceeded.  Caps can be raised with ``--cap N`` (largest
frame) or the ``BIFRM_CAPS`` environment variable, e.g.
``BIFRM_CAPS=frame_elements=8192,join_irreducibles=14``.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from . import caps
from .assembly import alpha, assembly_free_presentation, biframe_assembly, finitary_assembly
from .biframe import Biframe, Spectrum, bipoints
from .bispace import DUALITIES, sobriety, spectrum, unit_map
from .dframe import dpoints
from .errors import BifrmError, InvalidInput, SizeCapExceeded
from .harness import DOCUMENTED, THEOREMS, TheoremSuite, bispace_key, corrupted_toolkit, enumerate_bispaces, verify
from .io import (
    biframe_from_json,
    biframe_to_json,
    bispace_from_json,
    bispace_to_json,
    dframe_from_json,
    dumps,
    frame_from_json,
    frame_to_dot,
    load,
)
from .spaces import SEPARATION_AXIOMS, Bispace, separation

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
PROPERTIES = SEPARATION_AXIOMS + ("patchSober", "biSober", "dSober")


class _Output:
    """Collects one command's result and renders it in the chosen format."""

    def __init__(self, fmt: str) -> None:
        self.fmt = fmt

    def emit(self, data: Any, text: str, dot: str | None = None) -> None:
        if self.fmt == "json":
            print(dumps(data))
        elif self.fmt == "dot":
            if dot is None:
                raise InvalidInput("this command has no DOT rendering; use --format json or text")
            print(dot, end="")
        else:
            print(text)


def bispace_to_dot(space: Bispace, name: str = "bispace") -> str:
    """Specialisation orders of both topologies (solid positive, dashed negative)."""
    names = bispace_to_json(space)["points"]
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, n in enumerate(names):
        lines.append(f'  p{i} [label="{n}"];')
    for style, closure in (("solid", space.closure_plus), ("dashed", space.closure_minus)):
        below = [closure(1 << y) for y in range(len(space))]
        for x in range(len(space)):
            for y in range(len(space)):
                if x == y or not below[y] >> x & 1 or below[x] >> y & 1:
                    continue
                if any(z not in (x, y) and below[y] >> z & 1 and below[z] >> x & 1 and not below[x] >> z & 1 for z in range(len(space))):
                    continue
                lines.append(f"  p{x} -> p{y} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _bispace_text(space: Bispace) -> str:
    data = bispace_to_json(space)
    return "\n".join(
        [
            f"points: {', '.join(data['points'])}",
            "tau+:   " + " ".join("{" + ",".join(u) + "}" for u in data["tauP"]),
            "tau-:   " + " ".join("{" + ",".join(u) + "}" for u in data["tauM"]),
        ]
    )


# -- commands -----------------------------------------------------------------


def cmd_validate(args: argparse.Namespace, out: _Output) -> int:
    kind, data = load(args.file)
    report: dict[str, Any] = {"kind": kind}
    code = EXIT_OK
    if kind == "frame":
        frame = frame_from_json(data)
        report.update(valid=True, elements=frame.size(), join_irreducibles=len(frame.poset))
        dot = frame_to_dot(frame)
    elif kind == "biframe":
        b = biframe_from_json(data)
        report.update(
            valid=True,
            finitary=b.is_finitary(),
            sizes={"plus": b.plus.size(), "minus": b.minus.size(), "main": b.main.size()},
        )
        dot = frame_to_dot(b.main, "main")
    elif kind == "dframe":
        d, extra = dframe_from_json(data)
        report.update(valid=not extra["violations"], **extra)
        code = EXIT_OK if not extra["violations"] else EXIT_FAIL
        dot = None
    else:
        space, extra = bispace_from_json(data)
        report.update(valid=True, **extra, points=len(space))
        dot = bispace_to_dot(space)
    lines = [f"{kind}: {'valid' if report['valid'] else 'INVALID'}"]
    lines += [f"  {k}: {v}" for k, v in sorted(report.items()) if k not in ("kind", "valid")]
    out.emit(report, "\n".join(lines), dot)
    return code


def _spectrum_of(args: argparse.Namespace) -> tuple[Spectrum, dict]:
    kind, data = load(args.file)
    extra: dict[str, Any] = {"input": kind}
    if kind == "bispace":
        space, _ = bispace_from_json(data)
        spec = spectrum(space, args.duality)
        unit = unit_map(space, args.duality, spec)
        names = bispace_to_json(spec.bispace)["points"]
        extra["unit"] = {
            "mapping": [names[k] for k in unit.mapping],
            "bihomeomorphism": unit.is_bihomeomorphism(),
        }
        return spec, extra
    if kind == "biframe":
        if args.duality == "d":
            raise InvalidInput("the d-duality needs a d-frame or a bispace")
        return bipoints(biframe_from_json(data)), extra
    if kind == "dframe":
        if args.duality != "d":
            raise InvalidInput("a d-frame has only d-points; use --duality d")
        return dpoints(dframe_from_json(data)[0]), extra
    raise InvalidInput(f"cannot take the spectrum of a {kind}")


def cmd_spectrum(args: argparse.Namespace, out: _Output) -> int:
    spec, extra = _spectrum_of(args)
    data = {"duality": args.duality, "spectrum": bispace_to_json(spec.bispace), **extra}
    text = f"{len(spec.bispace)} points ({args.duality})\n{_bispace_text(spec.bispace)}"
    if "unit" in extra:
        text += f"\nunit is a bihomeomorphism: {extra['unit']['bihomeomorphism']}"
    out.emit(data, text, bispace_to_dot(spec.bispace, "spectrum"))
    return EXIT_OK


def _load_biframe(path: str) -> Biframe:
    kind, data = load(path)
    if kind != "biframe":
        raise InvalidInput(f"expected a biframe, got a {kind}")
    return biframe_from_json(data)


def cmd_assembly(args: argparse.Namespace, out: _Output) -> int:
    b = _load_biframe(args.file)
    a = biframe_assembly(b)
    fa = finitary_assembly(b)
    data: dict[str, Any] = {
        "assembly": biframe_to_json(a.biframe),
        "sizes": {"plus": a.plus.size(), "minus": a.minus.size(), "main": a.main.size()},
        "finitary_assembly_size": len(fa.family),
        "finitary_assembly_is_whole": fa.is_whole_assembly,
    }
    text = [
        f"assembly: |A+|={a.plus.size()} |A-|={a.minus.size()} |A|={a.main.size()}",
        f"finitary assembly: {len(fa.family)} congruences (whole assembly: {fa.is_whole_assembly})",
    ]
    code = EXIT_OK
    if args.free_presentation:
        fp = assembly_free_presentation(b, a)
        ok = fp.iso.is_isomorphism() and fp.complements_forced
        data["free_presentation"] = {
            "isomorphism": ok,
            "plus_dual": list(fp.iso.plus.dual),
            "minus_dual": list(fp.iso.minus.dual),
            "main_dual": list(fp.iso.main.dual),
            "presented": biframe_to_json(fp.presented),
        }
        text.append(f"free presentation isomorphic: {ok}")
        code = code if ok else EXIT_FAIL
    if args.alpha:
        amap = alpha(b, a)
        names_src = bispace_to_json(amap.source)["points"]
        names_tgt = bispace_to_json(amap.target)["points"]
        ok = amap.is_bihomeomorphism()
        data["alpha"] = {
            "bihomeomorphism": ok,
            "mapping": {names_src[i]: names_tgt[k] for i, k in enumerate(amap.mapping)},
        }
        text.append(f"alpha: Sk(bpt L) -> bpt(A L) is a bihomeomorphism: {ok}")
        code = code if ok else EXIT_FAIL
    dots = frame_to_dot(a.plus, "A+") + frame_to_dot(a.minus, "A-") + frame_to_dot(a.main, "A")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dots)
        text.append(f"wrote {args.dot}")
    out.emit(data, "\n".join(text), dots)
    return code


def _load_bispace(path: str) -> Bispace:
    kind, data = load(path)
    if kind != "bispace":
        raise InvalidInput(f"expected a bispace, got a {kind}")
    return bispace_from_json(data)[0]


def cmd_skula(args: argparse.Namespace, out: _Output) -> int:
    sk = _load_bispace(args.file).skula()
    out.emit(bispace_to_json(sk), _bispace_text(sk), bispace_to_dot(sk, "skula"))
    return EXIT_OK


def _property(space: Bispace, name: str) -> bool:
    if name in SEPARATION_AXIOMS:
        return separation(space, name)
    return sobriety(space)[name]


def cmd_check(args: argparse.Namespace, out: _Output) -> int:
    space = _load_bispace(args.file)
    names = args.axiom or list(PROPERTIES)
    results = {n: _property(space, n) for n in names}
    text = "\n".join(f"{n}: {v}" for n, v in results.items())
    out.emit(results, text)
    return EXIT_OK if all(results.values()) else EXIT_FAIL


def cmd_verify(args: argparse.Namespace, out: _Output) -> int:
    theorems = THEOREMS
    if args.theorem:
        known = {t.name: t for t in THEOREMS}
        missing = [n for n in args.theorem if n not in known]
        if missing:
            raise InvalidInput(f"unknown theorem(s) {missing}; see `bifrm verify --list`")
        theorems = tuple(known[n] for n in args.theorem)
    if args.list:
        rows = [{"name": t.name, "anchor": t.anchor, "family": t.family} for t in THEOREMS]
        docs = [{"name": d.name, "anchor": d.anchor, "reason": d.reason} for d in DOCUMENTED]
        text = "\n".join(f"{t.family:12} {t.name}: {t.anchor}" for t in THEOREMS)
        text += "\n" + "\n".join(f"{'documented':12} {d.name}: {d.reason}" for d in DOCUMENTED)
        out.emit({"theorems": rows, "documented": docs}, text)
        return EXIT_OK
    kwargs: dict[str, Any] = {}
    if args.mutate:
        kwargs["toolkit"] = corrupted_toolkit()
    suite = TheoremSuite(
        theorems,
        max_points=args.max_points if args.max_points is not None else 2,
        biframe_points=args.biframe_points,
        max_frame_size=args.max_frame_size,
        map_points=args.map_points,
        sample=args.sample,
        seed=args.seed,
        **kwargs,
    )
    report = verify(suite)
    out.emit(report.to_json(include_timing=args.timing), report.to_text())
    return report.exit_code


def cmd_enumerate(args: argparse.Namespace, out: _Output) -> int:
    max_points = args.max_points if args.max_points is not None else 2
    spaces = list(enumerate_bispaces(max_points))
    counts: dict[int, int] = {}
    for x in spaces:
        counts[len(x)] = counts.get(len(x), 0) + 1
    data = {"count": len(spaces), "by_points": counts, "bispaces": [bispace_to_json(x) for x in spaces]}
    text = "\n".join(f"{n} points: {c}" for n, c in sorted(counts.items())) + f"\ntotal: {len(spaces)}"
    if args.list:
        text += "\n" + "\n".join(bispace_key(x) for x in spaces)
    out.emit(data, text)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "dot", "text"), default="text")
    common.add_argument("--max-points", type=int, default=None, help="bispace size bound for enumeration")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled instance families")
    common.add_argument("--cap", type=int, default=None, help="largest frame (in elements) to build")

    parser = argparse.ArgumentParser(prog="bifrm", description="Finite biframes, d-frames and bispaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a frame, biframe, d-frame or bispace")
    p.add_argument("file")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("spectrum", parents=[common], help="points of a bispace, biframe or d-frame")
    p.add_argument("file")
    p.add_argument("--duality", choices=DUALITIES, default="fin")
    p.set_defaults(run=cmd_spectrum)

    p = sub.add_parser("assembly", parents=[common], help="the assembly of a biframe")
    p.add_argument("file")
    p.add_argument("--free-presentation", action="store_true", help="also build and certify the free presentation")
    p.add_argument("--alpha", action="store_true", help="also certify Sk(bpt L) = bpt(A L)")
    p.add_argument("--dot", metavar="OUT", help="write Hasse diagrams of the three components")
    p.set_defaults(run=cmd_assembly)

    p = sub.add_parser("skula", parents=[common], help="the Skula bispace")
    p.add_argument("file")
    p.set_defaults(run=cmd_skula)

    p = sub.add_parser("check", parents=[common], help="separation and sobriety properties of a bispace")
    p.add_argument("file")
    p.add_argument("--axiom", action="append", choices=PROPERTIES, help="property to check (repeatable)")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("verify", parents=[common], help="run the theorem suite")
    p.add_argument("--theorem", action="append", help="run only this theorem (repeatable)")
    p.add_argument("--biframe-points", type=int, default=None)
    p.add_argument("--max-frame-size", type=int, default=6)
    p.add_argument("--map-points", type=int, default=2)
    p.add_argument("--sample", type=int, default=None, help="seeded random subset size per family")
    p.add_argument("--mutate", action="store_true", help="run against a deliberately broken Delta")
    p.add_argument("--timing", action="store_true", help="include wall time in JSON output")
    p.add_argument("--list", action="store_true", help="list registered theorems")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="bispaces up to bihomeomorphism")
    p.add_argument("--list", action="store_true", help="list instance keys in text output")
    p.set_defaults(run=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Output(args.format)
    try:
        limits = {"frame_elements": args.cap} if args.cap is not None else {}
        with caps.override(**limits):
            return args.run(args, out)
    except SizeCapExceeded as exc:
        print(f"bifrm: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvalidInput as exc:
        print(f"bifrm: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BifrmError as exc:
        print(f"bifrm: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
