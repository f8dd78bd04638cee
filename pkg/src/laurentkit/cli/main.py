"""Command-line front end: ``laurentkit SUBCOMMAND FILE [options]``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from ..algebras import AlgebraPresentation, MonomialSubalgebra
from ..automorphisms import apply, compose, inverse
from ..cancellation import (
    LaurentHom,
    bg_cancel,
    characterize_laurent,
    laurent_cancel,
    localized_normalize,
    reconstruct_iso,
    unit_normalize,
)
from ..errors import HypothesisFailed, LaurentKitError, NotUnimodular, ParseError
from ..gradings import Grading, grading_lattice, homogeneous_components, leading_form, presentation_neutral, support
from ..lattice import IntMatrix, LatticeBasis, integer_kernel
from ..laurent import LaurentPoly, format_poly, is_unit_poly
from .report import SCHEMA_VERSION, coef_str, ledger_data, matrix_data, trace_data
from .session import Session, parse_session

EXIT_OK, EXIT_ERROR, EXIT_HYPOTHESIS, EXIT_PARSE = 0, 1, 2, 3

Result = Tuple[List[str], dict]


class UsageError(LaurentKitError):
    pass


def _pick(table: dict, name: Optional[str], kind: str, accept: Callable = lambda v: True):
    if name is not None:
        if name not in table:
            raise UsageError(f"no {kind} named {name!r}")
        return name, table[name]
    candidates = [(k, v) for k, v in table.items() if accept(v)]
    if not candidates:
        raise UsageError(f"the session defines no {kind}")
    return candidates[-1]


def _ring(s: Session, args, accept=lambda a: True):
    return _pick(s.algebras, args.ring, "ring", accept)


def _hom(s: Session, args) -> LaurentHom:
    name, h = _pick(s.homs, args.hom, "hom")
    return LaurentHom.build(
        s.algebras[h.source],
        s.algebras[h.target],
        h.images,
        h.inverse,
        ynames=h.ynames,
        znames=h.znames,
        name=name,
    )


def _poly_str(a, p: LaurentPoly) -> str:
    return format_poly(p, a.names)


def _iso_data(iso) -> dict:
    return {"forward": iso.forward.format(), "backward": iso.backward.format()}


def cmd_units(s: Session, args) -> Result:
    names = [args.element] if args.element else list(s.elements)
    if not names:
        raise UsageError("the session defines no elements")
    lines, items = [], []
    for name in names:
        if name not in s.elements:
            raise UsageError(f"no element named {name!r}")
        ring, p = s.elements[name]
        a = s.algebras[ring]
        unit = is_unit_poly(p)
        in_ring = a.is_unit(p)
        item = {"element": name, "ring": ring, "poly": _poly_str(a, p), "is_unit": in_ring}
        if unit is not None:
            item["coefficient"] = coef_str(unit[0])
            item["exponent"] = list(unit[1])
        items.append(item)
        if in_ring:
            lines.append(f"{name} = {item['poly']}: unit of {ring}, coefficient {item['coefficient']}, exponent {item['exponent']}")
        elif unit is not None:
            lines.append(f"{name} = {item['poly']}: unit of the ambient Laurent ring but not of {ring}")
        else:
            lines.append(f"{name} = {item['poly']}: not a unit")
    return lines, {"elements": items}


def cmd_grade(s: Session, args) -> Result:
    name, (ring, p) = _pick(s.elements, args.element, "element")
    gname, g = _pick(s.gradings, args.grading, "grading")
    a = s.algebras[ring]
    comps = homogeneous_components(g, p)
    data = {
        "element": name,
        "grading": list(g.weights),
        "support": sorted(support(g, p)),
        "components": {str(d): _poly_str(a, c) for d, c in comps.items()},
    }
    lines = [f"support of {name} under {gname}: {{{', '.join(str(d) for d in data['support'])}}}"]
    lines += [f"  degree {d}: {c}" for d, c in data["components"].items()]
    if not p.is_zero():
        d, f = leading_form(g, p)
        data["leading_form"] = {"degree": d, "form": _poly_str(a, f)}
        lines.append(f"leading form: degree {d}, {data['leading_form']['form']}")
    return lines, data


def _lattice_data(lat: LatticeBasis) -> dict:
    return {"rank": lat.rank, "basis": [list(v) for v in lat.basis]}


def cmd_gradings(s: Session, args) -> Result:
    name, a = _ring(s, args)
    if isinstance(a, AlgebraPresentation):
        lat = grading_lattice(a).lattice
        note = "generator degrees admitted by the relations"
    else:
        lat = (
            integer_kernel(IntMatrix([g.exponent for g in a.base], cols=a.ambient_rank))
            if a.base
            else LatticeBasis.full(a.ambient_rank)
        )
        note = "torus weights vanishing on R"
    basis = ", ".join(str(list(v)) for v in lat.basis) or "none"
    return [f"grading lattice of {name} ({note}): rank {lat.rank}, basis {basis}"], {"ring": name, **_lattice_data(lat)}


def cmd_neutral(s: Session, args) -> Result:
    name, a = _ring(s, args, lambda x: isinstance(x, AlgebraPresentation))
    if not isinstance(a, AlgebraPresentation):
        raise UsageError("neutral needs a presented ring")
    rep = presentation_neutral(a)
    data = {
        "ring": name,
        "algebra_neutral": rep.algebra_neutral,
        "neutral_generators": list(rep.neutral_generators),
        "lattice": _lattice_data(rep.lattice),
        "caveat": rep.caveat,
    }
    lines = [
        f"grading lattice: rank {rep.lattice.rank}" + (f", basis {[list(v) for v in rep.lattice.basis]}" if rep.lattice.rank else " ({0})"),
        f"neutral generators: {', '.join(rep.neutral_generators) or 'none'}",
        f"algebra_neutral: {str(rep.algebra_neutral).lower()}",
        f"note: {rep.caveat}",
    ]
    return lines, data


def cmd_auto(s: Session, args) -> Result:
    if not s.autos:
        raise UsageError("the session defines no automorphisms")
    names = [args.auto] if args.auto else list(s.autos)
    autos = []
    for n in names:
        if n not in s.autos:
            raise UsageError(f"no automorphism named {n!r}")
        autos.append((n, s.autos[n]))
    if args.element is not None and args.element not in s.elements:
        raise UsageError(f"no element named {args.element!r}")
    chosen = [args.element] if args.element else list(s.elements)
    ring_name = args.ring or (s.elements[chosen[0]][0] if chosen else None)
    ring_names = s.algebras[ring_name].names if ring_name in s.algebras else None
    lines, data = [], {"automorphisms": []}
    for n, f in autos:
        inv = inverse(f)
        data["automorphisms"].append(
            {"name": n, "matrix": matrix_data(f.matrix), "scalars": [coef_str(x) for x in f.scalars],
             "inverse": {"matrix": matrix_data(inv.matrix), "scalars": [coef_str(x) for x in inv.scalars]}}
        )
        shown = ring_names if ring_names is not None and len(ring_names) == f.rank else None
        lines.append(f"{n}: {f.format(shown)}")
        lines.append(f"{n}^-1: {inv.format(shown)}")
    total = autos[0][1]
    for _, f in autos[1:]:
        total = compose(total, f)
    if len(autos) > 1:
        data["composite"] = {"matrix": matrix_data(total.matrix), "scalars": [coef_str(x) for x in total.scalars]}
        lines.append(f"{' then '.join(n for n, _ in autos)}: {total.format()}")
    applied = []
    for en in chosen:
        ring, p = s.elements[en]
        a = s.algebras[ring]
        if p.rank != total.rank or not total.domain.is_field and p.domain != total.domain:
            continue
        img = apply(total, p.change_domain(total.domain))
        applied.append({"element": en, "image": format_poly(img, a.names)})
        lines.append(f"image of {en}: {format_poly(img, a.names)}")
    data["images"] = applied
    return lines, data


def cmd_reconstruct(s: Session, args) -> Result:
    F = _hom(s, args)
    rep = reconstruct_iso(F)
    tgt, src = F.target, F.source
    data = {
        "hom": F.name,
        "E": matrix_data(rep.E),
        "D": matrix_data(rep.D),
        "b": [format_poly(b, F.target_base.names) for b in rep.b],
        "a": [format_poly(a, F.source_base.names) for a in rep.a],
        "ideal_generators": [format_poly(z, tgt.names) for z in rep.ideal_generators],
        "iso": _iso_data(rep.iso),
        "ledger": ledger_data(rep.ledger),
    }
    lines = [
        f"E = {data['E']}",
        f"D = {data['D']}  (D*E = identity)",
        f"b = {', '.join(data['b'])}",
        f"a = {', '.join(data['a'])}",
        f"ideal: ({', '.join(data['ideal_generators'])})",
        "induced isomorphism: " + "; ".join(data["iso"]["forward"]),
        "inverse: " + "; ".join(data["iso"]["backward"]),
    ]
    return lines + _ledger_lines(rep.ledger), data


def _ledger_lines(ledger) -> List[str]:
    return [f"  [{e.status}] {e.name}" + (f": {e.detail}" if e.detail else "") for e in ledger.entries]


def _choose_grading(a: MonomialSubalgebra) -> Grading:
    lat = (
        integer_kernel(IntMatrix([g.exponent for g in a.base], cols=a.ambient_rank))
        if a.base
        else LatticeBasis.full(a.ambient_rank)
    )
    for v in lat.basis:
        g = Grading(v)
        if any(g.degree(u.exponent) for u in a.unit_gens):
            return g
    raise HypothesisFailed("every unit has degree 0 under every grading over R")


def cmd_normalize(s: Session, args) -> Result:
    name, a = _ring(s, args, lambda x: isinstance(x, MonomialSubalgebra))
    if not isinstance(a, MonomialSubalgebra):
        raise UsageError("normalize needs a monomial subalgebra")
    if args.grading:
        g = _pick(s.gradings, args.grading, "grading")[1]
    else:
        g = _choose_grading(a)
    if a.domain.is_field:
        trace = unit_normalize(a, g)
    else:
        _, trace = localized_normalize(a, g)
    c, e = trace.w
    w = a.monomial(e, c)
    data = {"ring": name, "grading": list(g.weights), **trace_data(trace, a), "w": _poly_str(a, w)}
    lines = [f"grading {list(g.weights)}", f"seed u = {data['seed']}"]
    if args.trace or not data["steps"]:
        for k, st in enumerate(data["steps"], 1):
            lines.append(
                f"  step {k}: u = {st['u']}, v = {st['v']}, deg u = {st['deg_u']}, deg v = {st['deg_v']}, "
                f"d = {st['d']}, (a,b) = ({st['a']},{st['b']}), (m,n) = ({st['m']},{st['n']}), r = {st['r']}, w = {st['w']}"
                + (f", localized at {st['localized_at']}" if st["localized_at"] else "")
            )
    if data["localizations"]:
        lines.append(f"coefficients localized to {data['domain']}")
    lines.append(f"{len(data['steps'])} step(s); w = {data['w']}")
    return lines, data


def cmd_characterize(s: Session, args) -> Result:
    name, a = _ring(s, args)
    v = characterize_laurent(a)
    data = {
        "ring": name,
        "is_laurent_line": v.is_laurent_line,
        "status": v.status,
        "witness_w": None if v.witness_w is None else _poly_str(a, v.witness_w),
        "grading": None if v.grading is None else list(v.grading.weights),
        "reason": v.reason,
        "counterexample": None if v.counterexample is None else list(v.counterexample),
        "ledger": ledger_data(v.ledger),
    }
    lines = [f"verdict: {v.status}", f"reason: {v.reason}"]
    if data["witness_w"]:
        lines.append(f"w = {data['witness_w']}")
    return lines + _ledger_lines(v.ledger), data


def cmd_bg_cancel(s: Session, args) -> Result:
    F = _hom(s, args)
    t = bg_cancel(F)
    data = {
        "hom": F.name,
        "m": t.m,
        "E": matrix_data(t.E),
        "scalars": [coef_str(x) for x in t.scalars],
        "units": [format_poly(u, F.source.names) for u in t.units],
        "iso": _iso_data(t.iso),
        "ledger": ledger_data(t.ledger),
    }
    lines = [
        f"m = {t.m}",
        f"E = {data['E']}",
        "isomorphism: " + "; ".join(data["iso"]["forward"]),
        "inverse: " + "; ".join(data["iso"]["backward"]),
    ]
    return lines + _ledger_lines(t.ledger), data


def cmd_cancel(s: Session, args) -> Result:
    F = _hom(s, args)
    rep = laurent_cancel(F)
    data = {"hom": F.name, "branch": rep.branch, "iso": _iso_data(rep.iso), "verified": True, "ledger": ledger_data(rep.ledger)}
    if rep.reconstruction is not None:
        data["E"] = matrix_data(rep.reconstruction.E)
        data["D"] = matrix_data(rep.reconstruction.D)
    lines = [
        f"branch: ({rep.branch})",
        "isomorphism: " + "; ".join(data["iso"]["forward"]),
        "inverse: " + "; ".join(data["iso"]["backward"]),
    ]
    return lines + _ledger_lines(rep.ledger), data


def cmd_selfcheck(s: Optional[Session], args) -> Result:
    from .selfcheck import run_selfcheck

    summary = run_selfcheck(args.seed if args.seed is not None else 0)
    lines = [f"{k}: {v['passed']}/{v['total']} passed" for k, v in summary.items()]
    if any(v["passed"] != v["total"] for v in summary.values()):
        raise AssertionError("self-check failures: " + "; ".join(lines))
    return lines, {"checks": summary}


COMMANDS: Dict[str, Callable[[Session, argparse.Namespace], Result]] = {
    "units": cmd_units,
    "grade": cmd_grade,
    "gradings": cmd_gradings,
    "neutral": cmd_neutral,
    "auto": cmd_auto,
    "reconstruct": cmd_reconstruct,
    "normalize": cmd_normalize,
    "characterize": cmd_characterize,
    "bg-cancel": cmd_bg_cancel,
    "cancel": cmd_cancel,
}


def _add_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--ring")
    p.add_argument("--grading")
    p.add_argument("--hom")
    p.add_argument("--element")
    p.add_argument("--auto")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--trace", action="store_true", help="print every normalization step")
    p.add_argument("--seed", type=int, help="seed for randomized self-checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="laurentkit", description="Exact Laurent polynomial algebra and cancellation tools.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in list(COMMANDS) + ["run"]:
        p = sub.add_parser(name)
        p.add_argument("file")
        _add_options(p)
    p = sub.add_parser("selfcheck")
    p.add_argument("file", nargs="?")
    _add_options(p)
    return parser


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, (HypothesisFailed, NotUnimodular)):
        return EXIT_HYPOTHESIS
    return EXIT_ERROR


def _status(code: int) -> str:
    return {EXIT_OK: "ok", EXIT_HYPOTHESIS: "hypothesis_failed", EXIT_PARSE: "parse_error"}.get(code, "error")


def error_data(exc: BaseException) -> dict:
    out = {"type": type(exc).__name__, "message": getattr(exc, "message", None) or str(exc)}
    if isinstance(exc, ParseError):
        out["line"], out["column"] = exc.line, exc.column
    return out


def _run_one(session: Session, command: str, args) -> Tuple[int, List[str], dict]:
    try:
        lines, data = COMMANDS[command](session, args)
        return EXIT_OK, lines, {"command": command, "status": "ok", "data": data}
    except (LaurentKitError, ArithmeticError, ValueError) as exc:
        code = exit_code_for(exc)
        err = error_data(exc)
        return code, [f"{err['type']}: {err['message']}"], {"command": command, "status": _status(code), "error": err}


def _run_file(session: Session, args, parser) -> Tuple[int, List[str], List[dict]]:
    if not session.commands:
        raise UsageError("the session has no 'do' lines")
    code, lines, results = EXIT_OK, [], []
    for words in session.commands:
        sub = parser.parse_args(words[:1] + [args.file] + words[1:])
        if sub.command not in COMMANDS:
            raise UsageError(f"cannot run {sub.command!r} from a session file")
        sub.trace = sub.trace or args.trace
        c, ls, res = _run_one(session, sub.command, sub)
        code = max(code, c)
        lines.append(f"== {' '.join(words)}")
        lines += ls
        results.append(res)
    return code, lines, results


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    doc = {"schema_version": SCHEMA_VERSION, "command": args.command, "file": args.file, "status": "ok", "results": [], "error": None}
    lines: List[str] = []
    code = EXIT_OK
    try:
        if args.command == "selfcheck":
            session = parse_session(open(args.file).read(), args.file) if args.file else None
            lines, res = _selfcheck(session, args)
            doc["results"] = [res]
        else:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
            session = parse_session(text, args.file)
            if args.command == "run":
                code, lines, doc["results"] = _run_file(session, args, parser)
            else:
                code, lines, res = _run_one(session, args.command, args)
                doc["results"] = [res]
                if code:
                    doc["error"] = res["error"]
    except (LaurentKitError, OSError, AssertionError) as exc:
        code = exit_code_for(exc)
        doc["error"] = error_data(exc)
        lines = [f"{doc['error']['type']}: {exc}"]
    doc["status"] = _status(code)
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)
        if doc["error"] is not None:
            print(f"error: {doc['error']['type']}: {doc['error']['message']}", file=sys.stderr)
    return code


def _selfcheck(session, args):
    lines, data = cmd_selfcheck(session, args)
    return lines, {"command": "selfcheck", "status": "ok", "data": data}
