"""Line-oriented session files: ring, torus, grading, automorphism, element and hom definitions.

Example::

    ring A over QQ
    vars x, y, yinv
    units y:yinv
    relations x^2 - y^3 - 1
    asserts base_alg_closed, trdeg=1

    torus T rank 2 over QQ vars u, v
    subalgebra B in T gens u=[1,0]*1 unit, v=[0,1]*1
    base B r=[-1,2]*1
    grading g = [2,1]
    auto phi over QQ matrix [[1,1],[0,1]] scalars [1,1]
    element p in A = x^2 + y
    hom F from A laurent y1 to A laurent z1
    map F: x -> x; y -> y; y1 -> z1
    inv F: x -> x; y -> y; z1 -> y1
    do neutral --ring A

Lines starting with ``#`` are comments.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..algebras import AlgebraPresentation, AssertedFlags, MonomialGenerator, MonomialSubalgebra
from ..automorphisms import MonomialAutomorphism
from ..domains import parse_domain
from ..errors import LaurentKitError, ParseError
from ..gradings import Grading
from ..laurent import LaurentPoly, format_poly
from ..syntax import parse_int_matrix, parse_int_vector, parse_poly, parse_rational, split_top_level

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"


@dataclass
class RingDraft:
    name: str
    domain: object
    vars: List[str] = field(default_factory=list)
    units: List[Tuple[str, Optional[str]]] = field(default_factory=list)
    relations: List[Tuple[str, int, int]] = field(default_factory=list)  # text, line, column
    base: List[str] = field(default_factory=list)
    asserts: AssertedFlags = AssertedFlags()
    line: int = 0


@dataclass
class HomDef:
    name: str
    source: str
    target: str
    ynames: Tuple[str, ...]
    znames: Tuple[str, ...]
    images: Dict[str, LaurentPoly] = field(default_factory=dict)
    inverse: Optional[Dict[str, LaurentPoly]] = None


@dataclass
class Session:
    algebras: Dict[str, object] = field(default_factory=dict)  # presentations and monomial subalgebras (tori included)
    tori: Dict[str, str] = field(default_factory=dict)  # torus name -> itself; marks which algebras are tori
    parents: Dict[str, str] = field(default_factory=dict)  # subalgebra -> ambient torus
    gradings: Dict[str, Grading] = field(default_factory=dict)
    autos: Dict[str, MonomialAutomorphism] = field(default_factory=dict)
    elements: Dict[str, Tuple[str, LaurentPoly]] = field(default_factory=dict)
    homs: Dict[str, HomDef] = field(default_factory=dict)
    commands: List[List[str]] = field(default_factory=list)
    source: str = "<session>"

    def structure(self):
        """Comparable snapshot used for round-trip checks."""
        return (
            tuple(self.algebras.items()),
            tuple(self.tori),
            tuple(self.parents.items()),
            tuple(self.gradings.items()),
            tuple(self.autos.items()),
            tuple(self.elements.items()),
            tuple(
                (h.name, h.source, h.target, h.ynames, h.znames, tuple(h.images.items()),
                 None if h.inverse is None else tuple(h.inverse.items()))
                for h in self.homs.values()
            ),
            tuple(tuple(c) for c in self.commands),
        )

    def ext_algebra(self, name: str, laurent: Tuple[str, ...]):
        a = self.algebras[name]
        return a.laurent_extension(laurent)


class _Reader:
    def __init__(self, text: str, source: str):
        self.lines = text.splitlines()
        self.source = source
        self.session = Session(source=source)
        self.ring: Optional[RingDraft] = None
        self.lineno = 0

    def error(self, message, column=1):
        raise ParseError(message, line=self.lineno, column=column, source=self.source)

    def names(self, text: str, column: int) -> List[str]:
        out = [t.strip() for t in text.split(",")]
        for t in out:
            if not re.fullmatch(_NAME, t):
                self.error(f"bad name {t!r}", column)
        return out

    def domain(self, text: str, column: int):
        try:
            return parse_domain(text)
        except ValueError as exc:
            self.error(str(exc), column)

    def poly(self, text: str, names, domain, column: int) -> LaurentPoly:
        try:
            return parse_poly(text, names, domain, column_offset=column - 1)
        except ParseError as exc:
            raise ParseError(exc.message, self.lineno, exc.column, self.source) from None
        except LaurentKitError as exc:
            self.error(str(exc), column)

    def define(self, table: dict, name: str, value, column=1):
        if name in table:
            self.error(f"{name} is already defined", column)
        table[name] = value

    # ring blocks

    def close_ring(self):
        r, self.ring = self.ring, None
        if r is None:
            return
        if not r.vars:
            raise ParseError(f"ring {r.name} has no vars line", r.line, 1, self.source)
        index = set(r.vars)
        for u, v in r.units:
            for x in (u, v):
                if x is not None and x not in index:
                    raise ParseError(f"unknown generator {x} in units of {r.name}", r.line, 1, self.source)
        rels = []
        for text, line, col in r.relations:
            self.lineno = line
            rels.append(self.poly(text, r.vars, r.domain, col))
        try:
            a = AlgebraPresentation.build(r.vars, rels, dict(r.units), r.domain, r.base, r.asserts, r.name)
        except (LaurentKitError, KeyError) as exc:
            raise ParseError(f"ring {r.name}: {exc}", r.line, 1, self.source) from None
        self.define(self.session.algebras, r.name, a)

    def ring_line(self, key: str, rest: str, col: int):
        r = self.ring
        if key == "vars":
            r.vars = self.names(rest, col)
        elif key == "units":
            for item in split_top_level(rest):
                if ":" in item:
                    u, v = (s.strip() for s in item.split(":", 1))
                    r.units.append((u, v))
                else:
                    r.units.append((item.strip(), None))
        elif key == "relations":
            offset = col
            for part in split_top_level(rest):
                at = rest.find(part, offset - col)
                r.relations.append((part, self.lineno, col + max(at, 0)))
                offset = col + max(at, 0) + len(part)
        elif key == "base":
            r.base = self.names(rest, col)
        elif key == "asserts":
            flags = {}
            for item in split_top_level(rest):
                if item == "base_alg_closed":
                    flags["base_algebraically_closed"] = True
                elif item == "units_trivial":
                    flags["units_trivial"] = True
                elif item.startswith("trdeg="):
                    try:
                        flags["transcendence_degree"] = int(item[6:])
                    except ValueError:
                        self.error(f"bad transcendence degree {item!r}", col)
                else:
                    self.error(f"unknown assertion {item!r}", col)
            r.asserts = AssertedFlags(**flags)

    # top-level statements

    def statement(self, line: str):
        stripped = line.strip()
        col0 = len(line) - len(line.lstrip()) + 1
        key, _, rest = stripped.partition(" ")
        rest = rest.strip()
        col = col0 + len(key) + (len(stripped[len(key):]) - len(stripped[len(key):].lstrip()))
        if self.ring is not None and key in ("vars", "units", "relations", "asserts") or (
            self.ring is not None and key == "base" and not re.match(_NAME + r"\s+" + _NAME + r"\s*=", rest)
        ):
            self.ring_line(key, rest, col)
            return
        self.close_ring()
        handler = getattr(self, "st_" + key.replace("-", "_"), None)
        if handler is None:
            self.error(f"unknown statement {key!r}", col0)
        handler(rest, col)

    def st_ring(self, rest, col):
        m = re.fullmatch(rf"({_NAME})\s+over\s+(\S+)", rest)
        if not m:
            self.error("expected 'ring NAME over DOMAIN'", col)
        self.ring = RingDraft(m.group(1), self.domain(m.group(2), col + m.start(2)), line=self.lineno)

    def st_torus(self, rest, col):
        m = re.fullmatch(rf"({_NAME})\s+rank\s+(\d+)\s+over\s+(\S+)(?:\s+vars\s+(.+))?", rest)
        if not m:
            self.error("expected 'torus NAME rank N over DOMAIN [vars ...]'", col)
        rank = int(m.group(2))
        names = self.names(m.group(4), col + m.start(4)) if m.group(4) else None
        if names is not None and len(names) != rank:
            self.error(f"{len(names)} names for a torus of rank {rank}", col + m.start(4))
        t = MonomialSubalgebra.torus(rank, self.domain(m.group(3), col + m.start(3)), names, m.group(1))
        self.define(self.session.algebras, m.group(1), t, col)
        self.session.tori[m.group(1)] = m.group(1)

    def monomial_gens(self, text, rank, col) -> List[MonomialGenerator]:
        out = []
        for item in split_top_level(text):
            m = re.fullmatch(rf"({_NAME})\s*=\s*(\[[^\]]*\])\s*(?:\*\s*(\S+))?\s*(unit)?", item)
            if not m:
                self.error(f"expected NAME=[e1,...]*coef [unit], found {item!r}", col + max(text.find(item), 0))
            exp = parse_int_vector(m.group(2))
            if len(exp) != rank:
                self.error(f"exponent {list(exp)} has length {len(exp)}, the torus has rank {rank}", col + text.find(item))
            coef = parse_rational(m.group(3)) if m.group(3) else Fraction(1)
            out.append(MonomialGenerator(m.group(1), coef, exp, bool(m.group(4))))
        return out

    def st_subalgebra(self, rest, col):
        m = re.fullmatch(rf"({_NAME})(?:\s+in\s+({_NAME}))?\s+gens\s+(.+)", rest)
        if not m:
            self.error("expected 'subalgebra NAME [in TORUS] gens ...'", col)
        tname = m.group(2) or (list(self.session.tori)[-1] if self.session.tori else None)
        if tname is None or tname not in self.session.tori:
            self.error(f"unknown torus {tname!r}", col)
        torus = self.session.algebras[tname]
        gens = self.monomial_gens(m.group(3), torus.ambient_rank, col + m.start(3))
        try:
            a = MonomialSubalgebra(torus.domain, torus.ambient_names, tuple(gens), (), m.group(1))
        except LaurentKitError as exc:
            self.error(str(exc), col)
        self.define(self.session.algebras, m.group(1), a, col)
        self.session.parents[m.group(1)] = tname

    def st_base(self, rest, col):
        m = re.fullmatch(rf"({_NAME})\s+(.+)", rest)
        if not m or m.group(1) not in self.session.parents:
            self.error("expected 'base SUBALGEBRA NAME=[...]*coef, ...'", col)
        a = self.session.algebras[m.group(1)]
        base = self.monomial_gens(m.group(2), a.ambient_rank, col + m.start(2))
        self.session.algebras[m.group(1)] = MonomialSubalgebra(a.domain, a.ambient_names, a.gens, a.base + tuple(base), a.name)

    def st_grading(self, rest, col):
        m = re.fullmatch(rf"({_NAME})\s*=\s*(\[.*\])", rest)
        if not m:
            self.error("expected 'grading NAME = [w1, ...]'", col)
        self.define(self.session.gradings, m.group(1), Grading(parse_int_vector(m.group(2))), col)

    def st_auto(self, rest, col):
        m = re.fullmatch(rf"({_NAME})\s+over\s+(\S+)\s+matrix\s+(\[\[.*\]\])\s*(?:scalars\s+(\[.*\]))?", rest)
        if not m:
            self.error("expected 'auto NAME over DOMAIN matrix [[..]] scalars [..]'", col)
        dom = self.domain(m.group(2), col + m.start(2))
        mat = parse_int_matrix(m.group(3))
        if m.group(4):
            body = m.group(4).strip()[1:-1]
            scalars = [parse_rational(s) for s in body.split(",")] if body.strip() else []
        else:
            scalars = [1] * len(mat)
        try:
            auto = MonomialAutomorphism(mat, tuple(scalars), dom)
        except (LaurentKitError, ValueError, ZeroDivisionError) as exc:
            self.error(f"{type(exc).__name__}: {exc}", col + m.start(3))
        self.define(self.session.autos, m.group(1), auto, col)

    def st_element(self, rest, col):
        m = re.fullmatch(rf"({_NAME})\s+in\s+({_NAME})\s*=\s*(.+)", rest)
        if not m:
            self.error("expected 'element NAME in RING = expression'", col)
        a = self.session.algebras.get(m.group(2))
        if a is None:
            self.error(f"unknown ring {m.group(2)!r}", col + m.start(2))
        p = self.poly(m.group(3), a.names, a.element_domain, col + m.start(3))
        self.define(self.session.elements, m.group(1), (m.group(2), a.normalize(p)), col)

    def st_hom(self, rest, col):
        m = re.fullmatch(
            rf"({_NAME})\s+from\s+({_NAME})\s+laurent\s+(.+?)\s+to\s+({_NAME})\s+laurent\s+(.+)", rest
        )
        if not m:
            self.error("expected 'hom NAME from A laurent y1, .. to B laurent z1, ..'", col)
        for g in (2, 4):
            if m.group(g) not in self.session.algebras:
                self.error(f"unknown ring {m.group(g)!r}", col + m.start(g))
        ys = tuple(self.names(m.group(3), col + m.start(3)))
        zs = tuple(self.names(m.group(5), col + m.start(5)))
        if len(ys) != len(zs):
            self.error("both sides need the same number of Laurent variables", col)
        self.define(self.session.homs, m.group(1), HomDef(m.group(1), m.group(2), m.group(4), ys, zs), col)

    def _assignments(self, rest, col, inverse: bool):
        m = re.fullmatch(rf"({_NAME})\s*:\s*(.+)", rest)
        if not m or m.group(1) not in self.session.homs:
            self.error("expected 'map HOM: var -> expr; ...' for a defined hom", col)
        h = self.session.homs[m.group(1)]
        src = self.session.ext_algebra(h.source, h.ynames)
        tgt = self.session.ext_algebra(h.target, h.znames)
        if inverse:
            src, tgt = tgt, src
            if h.inverse is None:
                h.inverse = {}
        table = h.inverse if inverse else h.images
        body, offset = m.group(2), col + m.start(2)
        pos = 0
        for part in body.split(";"):
            start = offset + pos + (len(part) - len(part.lstrip()))
            pos += len(part) + 1
            if not part.strip():
                continue
            var, arrow, expr = part.partition("->")
            if not arrow:
                self.error("expected 'var -> expression'", start)
            var = var.strip()
            if var not in src.names:
                self.error(f"{var!r} is not a variable of {src.name}", start)
            ecol = start + part.strip().index("->") + 2 + (len(expr) - len(expr.lstrip()))
            table[var] = tgt.normalize(self.poly(expr.strip(), tgt.names, tgt.element_domain, ecol))

    def st_map(self, rest, col):
        self._assignments(rest, col, inverse=False)

    def st_inv(self, rest, col):
        self._assignments(rest, col, inverse=True)

    def st_do(self, rest, col):
        if not rest:
            self.error("expected a subcommand after 'do'", col)
        self.session.commands.append(rest.split())

    def read(self) -> Session:
        for k, line in enumerate(self.lines, start=1):
            self.lineno = k
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            self.statement(line)
        self.lineno = len(self.lines)
        self.close_ring()
        return self.session


def parse_session(text: str, source: str = "<session>") -> Session:
    if not text.strip():
        raise ParseError("empty session file", 1, 1, source)
    return _Reader(text, source).read()


def _fmt_coef(c) -> str:
    return str(Fraction(c))


def _fmt_gen(g: MonomialGenerator) -> str:
    s = f"{g.name}=[{','.join(str(x) for x in g.exponent)}]*{_fmt_coef(g.coefficient)}"
    return s + " unit" if g.unit else s


def format_session(s: Session) -> str:
    """Canonical text of a session; reparsing it gives an equal structure."""
    out: List[str] = []
    for name, a in s.algebras.items():
        if isinstance(a, AlgebraPresentation):
            out.append(f"ring {name} over {a.domain}")
            out.append("vars " + ", ".join(a.names))
            if a.units:
                out.append(
                    "units " + ", ".join(a.names[i] if j is None else f"{a.names[i]}:{a.names[j]}" for i, j in a.units)
                )
            if a.relations:
                out.append("relations " + ", ".join(format_poly(r, a.names) for r in a.relations))
            if a.base_generators:
                out.append("base " + ", ".join(a.names[k] for k in sorted(a.base_generators)))
            if a.asserted.items():
                out.append("asserts " + ", ".join(a.asserted.items()))
        elif name in s.tori:
            out.append(f"torus {name} rank {a.ambient_rank} over {a.domain} vars {', '.join(a.ambient_names)}")
        else:
            out.append(f"subalgebra {name} in {s.parents[name]} gens " + ", ".join(_fmt_gen(g) for g in a.gens))
            if a.base:
                out.append(f"base {name} " + ", ".join(_fmt_gen(g) for g in a.base))
    for name, g in s.gradings.items():
        out.append(f"grading {name} = [{','.join(str(w) for w in g.weights)}]")
    for name, f in s.autos.items():
        mat = "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in f.matrix.tolist()) + "]"
        out.append(f"auto {name} over {f.domain} matrix {mat} scalars [{','.join(_fmt_coef(x) for x in f.scalars)}]")
    for name, (ring, p) in s.elements.items():
        out.append(f"element {name} in {ring} = {format_poly(p, s.algebras[ring].names)}")
    for h in s.homs.values():
        out.append(f"hom {h.name} from {h.source} laurent {', '.join(h.ynames)} to {h.target} laurent {', '.join(h.znames)}")
        tgt = s.ext_algebra(h.target, h.znames)
        src = s.ext_algebra(h.source, h.ynames)
        if h.images:
            out.append(f"map {h.name}: " + "; ".join(f"{k} -> {format_poly(v, tgt.names)}" for k, v in h.images.items()))
        if h.inverse:
            out.append(f"inv {h.name}: " + "; ".join(f"{k} -> {format_poly(v, src.names)}" for k, v in h.inverse.items()))
    for c in s.commands:
        out.append("do " + " ".join(c))
    return "\n".join(out) + "\n"
