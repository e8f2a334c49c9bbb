"""Quivers with relations and their finite-dimensional path algebras.

Paths compose left to right: for arrows ``a: i -> j`` and ``b: j -> k`` the
word ``a*b`` is a path ``i -> k``.  A presented algebra is built by
enumerating paths breadth first and reducing each length stratum against
the relation ideal, until one full length step produces no new normal form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .linalg import ONE, ZERO, Matrix, fmt, rref, to_rational

DEFAULT_LENGTH_CAP = 64
PATH_BUDGET = 200_000

_ARROW_RE = r"[A-Za-z_][A-Za-z0-9_']*"
_VERTEX_RE = r"[A-Za-z0-9_'.]+"


class PresentationError(ValueError):
    """Raised for malformed or non-admissible presentations."""


class NotFiniteDimensional(PresentationError):
    """Path enumeration did not stabilise below the length cap."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Path(NamedTuple):
    """A path: start vertex plus a left-to-right arrow word (empty = idempotent)."""

    start: str
    arrows: tuple

    def __len__(self):  # noqa: D105 - path length, not tuple length
        return len(self.arrows)

    @property
    def length(self) -> int:
        return len(self.arrows)

    def word(self) -> str:
        return "*".join(self.arrows) if self.arrows else f"e_{self.start}"


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("vertex labels must be distinct")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise PresentationError("arrow names must be unique")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise PresentationError(f"arrow {a.name} uses an undeclared vertex")

    @classmethod
    def build(cls, vertices: Iterable, arrows: Iterable[tuple]) -> "Quiver":
        return cls(tuple(str(v) for v in vertices),
                   tuple(Arrow(n, str(s), str(t)) for n, s, t in arrows))

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrow_map[name]
        except AttributeError:
            object.__setattr__(self, "_arrow_map", {a.name: a for a in self.arrows})
            return self.arrow(name)
        except KeyError:
            raise PresentationError(f"unknown arrow {name!r}") from None

    def arrows_from(self, v: str) -> list:
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v: str) -> list:
        return [a for a in self.arrows if a.target == v]

    def arrows_between(self, i: str, j: str) -> list:
        return [a for a in self.arrows if a.source == i and a.target == j]

    def path_end(self, p: Path) -> str:
        v = p.start
        for name in p.arrows:
            a = self.arrow(name)
            if a.source != v:
                raise PresentationError(f"path {p.word()} is not composable at {name}")
            v = a.target
        return v

    def make_path(self, word: Sequence[str]) -> Path:
        word = tuple(word)
        if not word:
            raise PresentationError("empty arrow word")
        p = Path(self.arrow(word[0]).source, word)
        self.path_end(p)
        return p

    def index(self, v: str) -> int:
        return self.vertices.index(v)


@dataclass(frozen=True)
class Relation:
    """sum of coefficient * path, set equal to zero."""

    terms: tuple  # ((Fraction, Path), ...)

    @classmethod
    def of(cls, quiver: Quiver, *terms) -> "Relation":
        """``Relation.of(Q, (1, "a*b"), (-1, "b*a"))`` or ``Relation.of(Q, "a*a")``."""
        out = []
        for t in terms:
            if isinstance(t, str):
                c, w = ONE, t
            else:
                c, w = t
            out.append((to_rational(c), quiver.make_path(w.split("*"))))
        return cls(tuple(out))

    @property
    def source(self) -> str:
        return self.terms[0][1].start

    def min_length(self) -> int:
        return min(p.length for _, p in self.terms)


@dataclass
class PresentedAlgebra:
    """Finite-dimensional quotient kQ/I with a path normal-form basis."""

    quiver: Quiver
    relations: tuple
    basis: list = field(default_factory=list)          # global list of Path
    pair_index: dict = field(default_factory=dict)     # (i, j) -> [global idx]
    nilpotency: int = 0                                # every path this long is zero
    slf_certificate: dict = field(default_factory=dict)
    name: str = ""
    _normal: dict = field(default_factory=dict, repr=False)  # path -> {idx: coeff}

    # -- basic structure --------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self.quiver.vertices

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pair_dim(self, i: str, j: str) -> int:
        return len(self.pair_index.get((i, j), ()))

    def pair_basis(self, i: str, j: str) -> list:
        return list(self.pair_index.get((i, j), ()))

    def target(self, p: Path) -> str:
        return self.quiver.path_end(p)

    def idempotent(self, v: str) -> int:
        return self.pair_index[(v, v)][0]

    def reduce(self, p: Path) -> dict:
        """Normal form of a path as {basis index: coefficient}."""
        if p.length >= self.nilpotency and p.length > 0:
            return {}
        nf = self._normal.get(p)
        if nf is None:
            self.quiver.path_end(p)
            return {}
        return nf

    def is_zero_path(self, word: Sequence[str]) -> bool:
        return not self.reduce(self.quiver.make_path(word))

    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            p = self.basis[i]
            pe = self.target(p)
            for j, b in y.items():
                q = self.basis[j]
                if q.start != pe:
                    continue
                for k, c in self.reduce(Path(p.start, p.arrows + q.arrows)).items():
                    out[k] = out.get(k, ZERO) + a * b * c
        return {k: v for k, v in out.items() if v}

    def basis_product(self, i: int, j: int) -> dict:
        return self.multiply({i: ONE}, {j: ONE})

    def describe_basis(self) -> list:
        return [p.word() for p in self.basis]

    def __repr__(self) -> str:
        return f"PresentedAlgebra({self.name or 'unnamed'}, dim={self.dim}, vertices={len(self.vertices)})"


# -- construction --------------------------------------------------------------


def _check_relation(q: Quiver, r: Relation) -> None:
    if not r.terms:
        raise PresentationError("empty relation")
    src = tgt = None
    for c, p in r.terms:
        if p.length < 2:
            raise PresentationError(f"relation term {p.word()} has length < 2 (not admissible)")
        end = q.path_end(p)
        if src is None:
            src, tgt = p.start, end
        elif (p.start, end) != (src, tgt):
            raise PresentationError(
                f"relation terms do not share source and target: {p.word()} is {p.start}->{end}, "
                f"expected {src}->{tgt}")


def _arrow_rank(q: Quiver) -> dict:
    return {a.name: k for k, a in enumerate(q.arrows)}


def validate(quiver: Quiver, relations: Sequence[Relation], length_cap: int = DEFAULT_LENGTH_CAP,
             name: str = "") -> PresentedAlgebra:
    """Check admissibility and the slf axioms, and compute the path basis."""
    relations = tuple(relations)
    for r in relations:
        _check_relation(quiver, r)
    rank_of = _arrow_rank(quiver)

    def col_key(p: Path):
        return (-p.length, tuple(rank_of[a] for a in p.arrows))

    levels = [[Path(v, ()) for v in quiver.vertices]]
    out_arrows = {v: quiver.arrows_from(v) for v in quiver.vertices}
    total = 0
    for L in range(1, length_cap + 1):
        nxt = []
        for p in levels[-1]:
            end = p.start if not p.arrows else quiver.arrow(p.arrows[-1]).target
            for a in out_arrows[end]:
                nxt.append(Path(p.start, p.arrows + (a.name,)))
        total += len(nxt)
        if total > PATH_BUDGET:
            raise NotFiniteDimensional(
                f"path enumeration exceeded {PATH_BUDGET} paths by length {L}; "
                "the presentation does not look finite-dimensional")
        levels.append(nxt)

        # paths ending / starting at each vertex, up to length L
        by_end: dict = {v: [] for v in quiver.vertices}
        by_start: dict = {v: [] for v in quiver.vertices}
        for lev in levels:
            for p in lev:
                e = p.start if not p.arrows else quiver.arrow(p.arrows[-1]).target
                by_end[e].append(p)
                by_start[p.start].append(p)

        # ideal I + J^{L+1} modulo J^{L+1}, grouped by vertex pair
        ideal: dict = {}
        for r in relations:
            s = r.source
            t = quiver.path_end(r.terms[0][1])
            m = r.min_length()
            if m > L:
                continue
            for pre in by_end[s]:
                if pre.length + m > L:
                    continue
                for post in by_start[t]:
                    if pre.length + m + post.length > L:
                        continue
                    elem = {}
                    for c, w in r.terms:
                        word = pre.arrows + w.arrows + post.arrows
                        if len(word) <= L:
                            key = Path(pre.start, word)
                            elem[key] = elem.get(key, ZERO) + c
                    elem = {k: v for k, v in elem.items() if v}
                    if elem:
                        pe = quiver.path_end(post) if post.arrows else post.start
                        ideal.setdefault((pre.start, pe), []).append(elem)

        # reduce every vertex pair
        by_pair: dict = {}
        for lev in levels:
            for p in lev:
                e = p.start if not p.arrows else quiver.arrow(p.arrows[-1]).target
                by_pair.setdefault((p.start, e), []).append(p)
        normal: dict = {}
        stable = True
        pair_nonpivots: dict = {}
        for pair, paths in by_pair.items():
            cols = sorted(paths, key=col_key)
            pos = {p: k for k, p in enumerate(cols)}
            rows = ideal.get(pair, [])
            if rows:
                mat = Matrix(len(rows), len(cols),
                             [[e.get(p, ZERO) for p in cols] for e in rows])
                red, pivots = rref(mat)
            else:
                red, pivots = None, []
            pivset = set(pivots)
            nonpiv = [p for p in cols if pos[p] not in pivset]
            pair_nonpivots[pair] = (cols, red, pivots, nonpiv)
            for k, pc in enumerate(pivots):
                if cols[pc].length == L:
                    row = red.row(k)
                    if any(x for j, x in enumerate(row) if j != pc):
                        stable = False
            if any(p.length == L for p in nonpiv):
                stable = False
        if stable:
            break
    else:
        raise NotFiniteDimensional(
            f"no stabilisation up to length cap {length_cap}: the presentation is not "
            "finite-dimensional at some vertex pair")

    # assemble basis and normal forms
    basis: list = []
    pair_index: dict = {}
    local_pos: dict = {}
    for i in quiver.vertices:
        for j in quiver.vertices:
            entry = pair_nonpivots.get((i, j))
            if not entry:
                continue
            nonpiv = sorted(entry[3], key=lambda p: (p.length, tuple(rank_of[a] for a in p.arrows)))
            if not nonpiv:
                continue
            idxs = []
            for p in nonpiv:
                local_pos[p] = len(basis)
                idxs.append(len(basis))
                basis.append(p)
            pair_index[(i, j)] = idxs
    normal = {}
    for pair, (cols, red, pivots, nonpiv) in pair_nonpivots.items():
        for p in nonpiv:
            normal[p] = {local_pos[p]: ONE}
        for k, pc in enumerate(pivots):
            w = cols[pc]
            if w.length >= L:
                continue
            row = red.row(k)
            nf = {}
            for j, x in enumerate(row):
                if j != pc and x:
                    nf[local_pos[cols[j]]] = -x
            normal[w] = nf

    alg = PresentedAlgebra(quiver=quiver, relations=relations, basis=basis, pair_index=pair_index,
                           nilpotency=L, name=name, _normal=normal)
    alg.slf_certificate = slf_audit(alg)
    bad = [k for k, v in alg.slf_certificate.items() if v is not True]
    if bad:
        raise PresentationError(f"slf axioms fail: {', '.join(bad)}")
    return alg


def slf_audit(alg: PresentedAlgebra) -> dict:
    """Check conditions (I)-(V) and the idempotent decomposition on a built algebra."""
    q = alg.quiver
    cert = {}
    cert["I_basic"] = len(set(q.vertices)) == len(q.vertices)
    cert["II_finite_hom"] = all(len(v) < float("inf") for v in alg.pair_index.values())
    cert["III_IV_locally_finite"] = all(
        sum(1 for j in q.vertices if alg.pair_dim(i, j)) <= len(q.vertices)
        and sum(1 for j in q.vertices if alg.pair_dim(j, i)) <= len(q.vertices)
        for i in q.vertices)
    local = True
    for v in q.vertices:
        idx = alg.pair_index.get((v, v), [])
        if not idx or alg.basis[idx[0]] != Path(v, ()):
            local = False
            continue
        # radical of e_v A e_v = positive-length loops; nilpotent by construction
        if any(alg.basis[k].length == 0 for k in idx[1:]):
            local = False
    cert["V_local"] = local
    cert["direct_sum"] = sum(len(v) for v in alg.pair_index.values()) == alg.dim
    return cert


def cartan_matrix(alg: PresentedAlgebra) -> list:
    """C[i][j] = [P(i) : S(j)] = number of basis paths i -> j."""
    vs = alg.vertices
    return [[alg.pair_dim(i, j) for j in vs] for i in vs]


def projective_dims(alg: PresentedAlgebra) -> dict:
    return {i: sum(alg.pair_dim(i, j) for j in alg.vertices) for i in alg.vertices}


# -- special biseriality ------------------------------------------------------


def is_special_biserial(alg: PresentedAlgebra) -> tuple:
    """(verdict, certificate); the certificate names the first violation."""
    q = alg.quiver
    for v in q.vertices:
        if len(q.arrows_from(v)) > 2:
            return False, f"vertex {v} has {len(q.arrows_from(v))} outgoing arrows"
        if len(q.arrows_to(v)) > 2:
            return False, f"vertex {v} has {len(q.arrows_to(v))} incoming arrows"
    for a in q.arrows:
        after = [b.name for b in q.arrows_from(a.target) if not alg.is_zero_path((a.name, b.name))]
        if len(after) > 1:
            return False, f"arrow {a.name} has nonzero continuations {after}"
        before = [c.name for c in q.arrows_to(a.source) if not alg.is_zero_path((c.name, a.name))]
        if len(before) > 1:
            return False, f"arrow {a.name} has nonzero predecessors {before}"
    return True, "special biserial"


# -- text format ----------------------------------------------------------------


_TERM_RE = re.compile(
    rf"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*({_ARROW_RE}(?:\s*\*\s*{_ARROW_RE})*)\s*")


def _parse_relation_body(q: Quiver, body: str, lineno: int) -> Relation:
    pos = 0
    terms = []
    body = body.strip()
    first = True
    while pos < len(body):
        m = _TERM_RE.match(body, pos)
        if not m or m.end() == pos:
            raise PresentationError(f"line {lineno}: cannot parse relation near {body[pos:]!r}")
        sign, coef, word = m.groups()
        if sign is None and not first:
            raise PresentationError(f"line {lineno}: missing + or - between terms")
        c = to_rational(coef) if coef else ONE
        if sign == "-":
            c = -c
        arrows = [w.strip() for w in word.split("*")]
        try:
            terms.append((c, q.make_path(arrows)))
        except PresentationError as e:
            raise PresentationError(f"line {lineno}: {e}") from None
        pos = m.end()
        first = False
    if not terms:
        raise PresentationError(f"line {lineno}: empty relation")
    return Relation(tuple(terms))


def parse_presentation(text: str) -> tuple:
    """Parse the line format into (Quiver, [Relation]) without building the algebra."""
    vertices, arrows, rel_lines = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kw, _, rest = line.partition(" ")
        rest = rest.strip()
        if kw == "vertex":
            if not re.fullmatch(_VERTEX_RE, rest):
                raise PresentationError(f"line {lineno}: bad vertex label {rest!r}")
            vertices.append(rest)
        elif kw == "arrow":
            m = re.fullmatch(rf"({_ARROW_RE})\s*:\s*({_VERTEX_RE})\s*->\s*({_VERTEX_RE})", rest)
            if not m:
                raise PresentationError(f"line {lineno}: bad arrow statement {rest!r}")
            arrows.append(m.groups())
        elif kw == "relation":
            m = re.fullmatch(r"(.*)=\s*0", rest)
            if not m:
                raise PresentationError(f"line {lineno}: relation must end in '= 0'")
            rel_lines.append((lineno, m.group(1)))
        else:
            raise PresentationError(f"line {lineno}: unknown statement {kw!r}")
    if not vertices:
        raise PresentationError("presentation declares no vertices")
    q = Quiver.build(vertices, arrows)
    rels = [_parse_relation_body(q, body, n) for n, body in rel_lines]
    return q, rels


def load_algebra(text: str, name: str = "", length_cap: int = DEFAULT_LENGTH_CAP) -> PresentedAlgebra:
    q, rels = parse_presentation(text)
    return validate(q, rels, length_cap=length_cap, name=name)


def format_relation(r: Relation) -> str:
    parts = []
    for k, (c, p) in enumerate(r.terms):
        word = "*".join(p.arrows)
        mag = abs(c)
        coef = "" if mag == 1 else f"{fmt(mag)} "
        if k == 0:
            parts.append(("-" if c < 0 else "") + coef + word)
        else:
            parts.append(("- " if c < 0 else "+ ") + coef + word)
    return " ".join(parts) + " = 0"


def format_presentation(q: Quiver, relations: Sequence[Relation], header: str = "") -> str:
    lines = []
    if header:
        lines += [f"# {h}" if h else "#" for h in header.splitlines()]
    lines += [f"vertex {v}" for v in q.vertices]
    lines += [f"arrow {a.name}: {a.source} -> {a.target}" for a in q.arrows]
    lines += [f"relation {format_relation(r)}" for r in relations]
    return "\n".join(lines) + "\n"


# -- DOT ----------------------------------------------------------------------------


def to_dot(q: Quiver, name: str = "Q") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f'  "{v}";' for v in q.vertices]
    lines += [f'  "{a.source}" -> "{a.target}" [label="{a.name}"];' for a in q.arrows]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dot(text: str) -> Quiver:
    vertices, arrows = [], []
    for line in text.splitlines():
        line = line.strip()
        m = re.fullmatch(r'"([^"]+)"\s*->\s*"([^"]+)"\s*\[label="([^"]+)"\];', line)
        if m:
            s, t, n = m.groups()
            arrows.append((n, s, t))
            continue
        m = re.fullmatch(r'"([^"]+)";', line)
        if m:
            vertices.append(m.group(1))
    return Quiver.build(vertices, arrows)


# -- built-in presentations -------------------------------------------------------


def point_algebra() -> PresentedAlgebra:
    """Strongly typical block: one vertex, no arrows (the ground field)."""
    return validate(Quiver.build(["0"], []), [], name="point")


def dual_numbers() -> PresentedAlgebra:
    """Typical block: one loop ``a`` with ``a*a = 0``."""
    q = Quiver.build(["0"], [("a", "0", "0")])
    return validate(q, [Relation.of(q, "a*a")], name="dual-numbers")


def a2_path_algebra() -> PresentedAlgebra:
    """Acyclic 1 -> 2; hereditary and not self-injective."""
    return validate(Quiver.build(["1", "2"], [("a", "1", "2")]), [], name="A2")


def sl2_principal_block() -> PresentedAlgebra:
    """Basic algebra of the principal block of O for sl(2).

    Vertex 1 is the dominant weight (P(1) is the dominant Verma module),
    vertex 2 the antidominant one; ``a*b = 0`` kills the loop at 1 so that
    P(2) is the unique projective-injective.
    """
    q = Quiver.build(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    return validate(q, [Relation.of(q, "a*b")], name="sl2-O0")


FAMILIES = ("c", "d")


def family_c_presentation(n: int) -> tuple:
    """First ``n`` vertices of the half-integer atypical block quiver.

    Vertex m stands for the highest weight (m - 1/2, 1/2 - m).
    """
    if n < 2:
        raise PresentationError("family (c) needs n >= 2")
    vs = [str(m) for m in range(1, n + 1)]
    arrows = []
    for m in range(1, n):
        arrows.append((f"a{m}", str(m), str(m + 1)))
    for m in range(1, n):
        arrows.append((f"b{m}", str(m + 1), str(m)))
    q = Quiver.build(vs, arrows)
    rels = []
    for m in range(1, n - 1):
        rels.append(Relation.of(q, f"a{m}*a{m + 1}"))
    for m in range(1, n - 1):
        rels.append(Relation.of(q, f"b{m + 1}*b{m}"))
    for m in range(2, n):
        rels.append(Relation.of(q, (1, f"a{m}*b{m}"), (-1, f"b{m - 1}*a{m - 1}")))
    if n == 2:
        # boundary closure: these vanish in the full algebra through vertex 3
        rels.append(Relation.of(q, "a1*b1*a1"))
        rels.append(Relation.of(q, "b1*a1*b1"))
    return q, rels


def family_d_presentation(n: int) -> tuple:
    """First ``n`` columns of the principal block quiver (2n vertices).

    Top row ``L0, L1, ...`` and bottom row ``PiL0, PiL1, ...``; primed arrow
    names live on the bottom row.  Arrow orientation: h: L0 -> PiL0 (h' back),
    c: L0 -> L1, d: L1 -> PiL0 (diagonal), a_k: L_k -> L_{k+1}, b_k back.
    """
    if n < 3:
        raise PresentationError("family (d) needs n >= 3")
    top = [f"L{k}" for k in range(n)]
    bot = [f"PiL{k}" for k in range(n)]
    row = {"": top, "'": bot}
    other = {"": bot, "'": top}
    arrows = []
    for s in ("", "'"):
        arrows.append((f"h{s}", row[s][0], other[s][0]))
    for s in ("", "'"):
        arrows.append((f"c{s}", row[s][0], row[s][1]))
        arrows.append((f"d{s}", row[s][1], other[s][0]))
        for k in range(1, n - 1):
            arrows.append((f"a{k}{s}", row[s][k], row[s][k + 1]))
        for k in range(1, n - 1):
            arrows.append((f"b{k}{s}", row[s][k + 1], row[s][k]))
    q = Quiver.build(top + bot, arrows)
    rels = []
    for s, t in (("", "'"), ("'", "")):
        rels.append(Relation.of(q, f"h{s}*h{t}"))                    # h^2 = 0
        rels.append(Relation.of(q, f"c{s}*a1{s}"))                   # ac = 0
        rels.append(Relation.of(q, f"b1{s}*d{s}"))                   # db = 0
        rels.append(Relation.of(q, f"d{s}*c{t}"))                    # cd = 0
        rels.append(Relation.of(q, (1, f"d{s}*h{t}*c{s}"), (-1, f"a1{s}*b1{s}")))  # chd = ba
        rels.append(Relation.of(q, (1, f"h{s}*c{t}*d{t}"), (-1, f"c{s}*d{s}*h{t}")))  # dch = hdc
        for k in range(1, n - 2):
            rels.append(Relation.of(q, f"a{k}{s}*a{k + 1}{s}"))
            rels.append(Relation.of(q, f"b{k + 1}{s}*b{k}{s}"))
        for k in range(2, n - 1):
            rels.append(Relation.of(q, (1, f"a{k}{s}*b{k}{s}"), (-1, f"b{k - 1}{s}*a{k - 1}{s}")))
    return q, rels


@dataclass
class TruncatedFamily:
    family: str
    n: int
    algebra: PresentedAlgebra

    def column(self, v: str) -> int:
        """Diagram distance of a vertex from the first column."""
        if self.family == "c":
            return int(v) - 1
        return int(v.lstrip("PiL"))

    def interior(self, margin: int = 1) -> list:
        """Vertices at least ``margin`` columns away from the truncation boundary."""
        return [v for v in self.algebra.vertices if self.column(v) <= self.n - 1 - margin]

    def boundary(self) -> list:
        return [v for v in self.algebra.vertices if self.column(v) == self.n - 1]


def truncate(family: str, n: int) -> TruncatedFamily:
    if family == "c":
        q, rels = family_c_presentation(n)
    elif family == "d":
        q, rels = family_d_presentation(n)
    else:
        raise PresentationError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return TruncatedFamily(family, n, validate(q, rels, name=f"({family}) n={n}"))
