"""Finite-dimensional representations, module maps and structural series.

A representation assigns a vector space Q^d to every vertex and a matrix
(target dim x source dim) to every arrow.  Paths act left to right, so a
representation is a right module over the path algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .linalg import (ONE, ZERO, Matrix, block_diag, complement_basis, coordinates, fmt,
                     kernel_basis, rank, solve, span_basis, to_rational)
from .quiver import Arrow, Path, PresentedAlgebra, Quiver, Relation, validate

ISO_TRIALS = 8
FALLBACK_MAX_DIM = 3
COEFF_RANGE = 1000


class AlgebraMismatch(ValueError):
    pass


class Undetermined(RuntimeError):
    """A randomized search failed and the deterministic fallback is out of range."""


@dataclass(eq=False)
class Representation:
    algebra: PresentedAlgebra
    dims: dict
    maps: dict
    summands: Optional[tuple] = None  # set when this is a standard sum of projectives P(v)
    label: str = ""

    def __post_init__(self):
        q = self.algebra.quiver
        for v in q.vertices:
            self.dims.setdefault(v, 0)
        for a in q.arrows:
            m = self.maps.get(a.name)
            shape = (self.dims[a.target], self.dims[a.source])
            if m is None:
                self.maps[a.name] = Matrix.zeros(*shape)
            elif m.shape != shape:
                raise ValueError(f"arrow {a.name}: matrix shape {m.shape}, expected {shape}")

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    def path_matrix(self, p: Path) -> Matrix:
        m = Matrix.identity(self.dims[p.start])
        for name in p.arrows:
            m = self.maps[name] @ m
        return m

    def relations_hold(self) -> bool:
        for r in self.algebra.relations:
            acc = None
            for c, p in r.terms:
                term = self.path_matrix(p).scale(c)
                acc = term if acc is None else acc + term
            if not acc.is_zero():
                return False
        return True

    def is_zero(self) -> bool:
        return self.dim == 0

    def __repr__(self) -> str:
        return f"Representation({self.label or '?'}, dims={self.dim_vector()})"


@dataclass(eq=False)
class ModuleMap:
    source: Representation
    target: Representation
    comps: dict  # vertex -> Matrix (target dim x source dim)

    def __post_init__(self):
        if self.source.algebra is not self.target.algebra:
            raise AlgebraMismatch("module map between modules over different algebras")
        for v in self.source.algebra.vertices:
            shape = (self.target.dims[v], self.source.dims[v])
            m = self.comps.get(v)
            if m is None:
                self.comps[v] = Matrix.zeros(*shape)
            elif m.shape != shape:
                raise ValueError(f"vertex {v}: component shape {m.shape}, expected {shape}")

    @property
    def algebra(self) -> PresentedAlgebra:
        return self.source.algebra

    def is_intertwiner(self) -> bool:
        for a in self.algebra.quiver.arrows:
            lhs = self.target.maps[a.name] @ self.comps[a.source]
            rhs = self.comps[a.target] @ self.source.maps[a.name]
            if lhs != rhs:
                return False
        return True

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        """self ∘ other."""
        if other.target is not self.source:
            raise ValueError("maps are not composable")
        return ModuleMap(other.source, self.target,
                         {v: self.comps[v] @ other.comps[v] for v in self.algebra.vertices})

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target,
                         {v: self.comps[v] + other.comps[v] for v in self.algebra.vertices})

    def scale(self, c) -> "ModuleMap":
        return ModuleMap(self.source, self.target, {v: m.scale(c) for v, m in self.comps.items()})

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.comps.values())

    def is_iso(self) -> bool:
        return all(m.is_invertible() for m in self.comps.values())

    def rank_vector(self) -> dict:
        return {v: rank(m) for v, m in self.comps.items()}

    def vector(self) -> tuple:
        out = []
        for v in self.algebra.vertices:
            for row in self.comps[v].tolist():
                out.extend(row)
        return tuple(out)

    def equals(self, other: "ModuleMap") -> bool:
        return all(self.comps[v] == other.comps[v] for v in self.algebra.vertices)


def identity_map(M: Representation) -> ModuleMap:
    return ModuleMap(M, M, {v: Matrix.identity(d) for v, d in M.dims.items()})


def zero_map(M: Representation, N: Representation) -> ModuleMap:
    return ModuleMap(M, N, {})


def map_from_vector(M: Representation, N: Representation, vec: Sequence) -> ModuleMap:
    comps = {}
    pos = 0
    for v in M.algebra.vertices:
        r, c = N.dims[v], M.dims[v]
        comps[v] = Matrix(r, c, [vec[pos + i * c: pos + (i + 1) * c] for i in range(r)])
        pos += r * c
    return ModuleMap(M, N, comps)


# -- standard modules -----------------------------------------------------------------


def zero_module(A: PresentedAlgebra) -> Representation:
    return Representation(A, {}, {}, summands=(), label="0")


def simple(A: PresentedAlgebra, i: str) -> Representation:
    return Representation(A, {i: 1}, {}, label=f"S({i})")


def _right_mult_matrix(A: PresentedAlgebra, src_pairs: list, arrow: Arrow, tgt_pairs: list) -> Matrix:
    """Matrix of p -> p*arrow from span(src basis) to span(tgt basis)."""
    pos = {k: n for n, k in enumerate(tgt_pairs)}
    cols = []
    for k in src_pairs:
        p = A.basis[k]
        col = [ZERO] * len(tgt_pairs)
        for idx, c in A.reduce(Path(p.start, p.arrows + (arrow.name,))).items():
            col[pos[idx]] += c
        cols.append(col)
    return Matrix.from_columns(cols, len(tgt_pairs))


def projective(A: PresentedAlgebra, i: str) -> Representation:
    """P(i): basis paths starting at i, graded by their end vertex."""
    dims = {j: A.pair_dim(i, j) for j in A.vertices}
    maps = {a.name: _right_mult_matrix(A, A.pair_basis(i, a.source), a, A.pair_basis(i, a.target))
            for a in A.quiver.arrows}
    return Representation(A, dims, maps, summands=(i,), label=f"P({i})")


def _left_mult_matrix(A: PresentedAlgebra, x: dict, src_pairs: list, tgt_pairs: list) -> Matrix:
    """Matrix of q -> x*q from span(src basis) to span(tgt basis)."""
    pos = {k: n for n, k in enumerate(tgt_pairs)}
    cols = []
    for k in src_pairs:
        col = [ZERO] * len(tgt_pairs)
        for idx, c in A.multiply(x, {k: ONE}).items():
            col[pos[idx]] += c
        cols.append(col)
    return Matrix.from_columns(cols, len(tgt_pairs))


def _mult_right_by(A: PresentedAlgebra, x: dict, src_pairs: list, tgt_pairs: list) -> Matrix:
    """Matrix of q -> q*x."""
    pos = {k: n for n, k in enumerate(tgt_pairs)}
    cols = []
    for k in src_pairs:
        col = [ZERO] * len(tgt_pairs)
        for idx, c in A.multiply({k: ONE}, x).items():
            col[pos[idx]] += c
        cols.append(col)
    return Matrix.from_columns(cols, len(tgt_pairs))


def injective(A: PresentedAlgebra, i: str) -> Representation:
    """I(i): dual of the basis paths ending at i."""
    dims = {j: A.pair_dim(j, i) for j in A.vertices}
    maps = {}
    for a in A.quiver.arrows:
        # (e_t A e_i) -> (e_s A e_i), q -> a*q ; transpose gives I_s -> I_t
        arrow_elem = A.reduce(Path(a.source, (a.name,)))
        m = _left_mult_matrix(A, arrow_elem, A.pair_basis(a.target, i), A.pair_basis(a.source, i))
        maps[a.name] = m.transpose()
    return Representation(A, dims, maps, label=f"I({i})")


def direct_sum(mods: Sequence[Representation]) -> tuple:
    """(M, inclusions, projections)."""
    A = mods[0].algebra if mods else None
    if A is None:
        raise ValueError("direct_sum needs at least one module")
    dims = {v: sum(M.dims[v] for M in mods) for v in A.vertices}
    maps = {a.name: block_diag([M.maps[a.name] for M in mods]) for a in A.quiver.arrows}
    summands = None
    if all(M.summands is not None for M in mods):
        summands = tuple(s for M in mods for s in M.summands)
    S = Representation(A, dims, maps, summands=summands,
                       label=" ⊕ ".join(M.label or "?" for M in mods))
    incs, projs = [], []
    offsets = {v: 0 for v in A.vertices}
    for M in mods:
        inc, pro = {}, {}
        for v in A.vertices:
            d, o, tot = M.dims[v], offsets[v], dims[v]
            inc[v] = Matrix(tot, d, [[ONE if r == o + c else ZERO for c in range(d)] for r in range(tot)])
            pro[v] = inc[v].transpose()
            offsets[v] += d
        incs.append(ModuleMap(M, S, inc))
        projs.append(ModuleMap(S, M, pro))
    return S, incs, projs


def projective_sum(A: PresentedAlgebra, vertices: Sequence[str]) -> Representation:
    if not vertices:
        return zero_module(A)
    if len(vertices) == 1:
        return projective(A, vertices[0])
    return direct_sum([projective(A, v) for v in vertices])[0]


def injective_sum(A: PresentedAlgebra, vertices: Sequence[str]) -> Representation:
    if not vertices:
        return zero_module(A)
    if len(vertices) == 1:
        return injective(A, vertices[0])
    return direct_sum([injective(A, v) for v in vertices])[0]


def summand_offsets(A: PresentedAlgebra, summands: Sequence[str]) -> list:
    """Per summand: {vertex: offset of that summand's block in the sum}."""
    offsets = {v: 0 for v in A.vertices}
    out = []
    for s in summands:
        out.append(dict(offsets))
        for v in A.vertices:
            offsets[v] += A.pair_dim(s, v)
    return out


def generator_index(A: PresentedAlgebra, summands: Sequence[str], k: int) -> int:
    """Coordinate of the idempotent generator of summand k at its vertex."""
    s = summands[k]
    return summand_offsets(A, summands)[k][s]  # the idempotent is the first basis path


def yoneda_map(P: Representation, M: Representation, images: Sequence) -> ModuleMap:
    """Map from a projective sum sending the k-th generator to images[k] in M."""
    A = P.algebra
    if P.summands is None:
        raise ValueError("source must be a standard sum of projectives")
    comps = {v: [[ZERO] * P.dims[v] for _ in range(M.dims[v])] for v in A.vertices}
    offs = summand_offsets(A, P.summands)
    for k, s in enumerate(P.summands):
        m = tuple(to_rational(x) for x in images[k])
        for v in A.vertices:
            for n, idx in enumerate(A.pair_basis(s, v)):
                col = M.path_matrix(A.basis[idx]).apply(m)
                for r in range(M.dims[v]):
                    comps[v][r][offs[k][v] + n] = col[r]
    return ModuleMap(P, M, {v: Matrix(M.dims[v], P.dims[v], comps[v]) for v in A.vertices})


def generator_images(f: ModuleMap) -> list:
    """Images of the generators of a projective-sum source."""
    P = f.source
    A = P.algebra
    out = []
    for k, s in enumerate(P.summands):
        g = generator_index(A, P.summands, k)
        out.append(f.comps[s].column(g))
    return out


# -- hom spaces ---------------------------------------------------------------------


def _hom_constraints(M: Representation, N: Representation) -> Matrix:
    A = M.algebra
    vs = A.vertices
    offsets = {}
    pos = 0
    for v in vs:
        offsets[v] = pos
        pos += N.dims[v] * M.dims[v]
    nvars = pos
    rows = []
    for a in A.quiver.arrows:
        s, t = a.source, a.target
        Na, Ma = N.maps[a.name], M.maps[a.name]
        # (N_a f_s - f_t M_a)[r, c] = 0
        for r in range(N.dims[t]):
            for c in range(M.dims[s]):
                row = [ZERO] * nvars
                for k in range(N.dims[s]):
                    x = Na[r, k]
                    if x:
                        row[offsets[s] + k * M.dims[s] + c] += x
                for k in range(M.dims[t]):
                    x = Ma[k, c]
                    if x:
                        row[offsets[t] + r * M.dims[t] + k] -= x
                if any(row):
                    rows.append(row)
    return Matrix(len(rows), nvars, rows)


def hom_space(M: Representation, N: Representation) -> list:
    """Basis of the intertwiners M -> N."""
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("hom_space between modules over different algebras")
    C = _hom_constraints(M, N)
    return [map_from_vector(M, N, v) for v in kernel_basis(C)]


def hom_dim(M: Representation, N: Representation) -> int:
    C = _hom_constraints(M, N)
    return C.cols - rank(C)


def random_combination(basis: Sequence[ModuleMap], rng: random.Random, M=None, N=None) -> ModuleMap:
    if not basis:
        return zero_map(M, N)
    acc = None
    for f in basis:
        t = f.scale(rng.randint(-COEFF_RANGE, COEFF_RANGE))
        acc = t if acc is None else acc + t
    return acc


# -- sub- and quotient modules ---------------------------------------------------------


def submodule(M: Representation, spaces: dict, label: str = "") -> tuple:
    """Subrepresentation spanned by the given per-vertex vectors; (U, inclusion)."""
    A = M.algebra
    bases = {v: span_basis(spaces.get(v, []), M.dims[v]) for v in A.vertices}
    dims = {v: len(b) for v, b in bases.items()}
    maps = {}
    for a in A.quiver.arrows:
        cols = []
        for b in bases[a.source]:
            img = M.maps[a.name].apply(b)
            c = coordinates(bases[a.target], img, M.dims[a.target])
            if c is None:
                raise ValueError(f"subspace is not closed under arrow {a.name}")
            cols.append(c)
        maps[a.name] = Matrix.from_columns(cols, dims[a.target])
    U = Representation(A, dims, maps, label=label)
    inc = ModuleMap(U, M, {v: Matrix.from_columns(bases[v], M.dims[v]) for v in A.vertices})
    return U, inc


def quotient(M: Representation, spaces: dict, label: str = "") -> tuple:
    """M / U for a subrepresentation given by per-vertex vectors; (Q, projection)."""
    A = M.algebra
    sub = {v: span_basis(spaces.get(v, []), M.dims[v]) for v in A.vertices}
    comp = {v: complement_basis(sub[v], M.dims[v]) for v in A.vertices}
    proj = {}
    for v in A.vertices:
        n = M.dims[v]
        if n == 0:
            proj[v] = Matrix.zeros(len(comp[v]), 0)
            continue
        change = Matrix.from_columns(sub[v] + comp[v], n).inverse()
        k = len(sub[v])
        proj[v] = change.submatrix(range(k, n), range(n))
    dims = {v: len(comp[v]) for v in A.vertices}
    maps = {}
    for a in A.quiver.arrows:
        lift = Matrix.from_columns(comp[a.source], M.dims[a.source])
        maps[a.name] = proj[a.target] @ M.maps[a.name] @ lift
    Q = Representation(A, dims, maps, label=label)
    return Q, ModuleMap(M, Q, proj)


def kernel(f: ModuleMap) -> tuple:
    spaces = {v: kernel_basis(m) for v, m in f.comps.items()}
    return submodule(f.source, spaces, label="ker")


def image(f: ModuleMap) -> tuple:
    spaces = {v: [m.column(j) for j in range(m.cols)] for v, m in f.comps.items()}
    return submodule(f.target, spaces, label="im")


def cokernel(f: ModuleMap) -> tuple:
    spaces = {v: [m.column(j) for j in range(m.cols)] for v, m in f.comps.items()}
    return quotient(f.target, spaces, label="coker")


def restrict(f: ModuleMap, inc_src: ModuleMap, inc_tgt: ModuleMap) -> ModuleMap:
    """f restricted to sub-objects: the map U -> V with inc_tgt ∘ g = f ∘ inc_src."""
    comps = {}
    fu = f @ inc_src
    for v in f.algebra.vertices:
        B = inc_tgt.comps[v]
        cols = []
        for j in range(fu.comps[v].cols):
            c = coordinates([B.column(k) for k in range(B.cols)], fu.comps[v].column(j), B.rows)
            if c is None:
                raise ValueError("map does not restrict to the given submodules")
            cols.append(c)
        comps[v] = Matrix.from_columns(cols, B.cols)
    return ModuleMap(inc_src.source, inc_tgt.source, comps)


def induced_on_quotients(f: ModuleMap, pi_src: ModuleMap, pi_tgt: ModuleMap) -> ModuleMap:
    """The map Q1 -> Q2 with g ∘ pi_src = pi_tgt ∘ f (f must preserve the kernels)."""
    comps = {}
    for v in f.algebra.vertices:
        # pi_src has a right inverse given by lifting coordinates of the complement
        P = pi_src.comps[v]
        sect_cols = []
        for j in range(P.rows):
            e = [ZERO] * P.rows
            e[j] = ONE
            x = solve(P, e)
            sect_cols.append(x)
        S = Matrix.from_columns(sect_cols, P.cols)
        comps[v] = pi_tgt.comps[v] @ f.comps[v] @ S
    return ModuleMap(pi_src.target, pi_tgt.target, comps)


# -- radical / socle -----------------------------------------------------------------


def _rad_spaces(M: Representation, spaces: dict) -> dict:
    """rad of the submodule given by spaces: sum of images of arrows."""
    A = M.algebra
    out = {v: [] for v in A.vertices}
    for a in A.quiver.arrows:
        for b in spaces[a.source]:
            out[a.target].append(M.maps[a.name].apply(b))
    return {v: span_basis(out[v], M.dims[v]) for v in A.vertices}


def _full(M: Representation) -> dict:
    return {v: span_basis([tuple(ONE if i == j else ZERO for i in range(d)) for j in range(d)], d)
            for v, d in M.dims.items()}


def radical(M: Representation) -> tuple:
    return submodule(M, _rad_spaces(M, _full(M)), label=f"rad {M.label}")


def radical_filtration(M: Representation) -> list:
    """[M, rad M, rad^2 M, ..., 0] as per-vertex span bases."""
    cur = _full(M)
    out = [cur]
    while any(cur.values()):
        cur = _rad_spaces(M, cur)
        out.append(cur)
    return out


def socle_filtration(M: Representation) -> list:
    """[0, soc M, soc^2 M, ..., M] as per-vertex span bases."""
    A = M.algebra
    cur = {v: [] for v in A.vertices}
    out = [cur]
    total = M.dim
    while sum(len(b) for b in cur.values()) < total:
        # soc^{k+1} = {m : a(m) in soc^k for every arrow a}
        nxt = {}
        for v in A.vertices:
            d = M.dims[v]
            blocks = []
            for a in A.quiver.arrows_from(v):
                tgt = cur[a.target]
                comp = complement_basis(tgt, M.dims[a.target])
                # coordinates modulo soc^k: project onto complement
                if not comp:
                    continue
                n = M.dims[a.target]
                change = Matrix.from_columns(tgt + comp, n).inverse()
                proj = change.submatrix(range(len(tgt), n), range(n))
                blocks.append(proj @ M.maps[a.name])
            if blocks:
                big = blocks[0]
                for b in blocks[1:]:
                    big = big.vstack(b)
                nxt[v] = span_basis(kernel_basis(big), d)
            else:
                nxt[v] = _full(M)[v]
        if sum(len(b) for b in nxt.values()) == sum(len(b) for b in cur.values()):
            raise RuntimeError("socle series stalled")
        cur = nxt
        out.append(cur)
    return out


def _layers(filtration: list, vertices: Sequence[str]) -> list:
    layers = []
    for big, small in zip(filtration, filtration[1:]):
        layers.append({v: len(big[v]) - len(small[v]) for v in vertices
                       if len(big[v]) - len(small[v])})
    return layers


def radical_layers(M: Representation) -> list:
    """Top-down layers rad^k M / rad^{k+1} M as {vertex: multiplicity}."""
    return _layers(radical_filtration(M), M.algebra.vertices)


def socle_layers(M: Representation) -> list:
    """Socle layers listed top-down (the socle itself is last)."""
    f = socle_filtration(M)
    return _layers(list(reversed(f)), M.algebra.vertices)


loewy_layers = radical_layers


def loewy_length(M: Representation) -> int:
    return len(radical_layers(M))


def composition_length(M: Representation) -> int:
    return M.dim  # all simples are one-dimensional over a basic algebra


def top(M: Representation) -> dict:
    layers = radical_layers(M)
    return layers[0] if layers else {}


def socle(M: Representation) -> dict:
    f = socle_filtration(M)
    return {v: len(b) for v, b in f[1].items() if b} if len(f) > 1 else {}


def format_layers(layers: list) -> list:
    out = []
    for layer in layers:
        parts = []
        for v, m in layer.items():
            parts += [v] * m
        out.append(parts)
    return out


# -- covers, traces ---------------------------------------------------------------


def top_generators(M: Representation) -> list:
    """(vertex, vector) pairs whose images span M modulo its radical."""
    rad = _rad_spaces(M, _full(M))
    gens = []
    for v in M.algebra.vertices:
        for c in complement_basis(rad[v], M.dims[v]):
            gens.append((v, c))
    return gens


def projective_cover(M: Representation) -> ModuleMap:
    """Minimal surjection from a standard projective sum onto M."""
    A = M.algebra
    gens = top_generators(M)
    P = projective_sum(A, [v for v, _ in gens])
    return yoneda_map(P, M, [g for _, g in gens])


def trace_submodule(generators: Sequence[Representation], M: Representation) -> tuple:
    """Sum of images of all maps from the generators into M; (U, inclusion)."""
    A = M.algebra
    spaces = {v: [] for v in A.vertices}
    for G in generators:
        if G.algebra is not A:
            raise AlgebraMismatch("trace over a different algebra")
        for f in hom_space(G, M):
            for v, m in f.comps.items():
                spaces[v].extend(m.column(j) for j in range(m.cols))
    return submodule(M, spaces, label=f"tr({M.label})")


# -- isomorphism ---------------------------------------------------------------------


@dataclass
class IsoResult:
    verdict: bool
    witness: Optional[ModuleMap] = None
    reason: str = ""

    def __bool__(self):
        return self.verdict


def _fallback_grid(n_vars: int, degree: int):
    return product(range(degree + 1), repeat=n_vars)


def is_isomorphic(M: Representation, N: Representation, seed: int = 0) -> IsoResult:
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("is_isomorphic over different algebras")
    if M.dim_vector() != N.dim_vector():
        return IsoResult(False, reason=f"dimension vectors differ: {M.dim_vector()} vs {N.dim_vector()}")
    if M.dim == 0:
        return IsoResult(True, identity_map(M) if M is N else ModuleMap(M, N, {}), "both zero")
    basis = hom_space(M, N)
    if not basis:
        return IsoResult(False, reason="Hom(M, N) = 0")
    rng = random.Random(seed)
    for _ in range(ISO_TRIALS):
        f = random_combination(basis, rng)
        if f.is_iso():
            return IsoResult(True, f, "random combination invertible")
    if len(basis) > FALLBACK_MAX_DIM:
        raise Undetermined(f"no invertible map found in {ISO_TRIALS} trials; "
                           f"Hom has dimension {len(basis)} > {FALLBACK_MAX_DIM}")
    # det of a generic combination has degree <= dim M in every variable
    for point in _fallback_grid(len(basis), M.dim):
        f = None
        for c, g in zip(point, basis):
            t = g.scale(c)
            f = t if f is None else f + t
        if f.is_iso():
            return IsoResult(True, f, "fallback grid point invertible")
    return IsoResult(False, reason="determinant vanishes on the full interpolation grid")


# -- opposite algebra and duality -----------------------------------------------------


_OPPOSITES: dict = {}


def opposite(A: PresentedAlgebra) -> PresentedAlgebra:
    """A^op: reversed arrows and reversed relation words (cached, op(op(A)) is A)."""
    key = id(A)
    if key in _OPPOSITES:
        return _OPPOSITES[key][1]
    q = A.quiver
    qop = Quiver(q.vertices, tuple(Arrow(a.name, a.target, a.source) for a in q.arrows))
    rels = []
    for r in A.relations:
        terms = []
        for c, p in r.terms:
            terms.append((c, qop.make_path(tuple(reversed(p.arrows)))))
        rels.append(Relation(tuple(terms)))
    Aop = validate(qop, rels, name=f"{A.name}^op")
    _OPPOSITES[key] = (A, Aop)
    _OPPOSITES[id(Aop)] = (Aop, A)
    return Aop


def dual(M: Representation) -> Representation:
    """Vector-space dual, a representation of the opposite algebra."""
    Aop = opposite(M.algebra)
    maps = {name: m.transpose() for name, m in M.maps.items()}
    return Representation(Aop, dict(M.dims), maps, label=f"D({M.label})")


# -- text serialisation ---------------------------------------------------------------


def format_representation(M: Representation) -> str:
    lines = [f"# representation {M.label}".rstrip()]
    for v in M.algebra.vertices:
        lines.append(f"dim {v} {M.dims[v]}")
    for a in M.algebra.quiver.arrows:
        m = M.maps[a.name]
        body = "; ".join(" ".join(fmt(x) for x in row) for row in m.tolist())
        lines.append(f"map {a.name} [{body}]")
    return "\n".join(lines) + "\n"


def parse_representation(A: PresentedAlgebra, text: str) -> Representation:
    dims, raw = {}, {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        kw, rest = line.split(None, 1)
        if kw == "dim":
            v, d = rest.split()
            dims[v] = int(d)
        elif kw == "map":
            name, body = rest.split(None, 1)
            body = body.strip()[1:-1].strip()
            raw[name] = [r.split() for r in body.split(";")] if body else []
        else:
            raise ValueError(f"unknown statement {kw!r}")
    maps = {}
    for a in A.quiver.arrows:
        rows = raw.get(a.name)
        r, c = dims.get(a.target, 0), dims.get(a.source, 0)
        if rows is None or r == 0 or c == 0:
            maps[a.name] = Matrix.zeros(r, c)
        else:
            maps[a.name] = Matrix(r, c, [[Fraction(x) for x in row] for row in rows])
    M = Representation(A, dims, maps)
    if not M.relations_hold():
        raise ValueError("matrices do not satisfy the relations")
    return M
