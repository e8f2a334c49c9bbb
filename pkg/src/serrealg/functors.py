"""Nakayama functor, symmetrizing forms and partial coapproximation.

Both functors are right exact, so they are determined by their values on
projective modules and maps between them; a general module is handled
through its minimal projective presentation P1 -> P0 -> M -> 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .linalg import ONE, ZERO, Matrix, kernel_basis, solve
from .modules import (FALLBACK_MAX_DIM, ISO_TRIALS, COEFF_RANGE, ModuleMap,
                      Representation, Undetermined, cokernel, generator_images,
                      induced_on_quotients, injective, injective_sum, is_isomorphic,
                      kernel, projective, projective_cover, restrict, socle,
                      summand_offsets, trace_submodule, yoneda_map, zero_module)
from .quiver import PresentedAlgebra


class NotSelfInjective(ValueError):
    pass


# -- presentations and lifting ----------------------------------------------------------


@dataclass
class Presentation:
    """P1 --d--> P0 --cover--> M -> 0, both P's standard projective sums."""

    module: Representation
    d: ModuleMap
    cover: ModuleMap


def minimal_presentation(M: Representation) -> Presentation:
    pi0 = projective_cover(M)
    K, inc = kernel(pi0)
    pi1 = projective_cover(K)
    return Presentation(M, inc @ pi1, pi0)


def lift(phi: ModuleMap, surj: ModuleMap) -> ModuleMap:
    """psi with surj ∘ psi = phi, for phi out of a projective sum."""
    Q = phi.source
    imgs = []
    for k, u in enumerate(Q.summands):
        y = generator_images(phi)[k]
        x = solve(surj.comps[u], y)
        if x is None:
            raise ValueError("map does not factor through the given surjection")
        imgs.append(x)
    return yoneda_map(Q, surj.source, imgs)


# -- right exact functors ------------------------------------------------------------------


@dataclass
class FunctorValue:
    name: str
    module: Representation
    value: Representation
    presentation: Presentation
    proj: ModuleMap  # F(P0) -> F(M)
    f_p0: Representation = None


class RightExactFunctor:
    name = "F"

    def __init__(self, A: PresentedAlgebra):
        self.A = A
        self._cache: dict = {}

    def on_projective(self, P: Representation):
        """(F(P), extra) for a standard projective sum P."""
        raise NotImplementedError

    def on_projective_map(self, f: ModuleMap, FP: tuple, FQ: tuple) -> ModuleMap:
        raise NotImplementedError

    def _proj(self, P: Representation):
        key = id(P)
        if key not in self._cache:
            self._cache[key] = (P, self.on_projective(P))
        return self._cache[key][1]

    def apply(self, M: Representation) -> FunctorValue:
        pres = minimal_presentation(M)
        F0 = self._proj(pres.cover.source)
        F1 = self._proj(pres.d.source)
        Fd = self.on_projective_map(pres.d, F1, F0)
        val, q = cokernel(Fd)
        val.label = f"{self.name}({M.label})"
        return FunctorValue(self.name, M, val, pres, q, F0[0])

    def apply_map(self, g: ModuleMap, FM: FunctorValue, FN: FunctorValue) -> ModuleMap:
        """F(g): F(M) -> F(N) for g: M -> N, using the stored presentations."""
        h0 = lift(g @ FM.presentation.cover, FN.presentation.cover)
        Fh0 = self.on_projective_map(h0, self._proj(h0.source), self._proj(h0.target))
        return induced_on_quotients(Fh0, FM.proj, FN.proj)

    def __call__(self, M: Representation) -> Representation:
        return self.apply(M).value


def _element_blocks(f: ModuleMap) -> dict:
    """For f between projective sums: (l, k) -> element x of e_{w_l} A e_{u_k}
    with f(generator_k) having component x in summand l."""
    A = f.algebra
    P, Q = f.source, f.target
    offs = summand_offsets(A, Q.summands)
    imgs = generator_images(f)
    out = {}
    for k, u in enumerate(P.summands):
        vec = imgs[k]
        for l, w in enumerate(Q.summands):
            idxs = A.pair_basis(w, u)
            o = offs[l][u]
            x = {idx: vec[o + n] for n, idx in enumerate(idxs) if vec[o + n]}
            if x:
                out[(l, k)] = x
    return out


class Nakayama(RightExactFunctor):
    """N = Hom_A(-, A)^*, sending P(i) to I(i)."""

    name = "N"

    def on_projective(self, P):
        return injective_sum(self.A, list(P.summands)), None

    def on_projective_map(self, f, FP, FQ):
        A = self.A
        P, Q = f.source, f.target
        IP, IQ = FP[0], FQ[0]
        blocks = _element_blocks(f)
        comps = {}
        for z in A.vertices:
            rows = [[ZERO] * IP.dims[z] for _ in range(IQ.dims[z])]
            roff = 0
            for l, w in enumerate(Q.summands):
                rdim = A.pair_dim(z, w)
                coff = 0
                for k, u in enumerate(P.summands):
                    cdim = A.pair_dim(z, u)
                    x = blocks.get((l, k))
                    if x and rdim and cdim:
                        # (e_z A e_w) -> (e_z A e_u), q -> q x ; N(f) is its transpose
                        src, tgt = A.pair_basis(z, w), A.pair_basis(z, u)
                        pos = {idx: n for n, idx in enumerate(tgt)}
                        for r, qi in enumerate(src):
                            for idx, c in A.multiply({qi: ONE}, x).items():
                                rows[roff + r][coff + pos[idx]] += c
                    coff += cdim
                roff += rdim
            comps[z] = Matrix(IQ.dims[z], IP.dims[z], rows)
        return ModuleMap(IP, IQ, comps)


def nakayama(A: PresentedAlgebra, M: Representation) -> Representation:
    return Nakayama(A)(M)


# -- projective-injectives and coapproximation --------------------------------------------


def socle_vertex(P: Representation) -> Optional[str]:
    s = socle(P)
    if len(s) == 1 and sum(s.values()) == 1:
        return next(iter(s))
    return None


def projective_injective_vertices(A: PresentedAlgebra, seed: int = 0) -> list:
    out = []
    for i in A.vertices:
        P = projective(A, i)
        j = socle_vertex(P)
        if j is not None and is_isomorphic(P, injective(A, j), seed=seed).verdict:
            out.append(i)
    return out


class Coapproximation(RightExactFunctor):
    """C: P -> trace of the chosen projective-injectives in P."""

    name = "C"

    def __init__(self, A, projinj: Optional[Sequence[str]] = None, seed: int = 0):
        super().__init__(A)
        if projinj is None:
            projinj = projective_injective_vertices(A, seed=seed)
        self.projinj = list(projinj)
        self._gens = [projective(A, v) for v in self.projinj]

    def on_projective(self, P):
        if P.dim == 0 or not self._gens:
            Z = zero_module(self.A)
            return Z, ModuleMap(Z, P, {})
        return trace_submodule(self._gens, P)

    def on_projective_map(self, f, FP, FQ):
        return restrict(f, FP[1], FQ[1])


def coapprox(A: PresentedAlgebra, M: Representation, projinj: Optional[Sequence[str]] = None,
             seed: int = 0) -> Representation:
    return Coapproximation(A, projinj, seed)(M)


@dataclass
class C2Report:
    verdicts: dict  # vertex -> IsoResult
    projinj: list

    @property
    def ok(self) -> bool:
        return all(r.verdict for r in self.verdicts.values())


def verify_c_squared_is_nakayama(A: PresentedAlgebra, projinj: Optional[Sequence[str]] = None,
                                 seed: int = 0) -> C2Report:
    C = Coapproximation(A, projinj, seed)
    N = Nakayama(A)
    out = {}
    for i in A.vertices:
        P = projective(A, i)
        lhs = C(C(P))
        rhs = N(P)
        out[i] = is_isomorphic(lhs, rhs, seed=seed)
    return C2Report(out, C.projinj)


# -- symmetric algebras ------------------------------------------------------------------


@dataclass
class BimoduleForm:
    """A linear functional on A, given on the path basis."""

    algebra: PresentedAlgebra
    values: tuple

    def __call__(self, x: dict):
        return sum((c * self.values[k] for k, c in x.items()), ZERO)

    def gram(self) -> Matrix:
        A = self.algebra
        return Matrix(A.dim, A.dim, [[self(A.basis_product(i, j)) for j in range(A.dim)]
                                     for i in range(A.dim)])

    def is_trace(self) -> bool:
        A = self.algebra
        return all(self(A.basis_product(i, j)) == self(A.basis_product(j, i))
                   for i in range(A.dim) for j in range(A.dim))

    def is_nondegenerate(self) -> bool:
        return self.gram().is_invertible()

    def describe(self) -> dict:
        return {self.algebra.basis[k].word(): v for k, v in enumerate(self.values) if v}


def _product_table(A: PresentedAlgebra) -> list:
    return [[A.basis_product(i, j) for j in range(A.dim)] for i in range(A.dim)]


def trace_forms(A: PresentedAlgebra, table=None) -> list:
    """Basis of the functionals with f(xy) = f(yx) on all basis pairs."""
    table = table or _product_table(A)
    n = A.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            row = [ZERO] * n
            for k, c in table[i][j].items():
                row[k] += c
            for k, c in table[j][i].items():
                row[k] -= c
            if any(row):
                rows.append(row)
    return kernel_basis(Matrix(len(rows), n, rows))


def _gram_from(table, values) -> Matrix:
    n = len(values)
    return Matrix(n, n, [[sum((c * values[k] for k, c in table[i][j].items()), ZERO)
                          for j in range(n)] for i in range(n)])


def find_symmetrizing_form(A: PresentedAlgebra, seed: int = 0) -> Optional[BimoduleForm]:
    """A nondegenerate trace form, or None when none exists.

    Raises Undetermined when the random search fails on a solution space
    too large for the exhaustive grid fallback.
    """
    table = _product_table(A)
    sols = trace_forms(A, table)
    if not sols:
        return None
    rng = random.Random(seed)
    n = A.dim

    def combo(coeffs):
        return tuple(sum((c * s[k] for c, s in zip(coeffs, sols)), ZERO) for k in range(n))

    for _ in range(ISO_TRIALS):
        vals = combo([rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in sols])
        if _gram_from(table, vals).is_invertible():
            return BimoduleForm(A, vals)
    if len(sols) > FALLBACK_MAX_DIM:
        raise Undetermined(f"no nondegenerate trace form in {ISO_TRIALS} trials; "
                           f"solution space has dimension {len(sols)}")
    # det of the Gram matrix has degree <= dim A in each coefficient
    for point in product(range(n + 1), repeat=len(sols)):
        vals = combo(point)
        if _gram_from(table, vals).is_invertible():
            return BimoduleForm(A, vals)
    return None


def is_symmetric(A: PresentedAlgebra, seed: int = 0) -> bool:
    return find_symmetrizing_form(A, seed) is not None


def nakayama_permutation(A: PresentedAlgebra, seed: int = 0) -> dict:
    """i -> j with P(i) ≅ I(j); raises NotSelfInjective otherwise."""
    perm = {}
    for i in A.vertices:
        P = projective(A, i)
        j = socle_vertex(P)
        if j is None or not is_isomorphic(P, injective(A, j), seed=seed).verdict:
            raise NotSelfInjective(f"P({i}) is not injective: the algebra is not self-injective")
        perm[i] = j
    return perm
