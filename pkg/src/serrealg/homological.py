"""Complexes, projective resolutions, Ext and the derived Nakayama functor.

Cohomological indexing throughout: d^n : X^n -> X^{n+1}.  The Hom complex
uses Hom^n(X, Y) = prod_p Hom(X^p, Y^{p+n}) with differential
D(f) = d_Y ∘ f - (-1)^n f ∘ d_X, and shifting by k multiplies the
differential by (-1)^k.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .functors import Nakayama
from .linalg import ONE, ZERO, Matrix, kernel_basis, rank, solve
from .modules import (ModuleMap, Representation, direct_sum, generator_images,
                      hom_space, injective, kernel, map_from_vector,
                      projective_cover, projective_sum, yoneda_map, zero_map, zero_module)
from .quiver import PresentedAlgebra

INJECTIVE_PD_CAP = 16


class InfiniteProjectiveDimension(RuntimeError):
    """Some injective module did not resolve within the cap."""


@dataclass(eq=False)
class ChainComplex:
    algebra: PresentedAlgebra
    terms: dict   # degree -> Representation
    diffs: dict   # degree n -> ModuleMap X^n -> X^{n+1}
    label: str = ""

    def __post_init__(self):
        self.terms = {n: M for n, M in self.terms.items() if M.dim > 0}
        for n in list(self.diffs):
            if n not in self.terms or n + 1 not in self.terms:
                del self.diffs[n]

    def term(self, n: int) -> Representation:
        if n in self.terms:
            return self.terms[n]
        # one zero object per degree so that composites stay composable
        zeros = self.__dict__.setdefault("_zeros", {})
        if n not in zeros:
            zeros[n] = zero_module(self.algebra)
        return zeros[n]

    def diff(self, n: int) -> ModuleMap:
        if n in self.diffs:
            return self.diffs[n]
        return zero_map(self.term(n), self.term(n + 1))

    @property
    def degrees(self) -> list:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_perfect(self) -> bool:
        return all(M.summands is not None for M in self.terms.values())

    def d_squared_zero(self) -> bool:
        for n in self.degrees:
            if n in self.diffs and n + 1 in self.diffs:
                if not (self.diffs[n + 1] @ self.diffs[n]).is_zero():
                    return False
        return True

    def shift(self, k: int) -> "ChainComplex":
        """X[k]: (X[k])^n = X^{n+k}, differential (-1)^k d."""
        sign = -1 if k % 2 else 1
        return ChainComplex(self.algebra, {n - k: M for n, M in self.terms.items()},
                            {n - k: (d.scale(sign) if sign < 0 else d) for n, d in self.diffs.items()},
                            label=f"{self.label}[{k}]")

    def cohomology_dims(self) -> dict:
        out = {}
        for n in self.degrees:
            ker = sum(self.diff(n).comps[v].cols - rank(self.diff(n).comps[v])
                      for v in self.algebra.vertices)
            im = sum(rank(self.diff(n - 1).comps[v]) for v in self.algebra.vertices) \
                if n - 1 in self.diffs else 0
            out[n] = ker - im
        return out

    def euler_dim_vector(self) -> tuple:
        vs = self.algebra.vertices
        acc = [0] * len(vs)
        for n, M in self.terms.items():
            for i, v in enumerate(vs):
                acc[i] += (-1) ** (n % 2) * M.dims[v]
        return tuple(acc)

    def __repr__(self):
        body = ", ".join(f"{n}:{self.terms[n].label or self.terms[n].dim_vector()}" for n in self.degrees)
        return f"ChainComplex({body})"


def stalk(M: Representation, degree: int = 0) -> ChainComplex:
    return ChainComplex(M.algebra, {degree: M}, {}, label=f"{M.label}[{-degree}]")


# -- resolutions ---------------------------------------------------------------------


@dataclass
class Resolution:
    """... -> P_1 -> P_0 -> M, with maps d_k : P_k -> P_{k-1}."""

    module: Representation
    terms: list
    maps: list        # maps[k] : P_{k+1} -> P_k
    augmentation: ModuleMap
    exact: bool       # False when truncated at the cap with a nonzero syzygy

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def as_complex(self) -> ChainComplex:
        A = self.module.algebra
        terms = {-k: P for k, P in enumerate(self.terms)}
        diffs = {-(k + 1): d for k, d in enumerate(self.maps)}
        return ChainComplex(A, terms, diffs, label=f"res({self.module.label})")


def _padded_cover(K: Representation, rng: Optional[random.Random]) -> ModuleMap:
    """Projective cover of K, optionally plus one random extra projective summand."""
    pi = projective_cover(K)
    if rng is None:
        return pi
    A = K.algebra
    v = rng.choice(A.vertices)
    P = projective_sum(A, list(pi.source.summands) + [v])
    imgs = generator_images(pi) if pi.source.summands else []
    extra = tuple(rng.randint(-5, 5) for _ in range(K.dims[v]))
    return yoneda_map(P, K, list(imgs) + [extra])


def projective_resolution(M: Representation, cap: int = 8, padded_seed: Optional[int] = None) -> Resolution:
    """Minimal resolution up to P_cap; ``padded_seed`` adds random redundant summands."""
    rng = random.Random(padded_seed) if padded_seed is not None else None
    pi = _padded_cover(M, rng)
    terms = [pi.source]
    maps = []
    K, inc = kernel(pi)
    exact = K.dim == 0
    k = 0
    while not exact and k < cap:
        cov = _padded_cover(K, rng)
        d = inc @ cov
        terms.append(cov.source)
        maps.append(d)
        K, inc = kernel(d)
        exact = K.dim == 0
        k += 1
    return Resolution(M, terms, maps, pi, exact)


def projective_dimension(M: Representation, cap: int = INJECTIVE_PD_CAP) -> Optional[int]:
    res = projective_resolution(M, cap)
    return res.length if res.exact else None


# -- Hom complexes --------------------------------------------------------------------


class HomBasis:
    """Basis of Hom(M, N) with a coordinate map."""

    def __init__(self, M: Representation, N: Representation):
        self.M, self.N = M, N
        self.yoneda = M.summands is not None
        if self.yoneda:
            self.slots = [(k, N.dims[u]) for k, u in enumerate(M.summands)]
            self.dim = sum(d for _, d in self.slots)
        else:
            self.maps = hom_space(M, N)
            self.dim = len(self.maps)
            if self.dim:
                self._mat = Matrix.from_columns([f.vector() for f in self.maps], len(self.maps[0].vector()))

    def element(self, coords: Sequence) -> ModuleMap:
        if self.yoneda:
            imgs, pos = [], 0
            for _, d in self.slots:
                imgs.append(tuple(coords[pos:pos + d]))
                pos += d
            return yoneda_map(self.M, self.N, imgs)
        return map_from_vector(self.M, self.N, Matrix.from_columns(
            [f.vector() for f in self.maps], len(self.maps[0].vector())).apply(coords)) \
            if self.dim else zero_map(self.M, self.N)

    def coords(self, f: ModuleMap) -> tuple:
        if self.yoneda:
            out = []
            for img in generator_images(f):
                out.extend(img)
            return tuple(out)
        if not self.dim:
            return ()
        c = solve(self._mat, f.vector())
        if c is None:
            raise ValueError("map is not in the Hom space")
        return c


def _unit(n: int, j: int) -> list:
    e = [ZERO] * n
    e[j] = ONE
    return e


class HomComplex:
    """Total Hom complex Hom^•(X, Y) and its cohomology dimensions."""

    def __init__(self, X: ChainComplex, Y: ChainComplex):
        self.X, self.Y = X, Y
        self._bases: dict = {}

    def _basis(self, p: int, q: int) -> HomBasis:
        key = (p, q)
        if key not in self._bases:
            self._bases[key] = HomBasis(self.X.term(p), self.Y.term(q))
        return self._bases[key]

    def components(self, n: int) -> list:
        return [p for p in self.X.degrees if p + n in self.Y.terms]

    def degree_dim(self, n: int) -> int:
        return sum(self._basis(p, p + n).dim for p in self.components(n))

    def differential(self, n: int) -> Matrix:
        """Matrix of D : Hom^n -> Hom^{n+1}."""
        src = [(p, self._basis(p, p + n)) for p in self.components(n)]
        tgt = [(p, self._basis(p, p + n + 1)) for p in self.components(n + 1)]
        tdim = sum(b.dim for _, b in tgt)
        sign = -1 if n % 2 else 1
        cols = []
        for p, b in src:
            for j in range(b.dim):
                f = b.element(_unit(b.dim, j))   # X^p -> Y^{p+n}
                col = []
                for p2, b2 in tgt:             # component X^{p2} -> Y^{p2+n+1}
                    acc = zero_map(self.X.term(p2), self.Y.term(p2 + n + 1))
                    if p2 == p and p + n in self.Y.diffs:
                        acc = acc + (self.Y.diffs[p + n] @ f)
                    if p2 + 1 == p and p2 in self.X.diffs:
                        g = f @ self.X.diffs[p2]
                        acc = acc + (g.scale(-sign))
                    col.extend(b2.coords(acc))
                cols.append(col)
        return Matrix.from_columns(cols, tdim) if cols else Matrix(tdim, 0)

    def h_dim(self, n: int) -> int:
        Dn = self.differential(n)
        Dm = self.differential(n - 1)
        return (Dn.cols - rank(Dn)) - rank(Dm)


def hom_h0(X: ChainComplex, Y: ChainComplex) -> int:
    """dim H^0 Hom^•(X, Y); the derived Hom when X is perfect."""
    return HomComplex(X, Y).h_dim(0)


# -- Ext -------------------------------------------------------------------------------


def ext(M: Representation, N: Representation, n: int, resolution: Optional[Resolution] = None) -> int:
    if n < 0:
        raise ValueError("degree must be non-negative")
    res = resolution or projective_resolution(M, cap=n + 1)
    if res.length < n + 1 and not res.exact:
        raise ValueError("resolution too short for this degree")
    X = res.as_complex()
    return HomComplex(X, stalk(N)).h_dim(n)


# -- derived Nakayama ------------------------------------------------------------------


def _apply_termwise(F: Nakayama, X: ChainComplex) -> ChainComplex:
    terms, vals = {}, {}
    for n, P in X.terms.items():
        vals[n] = (P, F.on_projective(P))
        terms[n] = vals[n][1][0]
    diffs = {n: F.on_projective_map(d, vals[n][1], vals[n + 1][1]) for n, d in X.diffs.items()}
    return ChainComplex(X.algebra, terms, diffs, label=f"N({X.label})")


def nakayama_termwise(X: ChainComplex) -> ChainComplex:
    if not X.is_perfect():
        raise ValueError("termwise Nakayama needs a complex of projectives")
    return _apply_termwise(Nakayama(X.algebra), X)


@dataclass
class PerfectReplacement:
    complex: ChainComplex
    quasi_iso: dict  # degree -> ModuleMap P^n -> Z^n


def perfect_replacement(Z: ChainComplex, cap: int = INJECTIVE_PD_CAP) -> PerfectReplacement:
    """Bounded complex of projectives with a quasi-isomorphism onto Z.

    Built top-down: P^k covers the module of pairs (z, p) in Z^k ⊕ P^{k+1}
    with d p = 0 and phi(p) = d z.
    """
    A = Z.algebra
    if Z.is_zero():
        return PerfectReplacement(ChainComplex(A, {}, {}), {})
    top, bottom = max(Z.degrees), min(Z.degrees)
    P: dict = {}
    dP: dict = {}
    phi: dict = {}
    k = top
    while True:
        Zk = Z.term(k)
        Pk1 = P.get(k + 1) or zero_module(A)
        Pk2 = P.get(k + 2) or zero_module(A)
        Zk1 = Z.term(k + 1)
        src, s_inc, s_proj = direct_sum([Zk, Pk1])
        tgt, t_inc, t_proj = direct_sum([Pk2, Zk1])
        d_p = dP.get(k + 1) or zero_map(Pk1, Pk2)
        phi1 = phi.get(k + 1) or zero_map(Pk1, Zk1)
        dz = Z.diffs.get(k) or zero_map(Zk, Zk1)
        psi = (t_inc[0] @ d_p @ s_proj[1]) + (t_inc[1] @ phi1 @ s_proj[1]) \
            + (t_inc[1] @ dz @ s_proj[0]).scale(-1)
        W, w_inc = kernel(psi)
        if W.dim == 0:
            if k <= bottom:
                break
            k -= 1
            continue
        if k < bottom - cap:
            raise InfiniteProjectiveDimension(
                f"perfect replacement did not terminate {cap} steps below degree {bottom}")
        cov = projective_cover(W)
        pk = cov.source
        P[k] = pk
        phi[k] = s_proj[0] @ w_inc @ cov
        if k + 1 in P:
            dP[k] = s_proj[1] @ w_inc @ cov
        k -= 1
    return PerfectReplacement(ChainComplex(A, P, dP, label=f"perf({Z.label})"), phi)


def check_injectives_finite_pd(A: PresentedAlgebra, cap: int = INJECTIVE_PD_CAP) -> dict:
    out = {}
    for i in A.vertices:
        pd = projective_dimension(injective(A, i), cap)
        if pd is None:
            raise InfiniteProjectiveDimension(
                f"injective I({i}) has projective dimension > {cap}")
        out[i] = pd
    return out


def derived_nakayama(X: ChainComplex, cap: int = INJECTIVE_PD_CAP) -> ChainComplex:
    """LN(X) for a perfect complex, returned as a perfect complex."""
    if not X.is_perfect():
        raise ValueError("derived_nakayama needs a perfect complex")
    check_injectives_finite_pd(X.algebra, cap)
    return perfect_replacement(nakayama_termwise(X), cap).complex


@dataclass
class SerreReport:
    rows: list = field(default_factory=list)  # (shift, d1, d2)

    @property
    def ok(self) -> bool:
        return all(d1 == d2 for _, d1, d2 in self.rows)


def serre_duality_check(X: ChainComplex, Y: ChainComplex, shifts: Sequence[int] = range(-2, 3),
                        cap: int = INJECTIVE_PD_CAP) -> SerreReport:
    """Compare dim Hom(X[k], LN Y) with dim Hom(Y, X[k])."""
    if not (X.is_perfect() and Y.is_perfect()):
        raise ValueError("serre_duality_check needs perfect complexes")
    SY = derived_nakayama(Y, cap)
    rep = SerreReport()
    for k in shifts:
        Xk = X.shift(k)
        rep.rows.append((k, hom_h0(Xk, SY), hom_h0(Y, Xk)))
    return rep


# -- random perfect complexes ----------------------------------------------------------


def random_map(M: Representation, N: Representation, rng: random.Random) -> ModuleMap:
    b = HomBasis(M, N)
    return b.element([rng.randint(-3, 3) for _ in range(b.dim)])


def random_perfect_complex(A: PresentedAlgebra, rng: random.Random, max_len: int = 3,
                           max_summands: int = 2) -> ChainComplex:
    """Random bounded complex of projectives with d ∘ d = 0."""
    length = rng.randint(1, max_len)
    start = rng.randint(-1, 1)
    terms = {}
    for n in range(start, start + length):
        vs = [rng.choice(A.vertices) for _ in range(rng.randint(1, max_summands))]
        terms[n] = projective_sum(A, vs)
    diffs = {}
    for n in range(start, start + length - 1):
        M, N = terms[n], terms[n + 1]
        b = HomBasis(M, N)
        if n - 1 in diffs:
            prev = diffs[n - 1]
            cols = [(b.element(_unit(b.dim, j)) @ prev).vector() for j in range(b.dim)]
            if cols and cols[0]:
                allowed = kernel_basis(Matrix.from_columns(cols, len(cols[0])))
            else:
                allowed = [tuple(_unit(b.dim, j)) for j in range(b.dim)]
            coeffs = [rng.randint(-3, 3) for _ in allowed]
            vec = [sum((c * v[j] for c, v in zip(coeffs, allowed)), ZERO) for j in range(b.dim)]
            diffs[n] = b.element(vec)
        else:
            diffs[n] = b.element([rng.randint(-3, 3) for _ in range(b.dim)])
    X = ChainComplex(A, terms, diffs, label="rand")
    assert X.d_squared_zero()
    return X


def serre_trials(A: PresentedAlgebra, seed: int = 0, trials: int = 20,
                 shifts: Sequence[int] = range(-2, 3)) -> list:
    """serre_duality_check on ``trials`` seeded random pairs; list of (X, Y, report)."""
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        X = random_perfect_complex(A, rng)
        Y = random_perfect_complex(A, rng)
        out.append((X, Y, serre_duality_check(X, Y, shifts)))
    return out
