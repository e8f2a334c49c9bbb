"""Command-line front end.

Every subcommand reads a presentation file (or a shipped one by name, e.g.
``sl2_o0``), runs one library operation and prints ``key: value`` lines.
Exit codes: 0 verified, 1 property fails, 2 input error, 3 undetermined.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .functors import (Coapproximation, NotSelfInjective, find_symmetrizing_form,
                       nakayama_permutation, verify_c_squared_is_nakayama)
from .homological import InfiniteProjectiveDimension, ext, serre_trials
from .linalg import fmt
from .modules import (Undetermined, format_layers, injective, projective, radical_layers,
                      simple, socle_layers)
from .q2 import (BLOCKS, N, NonDominantWeight, Weight, build_q2, classify_weight, ext1_by_extensions,
                 ext1_super, induced_character, synthesize_block, trivial_module, verify_block,
                 wedge_g1_character, decompose)
from .quiver import (NotFiniteDimensional, PresentationError, cartan_matrix, format_presentation,
                     is_special_biserial, load_algebra, to_dot)

OK, FAIL, INPUT, UNDETERMINED = 0, 1, 2, 3


class InputError(Exception):
    pass


def shipped_presentations() -> list:
    return sorted(p.name[:-4] for p in resources.files("serrealg.data").iterdir() if p.name.endswith(".txt"))


def read_presentation(name: str) -> str:
    path = Path(name)
    if path.is_file():
        return path.read_text()
    if name in shipped_presentations():
        return resources.files("serrealg.data").joinpath(name + ".txt").read_text()
    raise InputError(f"no such file or shipped presentation: {name}")


def load(name: str):
    text = read_presentation(name)
    if not text.strip():
        raise InputError(f"{name}: empty presentation")
    return load_algebra(text, name=Path(name).stem)


_MODULE = re.compile(r"\s*([PSI])\(\s*([^)]+?)\s*\)\s*")


def parse_module(A, text: str):
    m = _MODULE.fullmatch(text)
    if not m:
        if text in A.vertices:
            return simple(A, text)
        raise InputError(f"module must look like P(i), S(i) or I(i): {text!r}")
    kind, v = m.groups()
    if v not in A.vertices:
        raise InputError(f"unknown vertex {v!r}")
    return {"P": projective, "S": simple, "I": injective}[kind](A, v)


def out(key: str, value="") -> None:
    print(f"{key}: {value}" if value != "" else f"{key}:")


def diagram(layers: list) -> list:
    """Loewy layers as centred text lines, top first."""
    rows = [" ".join(layer) for layer in format_layers(layers)]
    width = max((len(r) for r in rows), default=0)
    return [r.center(width).rstrip() for r in rows]


# -- algebra subcommands -------------------------------------------------------------------


def cmd_validate(a) -> int:
    A = load(a.file)
    out("name", A.name)
    out("vertices", len(A.vertices))
    out("arrows", len(A.quiver.arrows))
    out("relations", len(A.relations))
    out("dimension", A.dim)
    out("nilpotency", A.nilpotency)
    for k, v in A.slf_certificate.items():
        out(f"slf.{k}", "ok" if v is True else v)
    sb, why = is_special_biserial(A)
    out("special_biserial", "yes" if sb else f"no ({why})")
    return OK if all(v is True for v in A.slf_certificate.values()) else FAIL


def cmd_basis(a) -> int:
    A = load(a.file)
    out("dimension", A.dim)
    for i in A.vertices:
        for j in A.vertices:
            words = [A.basis[k].word() for k in A.pair_basis(i, j)]
            if words:
                out(f"e{i}Ae{j}", ", ".join(words))
    return OK


def cmd_cartan(a) -> int:
    A = load(a.file)
    C = cartan_matrix(A)
    out("order", " ".join(A.vertices))
    for v, row in zip(A.vertices, C):
        out(f"P({v})", " ".join(str(x) for x in row))
    out("symmetric", "yes" if all(C[i][j] == C[j][i] for i in range(len(C)) for j in range(len(C)))
        else "no")
    return OK


def cmd_loewy(a) -> int:
    A = load(a.file)
    M = parse_module(A, a.module)
    rad = radical_layers(M)
    out("module", a.module)
    out("dimension", M.dim)
    out("loewy_length", len(rad))
    for k, layer in enumerate(format_layers(rad)):
        out(f"radical_layer.{k}", " ".join(layer))
    for k, layer in enumerate(format_layers(socle_layers(M))):
        out(f"socle_layer.{k}", " ".join(layer))
    out("diagram")
    for line in diagram(rad):
        print("    " + line)
    return OK


def cmd_symmetric(a) -> int:
    A = load(a.file)
    f = find_symmetrizing_form(A, seed=a.seed)
    if f is None:
        print("not symmetric")
        return FAIL
    print("symmetric")
    for w, v in f.describe().items():
        out(f"form({w})", fmt(v))
    return OK


def cmd_nakayama_perm(a) -> int:
    A = load(a.file)
    try:
        perm = nakayama_permutation(A, seed=a.seed)
    except NotSelfInjective as e:
        out("error", e)
        return FAIL
    for i, j in perm.items():
        out(f"P({i})", f"I({j})")
    out("identity", "yes" if all(i == j for i, j in perm.items()) else "no")
    return OK


def cmd_coapprox(a) -> int:
    A = load(a.file)
    M = parse_module(A, a.module)
    C = Coapproximation(A, seed=a.seed)
    CM = C(M)
    out("projective_injective", " ".join(C.projinj) or "none")
    out("module", a.module)
    out("C.dim_vector", " ".join(f"{v}={CM.dims[v]}" for v in A.vertices))
    for k, layer in enumerate(format_layers(radical_layers(CM))):
        out(f"C.radical_layer.{k}", " ".join(layer))
    return OK


def cmd_c2_check(a) -> int:
    A = load(a.file)
    rep = verify_c_squared_is_nakayama(A, seed=a.seed)
    out("projective_injective", " ".join(rep.projinj) or "none")
    for v, r in rep.verdicts.items():
        out(f"C2(P({v})) = N(P({v}))", "yes" if r.verdict else "no")
        if r.witness is not None:
            out(f"witness.{v}", "; ".join(f"{z}:{_fmt_matrix(r.witness.comps[z])}" for z in A.vertices))
        if r.reason:
            out(f"reason.{v}", r.reason)
    out("verified", "yes" if rep.ok else "no")
    return OK if rep.ok else FAIL


def _fmt_matrix(m) -> str:
    return "[" + "; ".join(" ".join(fmt(x) for x in row) for row in m.tolist()) + "]"


def cmd_ext(a) -> int:
    A = load(a.file)
    M, Nm = parse_module(A, a.src), parse_module(A, a.dst)
    if a.degree < 0:
        raise InputError("degree must be non-negative")
    d = ext(M, Nm, a.degree)
    print(f"dim Ext^{a.degree}({a.src}, {a.dst}) = {d}")
    return OK


def env_seed(seed):
    if seed is not None:
        return seed
    raw = os.environ.get("SERRE_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"SERRE_SEED must be an integer, got {raw!r}")


def cmd_serre_check(a) -> int:
    A = load(a.file)
    seed = env_seed(a.seed)
    out("seed", seed)
    out("trials", a.trials)
    bad = 0
    for t, (X, Y, rep) in enumerate(serre_trials(A, seed=seed, trials=a.trials)):
        cells = " ".join(f"[{k}]{d1}/{d2}" for k, d1, d2 in rep.rows)
        out(f"trial.{t}", f"{'ok' if rep.ok else 'FAIL'} {cells}")
        bad += not rep.ok
    out("verified", "yes" if bad == 0 else f"no ({bad} failures)")
    return OK if bad == 0 else FAIL


def cmd_dot(a) -> int:
    A = load(a.file)
    sys.stdout.write(to_dot(A.quiver, name=re.sub(r"\W", "_", A.name) or "Q"))
    return OK


# -- q(2) subcommands -----------------------------------------------------------------------


def _block(name: str) -> str:
    if name in BLOCKS:
        return name
    short = {"a": "strongly-typical", "b": "typical", "c": "half-integer-atypical", "d": "principal"}
    if name in short:
        return short[name]
    raise InputError(f"unknown block {name!r}; expected one of {', '.join(BLOCKS)} or a-d")


def cmd_q2_block(a) -> int:
    A = synthesize_block(_block(a.block), a.truncate)
    if a.format == "dot":
        sys.stdout.write(to_dot(A.quiver, name="block"))
    else:
        sys.stdout.write(format_presentation(A.quiver, A.relations, f"{_block(a.block)} block"))
    return OK


def cmd_q2_verify(a) -> int:
    rep = verify_block(_block(a.block), a.truncate, seed=a.seed)
    out("block", rep.block)
    out("truncation", rep.n)
    out("dimension", rep.algebra.dim)
    for name, ok, detail in rep.checks:
        out(name, ("ok" if ok else "FAIL") + (f" ({detail})" if detail and not ok else ""))
    out("verified", "yes" if rep.ok else "no")
    return OK if rep.ok else FAIL


def cmd_q2_ext1(a) -> int:
    g = build_q2()
    L0, PiL0 = trivial_module(g), trivial_module(g, odd=True)
    d = ext1_super(g, L0, PiL0)
    brute, _ = ext1_by_extensions(g, L0, PiL0)
    print(f"dim Ext¹(L(0), ΠL(0)) = {d}")
    out("extension_oracle", brute)
    out("dim Ext¹(L(0), L(0))", ext1_super(g, L0, L0))
    return OK if d == brute else FAIL


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {s!r}")


def cmd_q2_characters(a) -> int:
    k = _rational(a.k)
    if k < 0 or (2 * k).denominator != 1:
        raise InputError("k must lie in {0, 1/2, 1, 3/2, ...}")
    data = induced_character(k)
    wedge = wedge_g1_character()
    out("dim N(λ^k)", N(k).dim)
    out("wedge_g1.even", _fmt_decomp(decompose(wedge.even)))
    out("wedge_g1.odd", _fmt_decomp(decompose(wedge.odd)))
    out("dim Ind N(λ^k)", data.dim)
    out("Ind indecomposable", "yes" if data.indecomposable else "no (P ⊕ ΠP)")
    out("P.even", _fmt_decomp(data.projective_even))
    out("P.composition_factors", ", ".join(f"L(λ^{fmt(j)})x{m}" for j, m in sorted(data.factors.items())))
    out("length P(λ^k)", data.length)
    return OK


def _fmt_decomp(c) -> str:
    return " + ".join(f"{m}N({fmt(w.l1)},{fmt(w.l2)})" for w, m in sorted(c.items(), key=lambda x: x[0].l1))


def cmd_q2_classify(a) -> int:
    parts = a.weight.split(",")
    if len(parts) != 2:
        raise InputError("weight must be given as l1,l2")
    w = Weight(*(_rational(p.strip()) for p in parts))
    try:
        c = classify_weight(w)
    except NonDominantWeight as e:
        raise InputError(str(e))
    out("weight", w)
    out("atypical", "yes" if c.atypical else "no")
    out("L = ΠL", "yes" if c.parity_self_dual else "no")
    out("block", c.block + (" (heuristic: typical with l1*l2 != 0 read as strongly typical)"
                            if c.heuristic else ""))
    return OK


# -- parser ------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="serrealg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    def file_cmd(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("file", help="presentation file or shipped name (" +
                       ", ".join(shipped_presentations()) + ")")
        s.add_argument("--seed", type=int, default=0)
        s.set_defaults(fn=fn)
        return s

    file_cmd("validate", cmd_validate, "build the algebra and audit the slf axioms")
    file_cmd("basis", cmd_basis, "path basis per vertex pair")
    file_cmd("cartan", cmd_cartan, "Cartan matrix; row i lists composition multiplicities of P(i)")
    file_cmd("loewy", cmd_loewy, "radical and socle layers").add_argument("--module", required=True)
    file_cmd("symmetric", cmd_symmetric, "search for a symmetrizing trace form")
    file_cmd("nakayama-perm", cmd_nakayama_perm, "i -> j with P(i) = I(j)")
    file_cmd("coapprox", cmd_coapprox, "partial coapproximation C(M)").add_argument("--module", required=True)
    file_cmd("c2-check", cmd_c2_check, "C(C(P(i))) = N(P(i)) for every vertex")
    s = file_cmd("ext", cmd_ext, "dimension of Ext^n(M, N)")
    s.add_argument("--from", dest="src", required=True)
    s.add_argument("--to", dest="dst", required=True)
    s.add_argument("--degree", type=int, default=1)
    s = file_cmd("serre-check", cmd_serre_check, "Serre duality on random perfect pairs")
    s.set_defaults(seed=None)
    s.add_argument("--trials", type=int, default=20)
    file_cmd("dot", cmd_dot, "quiver as Graphviz DOT")

    q = sub.add_parser("q2", help="the queer Lie superalgebra q(2)")
    qs = q.add_subparsers(dest="q2cmd", required=True)
    s = qs.add_parser("block", help="presentation of a block")
    s.add_argument("block")
    s.add_argument("--truncate", type=int, default=6)
    s.add_argument("--format", choices=("text", "dot"), default="text")
    s.set_defaults(fn=cmd_q2_block)
    s = qs.add_parser("verify", help="check a block against its expected structure")
    s.add_argument("block")
    s.add_argument("--truncate", type=int, default=6)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_q2_verify)
    qs.add_parser("ext1", help="Ext^1(L(0), ΠL(0)) by super cohomology").set_defaults(fn=cmd_q2_ext1)
    s = qs.add_parser("characters", help="character bookkeeping for P(λ^k)")
    s.add_argument("--k", required=True)
    s.set_defaults(fn=cmd_q2_characters)
    s = qs.add_parser("classify", help="typicality and block of a highest weight")
    s.add_argument("weight", help="l1,l2")
    s.set_defaults(fn=cmd_q2_classify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return INPUT if e.code else OK
    try:
        return args.fn(args)
    except (InputError, PresentationError, NotFiniteDimensional, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT
    except (Undetermined, InfiniteProjectiveDimension) as e:
        print(f"undetermined: {e}", file=sys.stderr)
        return UNDETERMINED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
