from collections import Counter
from fractions import Fraction

import pytest

from serrealg.q2 import (BLOCKS, N, CharacterVector, NegativeMultiplicity, NonDominantWeight,
                         Weight, build_q2, check_module, classify_weight, decompose,
                         expected_layers, ext1_by_extensions, ext1_super, induced_character, lam,
                         natural_module, principal_ext1_triple, synthesize_block,
                         tensor_decompose, trivial_module, verify_block, wedge_g1_character)
from serrealg.quiver import is_special_biserial
from serrealg.homological import projective_dimension
from serrealg.modules import simple

H = Fraction(1, 2)


@pytest.fixture(scope="module")
def g():
    return build_q2()


def named(g, v):
    return {g.names[i]: c for i, c in enumerate(v) if c}


def test_brackets(g):
    assert g.dim == 8 and g.parity == (0, 0, 0, 0, 1, 1, 1, 1)
    assert named(g, g.bracket(g.unit("ē12"), g.unit("e21"))) == {"ē11": 1, "ē22": -1}
    assert named(g, g.bracket(g.unit("e11"), g.unit("e22"))) == {}
    assert named(g, g.bracket(g.unit("ē12"), g.unit("ē21"))) == {"e11": 1, "e22": 1}


def test_super_identities(g):
    assert g.check_super_antisymmetry()
    assert g.check_super_jacobi()


def test_brackets_match_matrices(g):
    for i, x in enumerate(g.matrices):
        for j, y in enumerate(g.matrices):
            s = -1 if g.parity[i] and g.parity[j] else 1
            z = x @ y - (y @ x).scale(s)
            w = sum((m.scale(c) for m, c in zip(g.matrices, g.bracket_basis(i, j)) if c),
                    start=x.scale(0))
            assert z == w


def test_classify_weight():
    c = classify_weight(Weight.of(1, -1))
    assert c.atypical and not c.parity_self_dual and c.block == "principal"
    c = classify_weight(Weight.of(H, -H))
    assert c.atypical and c.block == "half-integer-atypical"
    c = classify_weight(Weight.of(3, 0))
    assert not c.atypical and c.parity_self_dual and c.heuristic
    assert classify_weight(Weight.of(0, 0)).block == "principal"
    assert classify_weight(Weight.of(5, 2)).block == "strongly-typical"
    with pytest.raises(NonDominantWeight):
        classify_weight(Weight.of(1, 2))
    with pytest.raises(NonDominantWeight):
        classify_weight(Weight.of(H, 0))


def test_block_partition():
    for twice_k in range(0, 21):
        k = Fraction(twice_k, 2)
        if k == 0:
            continue
        b = classify_weight(lam(k)).block
        assert b == ("principal" if twice_k % 2 == 0 else "half-integer-atypical")
    for a in range(-3, 4):
        for d in range(1, 5):
            w = Weight.of(Fraction(a, 2) + d, Fraction(a, 2))
            if w.l1 + w.l2 != 0:
                assert classify_weight(w).block in ("strongly-typical", "typical")


def test_dimensions_of_n():
    for twice_k in range(0, 21):
        k = Fraction(twice_k, 2)
        assert N(k).dim == 2 * k + 1


def test_tensor_decompose_examples():
    unit = N(0)
    c = N(1) + N(Fraction(5, 2))
    assert tensor_decompose(unit, c) == decompose(c.total())
    assert tensor_decompose(N(0) + N(1), N(H)) == Counter({lam(H): 2, lam(3 * H): 1})
    got = tensor_decompose(N(1), N(1))
    assert sum(got.values()) == 3
    assert max(CharacterVector.irreducible(w).dim for w in got) == 5


@pytest.mark.parametrize("k", [H, 1, 3 * H, 2, 5 * H])
def test_even_part_of_projective(k):
    k = Fraction(k)
    want = Counter({lam(k): 2, lam(k - 1): 1, lam(k + 1): 1}) if k != H else \
        Counter({lam(H): 2, lam(3 * H): 1})
    assert tensor_decompose(N(0) + N(1), N(k)) == want
    assert induced_character(k).projective_even == want


def test_decompose_rejects_non_characters():
    with pytest.raises(NegativeMultiplicity):
        decompose(Counter({Weight.of(1, -1): 1}))


def test_wedge_g1(g):
    w = wedge_g1_character(g)
    assert w.dim == 16 and w.dim_even == w.dim_odd == 8
    assert decompose(w.even) == decompose(w.odd) == Counter({lam(0): 2, lam(1): 2})
    assert decompose(w.total()) == Counter({lam(0): 4, lam(1): 4})


@pytest.mark.parametrize("k,length", [(H, 3), (3 * H, 4), (0, 6), (1, 5), (2, 4), (7 * H, 4)])
def test_induced_lengths(k, length):
    d = induced_character(k)
    assert d.length == length
    assert d.dim == 16 * (2 * Fraction(k) + 1)
    assert d.induced.dim_even == d.induced.dim_odd
    assert d.indecomposable == (k == 0)


def test_ext1_super(g):
    L0, PiL0 = trivial_module(g), trivial_module(g, odd=True)
    assert ext1_super(g, L0, PiL0) == 1
    assert ext1_super(g, L0, L0) == 0
    dim, cocycles = ext1_by_extensions(g, L0, PiL0)
    assert dim == 1
    # the cocycle takes equal values on ē11 and ē22 and vanishes elsewhere
    (c,) = cocycles
    e11, e22 = g.index("ē11"), g.index("ē22")
    assert set(c) == {(e11, 0, 0), (e22, 0, 0)} and c[(e11, 0, 0)] == c[(e22, 0, 0)]


def test_ext1_methods_agree_on_more_modules(g):
    V = natural_module(g)
    assert check_module(g, V)
    mods = [trivial_module(g), trivial_module(g, odd=True), V]
    for L1 in mods:
        for L2 in mods:
            assert ext1_super(g, L1, L2) == ext1_by_extensions(g, L1, L2)[0]


def test_synthesize_block():
    A = synthesize_block("strongly-typical")
    assert A.dim == 1 and not A.quiver.arrows
    B = synthesize_block("typical")
    assert B.dim == 2 and [a.name for a in B.quiver.arrows] == ["a"]
    D = synthesize_block("principal", 4)
    assert len(D.vertices) == 8 and is_special_biserial(D)[0]
    with pytest.raises(ValueError):
        synthesize_block("queer")


def test_expected_layers_mirror():
    assert expected_layers("principal", "PiL1") == [["PiL1"], ["L0", "PiL2"], ["PiL0"], ["PiL1"]]
    assert expected_layers("half-integer-atypical", "1") == [["1"], ["2"], ["1"]]


@pytest.mark.parametrize("block", BLOCKS)
def test_verify_block(block):
    rep = verify_block(block, 6)
    assert rep.ok, [c for c in rep.checks if not c[1]]


def test_verify_strongly_typical_is_semisimple():
    A = synthesize_block("strongly-typical")
    assert projective_dimension(simple(A, "0")) == 0
    assert any(name == "semisimple" for name, _, _ in verify_block("strongly-typical").checks)


def test_triple_agreement():
    t = principal_ext1_triple(5)
    assert t == {"arrows": 1, "algebra_ext": 1, "chevalley_eilenberg": 1, "extension_oracle": 1}


@pytest.mark.parametrize("n", [4, 5, 7, 8])
@pytest.mark.parametrize("block", ["half-integer-atypical", "principal"])
def test_verify_block_other_truncations(block, n):
    assert verify_block(block, n).ok
