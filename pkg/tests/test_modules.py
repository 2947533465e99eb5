import random
from fractions import Fraction

import pytest

from gradedhecke.groupalgebra import TwistedGroupAlgebra
from gradedhecke.modules import FiniteDimModule, classify_rank_one, \
    induce_from_character, is_essentially_discrete_series, is_regular, is_tempered, \
    restrict_to_group_algebra, weight_decomposition, weight_multiset_oracle, \
    zeta_rank_one
from gradedhecke.presets import build_preset


@pytest.fixture(scope="module")
def A1():
    return build_preset("A1", mode="r1")  # k = 1


def steinberg(algebra):
    k = algebra.k.simple_values()[0]
    return FiniteDimModule(algebra, [[[-k]]], {("s", 0): [[Fraction(-1)]]})


def trivial_module(algebra):
    k = algebra.k.simple_values()[0]
    return FiniteDimModule(algebra, [[[k]]], {("s", 0): [[Fraction(1)]]})


def test_induced_matrix_fixture(A1):
    mod = induce_from_character(A1, (Fraction(0),))
    assert mod.x[0] == [[Fraction(0), Fraction(2)], [Fraction(0), Fraction(0)]]
    assert mod.dim == len(A1.group)


def test_induced_weights_match_orbit(A1):
    rng = random.Random(1)
    for _ in range(8):
        lam = (Fraction(rng.randint(1, 9)),)
        mod = induce_from_character(A1, lam)
        got = sorted(d.weight for d in weight_decomposition(mod)
                     for _ in range(d.multiplicity))
        assert got == weight_multiset_oracle(A1, lam)


def test_induced_weights_other_presets():
    for name in ("A2", "B2", "A2flip"):
        H = build_preset(name, mode="r1")
        lam = tuple(Fraction(3 + 2 * i) for i in range(H.rs.dim))
        assert is_regular(H, lam)
        mod = induce_from_character(H, lam)
        got = sorted(d.weight for d in weight_decomposition(mod)
                     for _ in range(d.multiplicity))
        assert got == weight_multiset_oracle(H, lam)
        assert mod.dim == len(H.group)


def test_weight_multiplicity_at_zero(A1):
    mod = induce_from_character(A1, (Fraction(0),))
    [datum] = weight_decomposition(mod)
    assert datum.weight == (Fraction(0),) and datum.multiplicity == 2


def test_scalar_module_weights(A1):
    st = steinberg(A1)
    [datum] = weight_decomposition(st)
    assert datum.weight == (Fraction(-1),) and datum.multiplicity == 1


def test_relation_validation_catches_errors(A1):
    with pytest.raises(ValueError):
        FiniteDimModule(A1, [[[Fraction(5)]]], {("s", 0): [[Fraction(-1)]]})


def test_temperedness(A1):
    assert is_tempered(steinberg(A1))
    assert is_essentially_discrete_series(steinberg(A1))
    assert not is_tempered(trivial_module(A1))
    ind0 = induce_from_character(A1, (Fraction(0),))
    assert is_tempered(ind0)
    assert not is_essentially_discrete_series(ind0)


def test_restriction_fixtures(A1):
    table, mults = restrict_to_group_algebra(steinberg(A1))
    by_label = dict(zip((b.label() for b in table.blocks), mults))
    assert by_label == {"triv": 0, "sgn": 1}
    _, m0 = restrict_to_group_algebra(induce_from_character(A1, (Fraction(0),)))
    assert m0 == [1, 1]


def test_restriction_is_regular_character(A1):
    table = TwistedGroupAlgebra(A1.group, A1.cocycle)
    for lam in ((Fraction(2),), (Fraction(7),)):
        mod = induce_from_character(A1, lam)
        _, mults = restrict_to_group_algebra(mod, table)
        assert mults == [b.dim for b in table.blocks]


def test_regular_character_b2():
    H = build_preset("B2", mode="r1")
    table = TwistedGroupAlgebra(H.group, H.cocycle)
    mod = induce_from_character(H, (Fraction(1), Fraction(3)))
    _, mults = restrict_to_group_algebra(mod, table)
    assert mults == [b.dim for b in table.blocks]


def test_transport_diagram(A1):
    """Restriction after the sign twist equals restriction tensored by sign."""
    eps = next(e for e in A1.group.epsilon_characters() if not e.is_trivial())
    table = TwistedGroupAlgebra(A1.group, A1.cocycle)
    char_by_index = {
        tuple(sorted(b.character.items())): i for i, b in enumerate(table.blocks)}

    def tensored(mults):
        out = [0] * len(mults)
        for i, b in enumerate(table.blocks):
            twisted = {w.index: b.character[w.index] * eps(w)
                       for w in A1.group.elements}
            j = char_by_index[tuple(sorted(twisted.items()))]
            out[j] = mults[i]
        return out

    for mod in (steinberg(A1), induce_from_character(A1, (Fraction(2),)),
                induce_from_character(A1, (Fraction(0),))):
        _, before = restrict_to_group_algebra(mod, table)
        _, after = restrict_to_group_algebra(mod.twist_by_character(eps), table)
        assert after == tensored(before)


def test_transport_diagram_b2():
    H = build_preset("B2", mode="r1")
    table = TwistedGroupAlgebra(H.group, H.cocycle)
    eps = next(e for e in H.group.epsilon_characters() if e.signs == (-1, 1))
    mod = induce_from_character(H, (Fraction(1), Fraction(2)))
    _, before = restrict_to_group_algebra(mod, table)
    _, after = restrict_to_group_algebra(mod.twist_by_character(eps), table)
    # the regular character is stable under tensoring by a linear character
    assert after == before == [b.dim for b in table.blocks]


# --- rank one classification -----------------------------------------------------------

def test_classification_k1(A1):
    records = {r.label: r for r in classify_rank_one(A1)}
    st = records["Steinberg"]
    assert st.weights[0].weight == (Fraction(-1),)
    assert st.tempered and st.discrete_series
    tv = records["trivial"]
    assert tv.weights[0].weight == (Fraction(1),)
    assert not tv.tempered
    pi0 = records["pi_0"]
    assert pi0.module.dim == 2 and pi0.tempered and not pi0.discrete_series
    tempered = {label for label, r in records.items() if r.tempered}
    assert tempered == {"Steinberg", "pi_0"}


def test_restriction_matrix_unipotent(A1):
    _, zeta, rows = zeta_rank_one(A1)
    # peeling order: Steinberg (dim 1) then pi_0 (dim 2); each new row adds
    # exactly one previously unused constituent with multiplicity one
    assert rows["Steinberg"].count(0) == 1 and rows["Steinberg"].count(1) == 1
    assert rows["pi_0"] == [1, 1]
    assert zeta["Steinberg"].label() == "sgn"
    assert zeta["pi_0"].label() == "triv"


def test_zeta_k0():
    H = build_preset("A1", k=["0"], mode="r1")
    records = classify_rank_one(H)
    tempered = [r for r in records if r.tempered and r.real_weights]
    # both characters sit at weight zero; the matching is the identity
    assert {r.label for r in tempered} == {"Steinberg", "trivial"}
    assert all(r.weights[0].weight == (Fraction(0),) for r in tempered)
    _, zeta, _ = zeta_rank_one(H)
    assert zeta["Steinberg"].label() == "sgn"
    assert zeta["trivial"].label() == "triv"


def test_zeta_negative_k_matches_transport(A1):
    """The matching at -k is the matching at k composed with the sign twist."""
    Hminus = build_preset("A1", k=["-1"], mode="r1")
    _, zeta_plus, _ = zeta_rank_one(A1)
    _, zeta_minus, _ = zeta_rank_one(Hminus)
    # pullback along the sign twist exchanges the two characters:
    # Steinberg at k pulls back to the module labelled trivial at -k
    assert zeta_plus["Steinberg"].label() == "sgn"
    assert zeta_minus["trivial"].label() == "triv"  # = sgn (x) sgn
    assert zeta_plus["pi_0"].label() == "triv"
    assert zeta_minus["pi_0"].label() == "sgn"      # = triv (x) sgn


def test_classification_requires_rank_one():
    H = build_preset("A2", mode="r1")
    with pytest.raises(ValueError):
        classify_rank_one(H)


def test_induction_other_r_values(A1):
    with pytest.raises(ValueError, match="rescale"):
        induce_from_character(A1, (Fraction(2),), r_value=Fraction(5))
    # in generic mode any exact r value works and the relations hold
    generic = build_preset("A1")
    mod = induce_from_character(generic, (Fraction(2),), r_value=Fraction(5))
    assert mod.r_value == 5
    [low, high] = weight_decomposition(mod)
    assert {low.weight, high.weight} == {(Fraction(2),), (Fraction(-2),)}


def test_irrational_weight_reported(A1):
    # x = [[0, 2], [1, 0]] has eigenvalues +/- sqrt(2); the braid relation
    # still holds with N_s = [[1, 2], [0, -1]], so the module is valid but
    # its weights leave the rational field
    mod = FiniteDimModule(
        A1,
        [[[Fraction(0), Fraction(2)], [Fraction(1), Fraction(0)]]],
        {("s", 0): [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(-1)]]})
    with pytest.raises(ValueError, match="characteristic polynomial"):
        weight_decomposition(mod)
