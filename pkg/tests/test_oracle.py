"""The brute-force reference semantics, checked on pinned examples."""

import random
from itertools import product

import pytest

from adfsolve.encoding import Interpretation, VarLayout, apply_gamma, gamma_pairs
from adfsolve.formula import Adf, Const, Var, evaluate, parse_adf
from adfsolve.oracle import brute_gamma, brute_semantics, build_reduced
from conftest import EXAMPLE_ADF, random_adf


def interp(adf, values):
    return Interpretation(adf.arguments, tuple(values))


EXPECTED_EXAMPLE = {
    "adm": {("1", "0", "0"), ("1", "1", "1"), ("1", "*", "*"), ("*", "*", "*"), ("*", "1", "1")},
    "com": {("1", "0", "0"), ("1", "1", "1"), ("1", "*", "*")},
    "grd": {("1", "*", "*")},
    "prf": {("1", "0", "0"), ("1", "1", "1")},
    "2v": {("1", "0", "0"), ("1", "1", "1")},
    "stb": {("1", "0", "0")},
}


def test_example_sets_are_exact():
    adf = parse_adf(EXAMPLE_ADF)
    for sem, expected in EXPECTED_EXAMPLE.items():
        assert brute_semantics(adf, sem) == {interp(adf, v) for v in expected}


def test_gamma_on_the_all_unknown_interpretation():
    adf = parse_adf(EXAMPLE_ADF)
    start = interp(adf, "***")
    assert brute_gamma(adf, start) == interp(adf, ("1", "*", "*"))


def test_gamma_collapses_on_two_valued():
    rng = random.Random(71)
    for _ in range(20):
        n = rng.randint(1, 6)
        adf = random_adf(rng, n, depth=4)
        for bits in product("01", repeat=n):
            env = {nm: b == "1" for nm, b in zip(adf.arguments, bits)}
            gamma = brute_gamma(adf, interp(adf, bits))
            for i, condition in enumerate(adf.conditions):
                assert gamma.values[i] == ("1" if evaluate(condition, env) else "0")


def test_gamma_agrees_with_symbolic_pairs():
    rng = random.Random(73)
    for _ in range(15):
        n = rng.randint(1, 5)
        adf = random_adf(rng, n, depth=4)
        layout = VarLayout.for_adf(adf)
        pairs = gamma_pairs(adf, layout)
        for values in product("01*", repeat=n):
            i = interp(adf, values)
            assert brute_gamma(adf, i) == apply_gamma(pairs, i, layout)


def test_cap_is_enforced():
    adf = random_adf(random.Random(0), 5)
    with pytest.raises(ValueError, match="cap"):
        brute_semantics(adf, "adm", cap=4)
    with pytest.raises(ValueError, match="cap"):
        brute_gamma(adf, interp(adf, "*****"), cap=4)


def test_build_reduced_identity_on_the_all_true_model():
    adf = parse_adf(EXAMPLE_ADF)
    reduced = build_reduced(adf, interp(adf, "111"))
    assert reduced == adf


def test_build_reduced_substitutes_and_folds():
    adf = parse_adf(EXAMPLE_ADF)
    reduced = build_reduced(adf, interp(adf, ("1", "0", "0")))
    assert reduced.arguments == ("a",)
    assert reduced.conditions == (Const(True),)


def test_build_reduced_rejects_unknowns():
    adf = parse_adf(EXAMPLE_ADF)
    with pytest.raises(ValueError, match="two-valued"):
        build_reduced(adf, interp(adf, ("1", "*", "0")))


def test_build_reduced_matches_truth_table_restriction():
    rng = random.Random(79)
    for _ in range(30):
        n = rng.randint(1, 6)
        adf = random_adf(rng, n, depth=4)
        bits = tuple(rng.choice("01") for _ in range(n))
        reduced = build_reduced(adf, interp(adf, bits))
        survivors = reduced.arguments
        for assignment in product([False, True], repeat=len(survivors)):
            env = {nm: False for nm in adf.arguments}
            env.update(dict(zip(survivors, assignment)))
            for name, condition in zip(reduced.arguments, reduced.conditions):
                assert evaluate(condition, env) == evaluate(adf.condition(name), env)


def test_example_stable_rejection_through_the_reduction():
    # the all-true model survives reduction unchanged, but its grounded
    # interpretation leaves two arguments unknown, so it is not stable
    adf = parse_adf(EXAMPLE_ADF)
    reduced = build_reduced(adf, interp(adf, "111"))
    grounded = next(iter(brute_semantics(reduced, "grd")))
    assert grounded.values == ("1", "*", "*")
    assert interp(adf, "111") not in brute_semantics(adf, "stb")


def test_empty_model():
    adf = Adf((), ())
    empty = Interpretation((), ())
    for sem in ("adm", "com", "grd", "prf", "2v", "stb"):
        assert brute_semantics(adf, sem) == {empty}


def test_oracle_chain_inclusions():
    rng = random.Random(83)
    for _ in range(25):
        adf = random_adf(rng, rng.randint(1, 6), depth=4)
        sets = {sem: brute_semantics(adf, sem) for sem in ("adm", "com", "grd", "prf", "2v", "stb")}
        two_valued = sets["2v"]
        assert sets["stb"] <= two_valued
        assert two_valued <= sets["prf"]
        assert sets["prf"] <= sets["com"]
        assert sets["com"] <= sets["adm"]
        assert sets["grd"] <= sets["com"]
        assert len(sets["grd"]) == 1


def test_oracle_preferred_equals_maximal_complete():
    rng = random.Random(89)
    for _ in range(25):
        adf = random_adf(rng, rng.randint(1, 6), depth=4)
        preferred = brute_semantics(adf, "prf")
        complete = brute_semantics(adf, "com")
        maximal = {
            i
            for i in complete
            if not any(i != other and i.leq_info(other) for other in complete)
        }
        assert preferred == maximal


def test_free_input_oracle_facts():
    adf = parse_adf("s(a). ac(a,a).")
    assert brute_semantics(adf, "2v") == {interp(adf, "0"), interp(adf, "1")}
    assert brute_semantics(adf, "stb") == {interp(adf, "0")}
