import random

import pytest
from hypothesis import given, settings, strategies as st

from doodleswitch.gauss import (
    GaussCode, GaussCodeError, Visit, canonical_form, crossings, disjoint_union,
    from_words, mirror, parse, random_code, relabel, reverse_component, semiarcs, serialize,
)

from conftest import random_codes


def test_parse_d31(d31):
    assert d31.n_components == 1 and d31.n_crossings == 3 and d31.n_semiarcs == 6
    assert d31 == parse("a b c b^-1 a^-1 c^-1")
    assert [v.sign for v in d31.components[0]] == [1, 1, 1, -1, -1, -1]


def test_parse_unknot(U):
    assert U.components == ((),)
    assert (U.n_semiarcs, U.n_crossings) == (1, 0)


@pytest.mark.parametrize("text, fragment", [
    ("a b a", "'b' occurs 1"),
    ("", "empty"),
    ("a a a", "'a' occurs 3"),
    ("a^-1 a^-1", "both passages"),
    ("a b / ", "empty component"),
    ("a a^{-1} b ^", "bad token"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(GaussCodeError, match=fragment):
        parse(text)


def test_same_sign_code_rejected():
    with pytest.raises(GaussCodeError):
        from_words([[("a", 1), ("a", 1)]])


def test_marked_second_occurrence():
    D = parse("a^-1 b a b")
    assert D.components[0] == (Visit("a", -1), Visit("b", 1), Visit("a", 1), Visit("b", -1))
    assert serialize(D) == "a^-1 b a b"
    assert parse("a b^{-1} a^-1 b") == parse("a b^-1 a^-1 b")


def test_serialize_multicomponent():
    D = parse("a b  /  o / b a")
    assert serialize(D) == "a b / o / b a"
    assert parse(serialize(D)) == D


def test_comments_and_lines():
    assert parse("# d31\na b c\nb a c  # tail\n") == parse("a b c b a c")


@settings(max_examples=150)
@given(st.integers(0, 2**32), st.integers(0, 7), st.integers(1, 3))
def test_round_trip(seed, n, k):
    D = random_code(random.Random(seed), n, k)
    assert parse(serialize(D)) == D


def test_semiarcs_and_crossings(d31, U):
    assert len(semiarcs(d31)) == 6 and len(crossings(d31)) == 3
    assert len(semiarcs(U)) == 1 and crossings(U) == []
    (cr,) = crossings(parse("a a"))
    assert {cr.positive.inc, cr.positive.out} == {cr.negative.inc, cr.negative.out} == {0, 1}


def test_crossing_records_d31(d31):
    by = {c.crossing: c for c in crossings(d31)}
    a = by["a"]
    # passage 0 is entered by semiarc 5 and left by semiarc 0
    assert (a.positive.inc, a.positive.out) == (5, 0)
    assert (a.negative.inc, a.negative.out) == (3, 4)
    assert (a.a, a.d, a.b, a.c) == (5, 0, 3, 4)


def test_semiarc_counts_general():
    for D in random_codes(3, 40, 6, 3):
        assert len(semiarcs(D)) == sum(max(1, len(c)) for c in D.components)
        crs = crossings(D)
        assert len(crs) == D.n_crossings
        ends = sorted(t.out for c in crs for t in (c.transit1, c.transit2))
        loops = [s.id for s in semiarcs(D) if s.span is None]
        assert sorted(ends + loops) == list(range(D.n_semiarcs))


def test_disjoint_union(U, d31):
    UU = disjoint_union(U, U)
    assert UU.components == ((), ())
    DU = disjoint_union(d31, U)
    assert (DU.n_components, DU.n_crossings, DU.n_semiarcs) == (2, 3, 7)
    DD = disjoint_union(d31, d31)
    assert DD.n_crossings == 6 and len(set(DD.symbols)) == 6


def test_relabel_and_canonical(d31):
    D = relabel(d31, {"a": "z", "b": "q"})
    assert canonical_form(D) == canonical_form(d31)


def test_canonical_examples(U):
    assert serialize(canonical_form(parse("b a b a"))) == "a b a b"
    assert canonical_form(U) == U
    assert serialize(canonical_form(parse("a b a b / o"))) == "o / a b a b"


def test_canonical_idempotent_and_invariant():
    rng = random.Random(9)
    for D in random_codes(4, 100, 6, 3):
        C = canonical_form(D)
        assert canonical_form(C) == C
        comps = list(D.components)
        rng.shuffle(comps)
        comps = [c[r:] + c[:r] for c in comps for r in [rng.randrange(max(1, len(c)))]]
        syms = D.symbols
        perm = dict(zip(syms, rng.sample(syms, len(syms))))
        E = relabel(GaussCode(tuple(comps)), {s: f"{perm[s]}_" for s in syms})
        assert canonical_form(E) == C


def test_canonical_keeps_signs():
    # same unsigned word, different coloring counts, so they must stay apart
    assert canonical_form(parse("a b c b a c")) != canonical_form(parse("a b a^-1 c b^-1 c^-1"))


def test_mirror_and_reverse(d31):
    M = mirror(d31)
    assert [v.sign for v in M.components[0]] == [-1, -1, -1, 1, 1, 1]
    assert mirror(M) == d31
    R = reverse_component(d31, 0)
    assert R.n_crossings == 3 and reverse_component(R, 0) == d31


def test_random_code_shapes():
    rng = random.Random(1)
    D = random_code(rng, 5, 3, allow_empty=False)
    assert D.n_components == 3 and all(D.components)
    with pytest.raises(GaussCodeError):
        random_code(rng, 1, 3, allow_empty=False)
