import itertools

import pytest
from hypothesis import given, settings, strategies as st

from doodleswitch.switch import (
    FiniteDoodleSwitch, InvalidSwitchError, SwitchInputError, are_isomorphic,
    brute_force_switches, canonical_table, conjugate, derived_ops, enumerate_switches,
    format_switch, identity_violations, is_r3_compatible, parse_switch, projection_switch,
    s_map, verify_axioms,
)

ALL4 = enumerate_switches(4)


def test_example_tables_are_valid(switches):
    for T in switches.values():
        assert verify_axioms(T.table).valid


def test_symmetric_table_witness():
    rep = verify_axioms([[1, 2], [2, 1]])
    assert (rep.axiom, rep.witness) == ("1", (1, 2))
    assert rep.describe() == "axiom 1 violated at (1,2)"


def test_column_repeat_is_2a():
    # column 1 of [[2,1],[2,... ]] repeats; axiom 1 holds since 1.2 != 2.1
    rep = verify_axioms([[2, 1], [2, 2]])
    assert rep.axiom == "2a" and rep.witness == (1, 2, 1)


def test_2b_failure_reported():
    # every column is a permutation and a.b != b.a off the diagonal, yet S is not injective
    for flat in itertools.product(range(1, 4), repeat=9):
        tab = [flat[0:3], flat[3:6], flat[6:9]]
        rep = verify_axioms(tab)
        if rep.axiom == "2b":
            (i1, j1), (i2, j2) = rep.witness
            assert s_map(FiniteDoodleSwitch.unchecked(tab), i1, j1) == \
                s_map(FiniteDoodleSwitch.unchecked(tab), i2, j2)
            return
    pytest.fail("no 2b-only violation among order-3 tables")


@pytest.mark.parametrize("bad", [[], [[1, 2]], [[1, 3], [2, 1]], [[0]]])
def test_malformed_tables(bad):
    with pytest.raises(SwitchInputError):
        verify_axioms(bad)


def test_constructor_rejects_invalid():
    with pytest.raises(InvalidSwitchError):
        FiniteDoodleSwitch(((1, 2), (2, 1)))


def test_s_map_example(A):
    assert s_map(A, 1, 2) == (A.table[1][0], A.table[0][1]) == (3, 2)
    with pytest.raises(SwitchInputError):
        s_map(A, 0, 1)


def test_derived_ops_of_A(A):
    d = derived_ops(A)
    for x, y in itertools.product(range(1, 5), repeat=2):
        assert A.mul(d.dot_inv[x - 1][y - 1], y) == x
    assert d.t == (1, 4, 3, 2)
    assert d.t_inv == (1, 4, 3, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_identities_hold_for_every_switch(n):
    for T in enumerate_switches(n):
        assert identity_violations(T) == []


def test_identity_check_needs_valid_switch():
    with pytest.raises(InvalidSwitchError):
        derived_ops(FiniteDoodleSwitch.unchecked(((1, 2), (2, 1))))


def test_r3_compatibility(switches):
    assert is_r3_compatible(switches["T"]) == (True, None)
    ok, w = is_r3_compatible(switches["Tprime"])
    assert not ok and len(w) == 3
    assert not is_r3_compatible(switches["Tdoubleprime"])[0]


def test_r3_witness_is_lexicographically_first(switches):
    T = switches["Tprime"]
    m = T.mul
    _, w = is_r3_compatible(T)
    for t in itertools.product(range(1, 4), repeat=3):
        a, b, c = t
        if m(m(a, b), m(c, b)) != m(m(a, c), m(b, c)):
            assert t == w
            break


@given(st.permutations([1, 2, 3, 4]))
def test_conjugates_are_isomorphic(perm):
    A = FiniteDoodleSwitch(((1, 2, 4, 3), (3, 4, 2, 1), (2, 1, 3, 4), (4, 3, 1, 2)))
    B = conjugate(A, perm)
    assert verify_axioms(B.table).valid
    phi = are_isomorphic(A, B)
    assert phi is not None
    for x, y in itertools.product(range(1, 5), repeat=2):
        assert phi[A.mul(x, y) - 1] == B.mul(phi[x - 1], phi[y - 1])


def test_nonisomorphic(switches):
    assert are_isomorphic(switches["Tprime"], switches["Tdoubleprime"]) is None
    assert are_isomorphic(switches["T"], projection_switch(4)) is None
    assert are_isomorphic(projection_switch(2), projection_switch(3)) is None


def test_iso_classes_match_canonical_forms():
    reps = enumerate_switches(4, up_to_iso=True)
    canon = {canonical_table(T.table) for T in ALL4}
    assert len(reps) == len(canon)
    assert {canonical_table(T.table) for T in reps} == canon
    for S, T in itertools.combinations(reps[:40], 2):
        assert are_isomorphic(S, T) is None


def test_enumeration_small_orders():
    assert [T.table for T in enumerate_switches(1)] == [((1,),)]
    assert [T.table for T in enumerate_switches(2)] == sorted(brute_force_switches(2))
    assert [T.table for T in enumerate_switches(3)] == sorted(brute_force_switches(3))


def test_enumeration_order4_properties():
    tables = [T.table for T in ALL4]
    assert tables == sorted(tables)
    assert len(set(tables)) == len(tables)
    for T in ALL4:
        assert verify_axioms(T.table).valid
    # closed under relabelling
    sample = ALL4[::97]
    pool = set(tables)
    for T in sample:
        for perm in itertools.permutations(range(1, 5)):
            assert conjugate(T, perm).table in pool


def test_enumeration_rejects_bad_order():
    with pytest.raises(SwitchInputError):
        enumerate_switches(0)


def test_projection_switch_valid():
    for n in range(1, 6):
        assert verify_axioms(projection_switch(n).table).valid


def test_switch_text_round_trip(A):
    assert parse_switch(format_switch(A)) == A.table
    assert parse_switch("# comment\n2\n2 1\n1 2\n") == ((2, 1), (1, 2))
    for text in ("", "2\n1 2\n", "x\n", "2\n1 2\n2 1 1\n"):
        with pytest.raises(SwitchInputError):
            parse_switch(text)


@settings(max_examples=60)
@given(st.lists(st.integers(1, 3), min_size=9, max_size=9))
def test_verify_agrees_with_enumeration(flat):
    tab = tuple(tuple(flat[i:i + 3]) for i in (0, 3, 6))
    valid = {T.table for T in enumerate_switches(3)}
    assert verify_axioms(tab).valid == (tab in valid)
