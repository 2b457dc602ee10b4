import pytest

from quandlekit.errors import GuardExceeded, InputError
from quandlekit.groups import cyclic_group, dihedral_group, small_groups, symmetric_group
from quandlekit.quandles import (
    FiniteQuandle,
    is_isomorphic,
    make_alexander,
    make_conj,
    make_core,
    make_dihedral,
    make_trivial,
    quandle_from_table,
    verify_axioms,
)


def test_dihedral_axioms():
    for n in range(2, 13):
        q = make_dihedral(n)
        assert verify_axioms([list(r) for r in q.table]).passed


def test_dihedral_operation():
    r5 = make_dihedral(5)
    # i*j = 2j - i mod 5
    assert r5.op(1, 3) == 0
    assert r5.op(4, 0) == 1


def test_trivial_quandle():
    t3 = make_trivial(3)
    for a in range(3):
        for b in range(3):
            assert t3.op(a, b) == a


def test_alexander_requires_unit():
    make_alexander(6, 5)
    with pytest.raises(InputError):
        make_alexander(6, 2)  # gcd(2,6) != 1, not a unit


def test_alexander_axioms_all_units():
    from math import gcd
    for n in range(2, 13):
        for t in range(1, n):
            if gcd(t, n) != 1:
                continue
            q = make_alexander(n, t)
            assert verify_axioms([list(r) for r in q.table]).passed


def test_conj_and_core_axioms():
    for g in small_groups(8):
        for power in (1, 2):
            q = make_conj(g, power=power)
            assert verify_axioms([list(r) for r in q.table]).passed
        assert verify_axioms([list(r) for r in make_core(g).table]).passed


def test_verify_axioms_catches_violations():
    # break idempotency
    bad = [[1, 1], [0, 0]]
    report = verify_axioms(bad)
    assert not report.passed
    assert any("axiom I" in f for f in report.failures)
    # break right-invertibility: column 0 is constant
    bad2 = [[0, 1, 2], [0, 0, 2], [0, 2, 1]]
    report2 = verify_axioms(bad2)
    assert not report2.passed


def test_verify_axioms_rejects_malformed():
    with pytest.raises(InputError):
        verify_axioms([[0, 1], [1]])
    with pytest.raises(InputError):
        verify_axioms([[0, 5], [1, 0]])


def test_inv_op_is_inverse():
    q = make_dihedral(7)
    for a in range(7):
        for b in range(7):
            assert q.op(q.inv_op(a, b), b) == a
            assert q.inv_op(q.op(a, b), b) == a


def test_dihedral_is_alexander_with_t_minus_one():
    for n in range(2, 13):
        assert is_isomorphic(make_dihedral(n), make_alexander(n, n - 1))


def test_non_isomorphic_same_size():
    assert not is_isomorphic(make_trivial(3), make_dihedral(3))


def test_isomorphism_guard():
    t = make_trivial(13)
    with pytest.raises(GuardExceeded):
        is_isomorphic(t, t)


def test_conj_subset_closure_check():
    s3 = symmetric_group(3)
    transpositions = [i for i in range(s3.size)
                      if s3.mul[i][i] == s3.identity and i != s3.identity]
    q = make_conj(s3, subset=transpositions)
    assert q.size == 3
    # conjugation of S3 transpositions behaves like R3
    assert is_isomorphic(q, make_dihedral(3))
    three_cycle = next(i for i in range(s3.size)
                       if i != s3.identity and i not in transpositions)
    with pytest.raises(InputError):
        make_conj(s3, subset=[transpositions[0], three_cycle])


def test_core_of_cyclic_is_dihedral():
    for n in (3, 5, 7):
        assert is_isomorphic(make_core(cyclic_group(n)), make_dihedral(n))


def test_quandle_from_table_rejects_bad():
    with pytest.raises(InputError):
        quandle_from_table([[1, 1], [0, 0]])  # idempotency fails


def test_frozen_table():
    q = make_dihedral(3)
    assert isinstance(q.table, tuple)
    assert isinstance(q.table[0], tuple)
