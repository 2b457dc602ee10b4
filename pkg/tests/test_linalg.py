import random

import pytest

from quandlekit.errors import InputError
from quandlekit.linalg import (
    cokernel,
    cokernel_mod,
    identity,
    int_det,
    int_kernel,
    is_invertible_mod,
    kernel_mod_p,
    lattice_basis,
    mat_frac_inverse,
    mat_inv_mod,
    mat_mul,
    mat_vec,
    quotient_invariant_factors,
    smith_normal_form,
    solve_exact,
)

random.seed(20260823)


def rand_mat(rows, cols, lo=-9, hi=9):
    return [[random.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def test_snf_small_oracle():
    # diag(2, 4): invariant factors of [[2, 0], [0, 4]] and of [[2, 4], [4, 2]]
    # hand-checked: det = -12, gcd of entries 2, so factors (2, 6)
    res = smith_normal_form([[2, 0], [0, 4]])
    assert res.diag == [2, 4]
    res2 = smith_normal_form([[2, 4], [4, 2]])
    assert res2.diag == [2, 6]


def test_snf_divisibility_and_transforms():
    for _ in range(40):
        m = rand_mat(random.randint(1, 5), random.randint(1, 5))
        res = smith_normal_form(m, transforms=True)
        for i in range(len(res.diag) - 1):
            if res.diag[i + 1]:
                assert res.diag[i] != 0
                assert res.diag[i + 1] % res.diag[i] == 0
        assert all(d >= 0 for d in res.diag)
        # U m V has the diagonal form
        umv = mat_mul(mat_mul(res.u, m), res.v)
        for i in range(len(umv)):
            for j in range(len(umv[0])):
                want = res.diag[i] if i == j and i < len(res.diag) else 0
                assert umv[i][j] == want
        assert abs(int_det(res.u)) == 1
        assert abs(int_det(res.v)) == 1


def test_cokernel_oracle():
    # Z^2 / <(2,1), (-1,2)> has order |det| = 5
    assert cokernel([[2, -1], [1, 2]]) == [5]
    # free part shows up as 0
    assert cokernel([[1, 0], [0, 0]]) == [0]
    assert cokernel([[2, 0], [0, 4]]) == [2, 4]


def test_cokernel_mod():
    # same lattice, reduced mod 5: the whole group survives
    assert cokernel_mod([[2, -1], [1, 2]], 5) == [5]
    assert cokernel_mod([[1, 0], [0, 1]], 7) == []
    assert cokernel_mod([[0, 0], [0, 0]], 6) == [6, 6]


def test_int_kernel():
    ker = int_kernel([[1, -3], [2, -6]])
    assert len(ker) == 1
    v = ker[0]
    assert v in ([3, 1], [-3, -1])


def test_kernel_mod_p():
    basis = kernel_mod_p([[1, 1, 0], [0, 0, 0]], 3)
    assert len(basis) == 2
    for v in basis:
        assert (v[0] + v[1]) % 3 == 0
    with pytest.raises(InputError):
        kernel_mod_p([[1]], 6)


def test_mat_inv_mod():
    for n in (2, 3, 5, 7, 9):
        for _ in range(10):
            m = rand_mat(3, 3, 0, n - 1)
            if not is_invertible_mod(m, n):
                continue
            inv = mat_inv_mod(m, n)
            assert mat_mul(m, inv, n) == [[x % n for x in row] for row in identity(3)]


def test_mat_frac_inverse():
    m = [[2, 1], [1, 1]]
    inv = mat_frac_inverse(m)
    prod = [[sum(m[i][k] * inv[k][j] for k in range(2)) for j in range(2)]
            for i in range(2)]
    assert prod == [[1, 0], [0, 1]]


def test_solve_exact():
    b = [[1, 2], [3, 5]]
    x = [[4, -1], [0, 2]]
    m = mat_mul(b, x)
    assert solve_exact(b, m) == x


def test_lattice_basis():
    gens = [[2, 0], [0, 3], [2, 3]]
    basis = lattice_basis([list(v) for v in gens], 2)
    # the lattice <(2,0),(0,3),(2,3)> is <(2,0),(0,3)>, index 6 in Z^2
    res = smith_normal_form(basis)
    assert res.diag == [1, 6]


def test_quotient_invariant_factors():
    # Z^2 / <2e1, 3e2> = Z/2 x Z/3 = Z/6
    facs = quotient_invariant_factors([[2, 0], [0, 3]], [[1, 0], [0, 1]], 2)
    assert facs == [6]
    # trivial quotient drops the unit factors entirely
    assert quotient_invariant_factors([[1, 0], [0, 1]], [[1, 0], [0, 1]], 2) == []


def test_mat_vec_mod():
    assert mat_vec([[1, 2], [3, 4]], [1, 1], 5) == [3, 2]
