import pytest

from quandlekit.braids import BraidWord, braid_or_knot, colorings_of_closure, parse_braid
from quandlekit.errors import InputError
from quandlekit.fox import (
    WirtingerPresentation,
    alexander_at,
    alexander_polynomial,
    fox_derivative,
    reduce_word,
    ring_mul,
    trivial_rho,
    twisted_matrix,
    wirtinger_from_braid,
    word_inv,
    word_mul,
)
from quandlekit.quandles import make_dihedral

X = ((0, 1),)
Y = ((1, 1),)


def test_free_reduction():
    assert reduce_word(((0, 1), (0, -1))) == ()
    assert reduce_word(((0, 1), (1, 1), (1, -1), (0, 1))) == ((0, 1), (0, 1))
    with pytest.raises(InputError):
        reduce_word(((0, 2),))


def test_word_ops():
    w = word_mul(X, Y)
    assert word_mul(w, word_inv(w)) == ()
    assert word_inv(X) == ((0, -1),)


def test_fox_derivative_basics():
    assert fox_derivative(X, 0) == {(): 1}
    assert fox_derivative(X, 1) == {}
    assert fox_derivative(word_inv(X), 0) == {((0, -1),): -1}


def test_fox_derivative_conjugation():
    """d/dx (y x y^-1) = y and d/dy (y x y^-1) = 1 - y x y^-1."""
    w = word_mul(word_mul(Y, X), word_inv(Y))
    assert fox_derivative(w, 0) == {Y: 1}
    assert fox_derivative(w, 1) == {(): 1, w: -1}


def test_fox_product_rule():
    u = word_mul(X, Y)
    v = word_mul(Y, word_inv(X))
    for g in (0, 1):
        lhs = fox_derivative(word_mul(u, v), g)
        du = fox_derivative(u, g)
        dv = fox_derivative(v, g)
        rhs = dict(du)
        for w_, c in ring_mul({u: 1}, dv).items():
            s = rhs.get(w_, 0) + c
            if s:
                rhs[w_] = s
            else:
                rhs.pop(w_, None)
        assert lhs == rhs


def test_wirtinger_trefoil():
    pres = wirtinger_from_braid(braid_or_knot("3_1"))
    assert pres.generators == 3
    assert len(pres.relators) == 3
    for r in pres.relators:
        assert [e for _, e in r] == [1, 1, -1, -1]


def test_wirtinger_counts_figure_eight():
    pres = wirtinger_from_braid(braid_or_knot("4_1"))
    assert pres.generators == 4
    assert len(pres.relators) == 4


def test_wirtinger_shape_check():
    with pytest.raises(InputError):
        WirtingerPresentation(2, (((0, 1), (1, 1), (1, -1), (1, -1)),))


def test_alexander_polynomials():
    assert alexander_polynomial(braid_or_knot("3_1")) == {0: 1, 1: -1, 2: 1}
    assert alexander_polynomial(braid_or_knot("4_1")) == {0: 1, 1: -3, 2: 1}
    assert alexander_polynomial(braid_or_knot("5_1")) == \
        {0: 1, 1: -1, 2: 1, 3: -1, 4: 1}
    assert alexander_polynomial(BraidWord(2, (1,))) == {0: 1}   # unknot
    with pytest.raises(InputError):
        alexander_polynomial(parse_braid("k=2; 1 1"))   # Hopf link


def test_determinant_vs_colorings():
    """|Delta(-1)| = p  iff  the closure has nontrivial R_p colorings
    (coloring count p^2 vs p for the bundled knots, all of prime determinant)."""
    for name in ("3_1", "4_1", "5_1"):
        w = braid_or_knot(name)
        det = abs(alexander_at(alexander_polynomial(w), -1))
        for p in (3, 5, 7):
            count = len(colorings_of_closure(make_dihedral(p), w))
            assert count == (p * p if det % p == 0 else p)


def test_twisted_matrix_trivial_rho_row_sums():
    """Each Wirtinger relator maps to a row whose entries sum to zero at
    t = 1 (the augmentation kills every Fox derivative row)."""
    pres = wirtinger_from_braid(braid_or_knot("4_1"))
    mat = twisted_matrix(pres, trivial_rho(pres))
    for row in mat:
        total = 0
        for cell in row:
            total += sum(cell[0][0].values())
        assert total == 0


def test_twisted_matrix_rejects_bad_rho():
    pres = wirtinger_from_braid(braid_or_knot("3_1"))
    rho = [[[1]], [[1]], [[2]]]   # not constant on conjugacy classes
    with pytest.raises(InputError):
        twisted_matrix(pres, rho)


def test_twisted_matrix_mod():
    pres = wirtinger_from_braid(braid_or_knot("3_1"))
    mat = twisted_matrix(pres, trivial_rho(pres), modulus=5)
    for row in mat:
        for cell in row:
            for c in cell[0][0].values():
                assert 0 <= c < 5
