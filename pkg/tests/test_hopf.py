import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hopfqf.examples import cyclic_group, group_algebra, sweedler_h4
from hopfqf.hopf import (
    AlgebraData,
    HopfAlgebraData,
    check_antipode_antihomomorphism,
    check_pentagon,
    check_unitary_inverse,
    diagonal_algebra,
    multiplicative_unitary,
    recover_left_slice,
    recover_right_slice,
    tensor_algebra,
    verify_algebra,
    verify_hopf,
)
from hopfqf.linalg import QQ, Matrix, inverse, kron

SMALL = ["kZ2", "kS3", "fnZ2", "fnS3", "H4", "taft2_F3"]


def with_entry(m: Matrix, col: int, values) -> Matrix:
    rows = m.to_lists()
    for r in range(m.rows):
        rows[r][col] = values[r]
    return Matrix.from_rows(m.field, rows)


def kz2():
    return group_algebra(cyclic_group(2), QQ)


@pytest.mark.parametrize("name", SMALL + ["taft3_F7"])
def test_corpus_axioms(corpus, name):
    report = verify_hopf(corpus[name])
    assert report.passed, report.lines()
    assert len(report) == 12


@pytest.mark.parametrize("name", SMALL)
def test_corpus_axioms_match_oracle(corpus, name):
    assert oracles.axiom_failures(corpus[name]) == []


@pytest.mark.parametrize("name", SMALL)
def test_pentagon_matches_oracle(corpus, name):
    h = corpus[name]
    assert bool(check_pentagon(h)) == oracles.pentagon_holds(h) is True


@pytest.mark.parametrize("name", SMALL + ["taft3_F7"])
def test_w_inverse(corpus, name):
    assert check_unitary_inverse(corpus[name])


def test_w_on_basis_pair():
    h = sweedler_h4(QQ)
    w, _ = multiplicative_unitary(h)
    a = h.alg
    # W(x⊗g) = x⊗g + g⊗xg = x⊗g - g⊗gx
    got = w @ kron(a.basis("x"), a.basis("g"))
    assert got == kron(a.basis("x"), a.basis("g")) - kron(a.basis("g"), a.basis("gx"))


def test_corrupted_unit_is_caught():
    h = kz2()
    # g·1 := 1 breaks the right unit law and associativity
    bad = AlgebraData(QQ, 2, ("1", "g"), with_entry(h.mult, 1 * 2 + 0, [1, 0]), h.unit)
    report = verify_algebra(bad)
    assert not report["right unit"]
    assert report["right unit"].witness["input"] == "g"
    assert report["left unit"]
    assert not report["associativity"]


def test_idempotent_g_is_an_algebra_but_not_hopf():
    # k[g]/(g² - g) is still associative and unital; only the antipode law breaks
    h = kz2()
    alg = AlgebraData(QQ, 2, ("1", "g"), with_entry(h.mult, 3, [0, 1]), h.unit)
    assert verify_algebra(alg).passed
    report = verify_hopf(HopfAlgebraData(alg, h.comult, h.counit, h.antipode))
    assert [c.name for c in report.failures()] == ["left antipode", "right antipode"]
    assert report["left antipode"].witness == {"input": "g", "lhs": "g", "rhs": "1"}


def test_non_multiplicative_comultiplication_breaks_pentagon():
    h = kz2()
    one, g = h.alg.basis(0), h.alg.basis(1)
    delta_g = kron(g, one) + kron(one, g)
    comult = with_entry(h.comult, 1, [r[0] for r in delta_g.to_lists()])
    bad = HopfAlgebraData(h.alg, comult, h.counit, h.antipode)
    assert not check_pentagon(bad)
    assert not oracles.pentagon_holds(bad)
    assert not verify_hopf(bad)["comultiplication multiplicative"]


def test_trivial_comultiplication_still_satisfies_pentagon():
    # Δ(a) = 1⊗a is coassociative and multiplicative, so the pentagon holds
    # although the counit laws fail
    h = kz2()
    comult = kron(h.unit, h.alg.identity())
    bad = HopfAlgebraData(h.alg, comult, h.counit, h.antipode)
    assert check_pentagon(bad)
    assert oracles.pentagon_holds(bad)
    assert not verify_hopf(bad)["right counit"]


def test_shape_validation():
    h = kz2()
    with pytest.raises(ValueError):
        AlgebraData(QQ, 2, ("1", "g"), h.comult, h.unit)
    with pytest.raises(ValueError):
        AlgebraData(QQ, 2, ("1", "1"), h.mult, h.unit)
    with pytest.raises(ValueError):
        HopfAlgebraData(h.alg, h.mult, h.counit, h.antipode)


@pytest.mark.parametrize("name", SMALL)
def test_antipode_is_antihomomorphism(corpus, name):
    assert check_antipode_antihomomorphism(corpus[name])


@pytest.mark.parametrize("name", SMALL)
def test_slice_recovery(corpus, name):
    h = corpus[name]
    T = h.antipode
    right = kron(h.alg.identity(), T) @ h.comult
    left = kron(T, h.alg.identity()) @ h.comult
    assert recover_right_slice(right, h) == T
    assert recover_left_slice(left, h) == T
    with pytest.raises(ValueError):
        recover_right_slice(h.mult, h)


def test_tensor_algebra_product():
    h = sweedler_h4(QQ)
    aa = tensor_algebra(h.alg, h.alg)
    a = h.alg
    x = kron(a.basis("g"), a.basis("x"))
    y = kron(a.basis("x"), a.basis("g"))
    # (g⊗x)(x⊗g) = gx⊗xg = -gx⊗gx
    assert aa.product(x, y) == -kron(a.basis("gx"), a.basis("gx"))
    assert verify_algebra(aa).passed


@given(st.integers(1, 5))
def test_diagonal_algebra(n):
    d = diagonal_algebra(QQ, n)
    assert verify_algebra(d).passed
    assert d.product(d.basis(0), d.basis(n - 1)).is_zero() == (n > 1)


def test_commutativity_flags(corpus):
    assert corpus["kS3"].is_cocommutative() and not corpus["kS3"].is_commutative()
    assert corpus["fnS3"].is_commutative() and not corpus["fnS3"].is_cocommutative()
    assert corpus["fnZ2"].is_commutative() and corpus["fnZ2"].is_cocommutative()
    assert not corpus["H4"].is_commutative() and not corpus["H4"].is_cocommutative()


def test_w_inverse_formula_is_the_matrix_inverse(corpus):
    h = corpus["H4"]
    w, w_inv = multiplicative_unitary(h)
    assert inverse(w) == w_inv
