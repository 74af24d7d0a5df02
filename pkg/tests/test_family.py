import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
import zoo
from hopfqf.examples import matrix_algebra, sweedler_h4
from hopfqf.family import (
    InvalidMorphismError,
    QuantumFamilyData,
    build_U,
    check_alchar,
    check_antipode_intertwining,
    check_counit_preservation,
    check_leg_commutation,
    check_simeq,
    check_u_inverse,
    check_weak_coaction,
    classical_family,
    conjugate_family,
    homomorphism_report,
    hopf_morphism_checks,
    is_quantum_family,
    theorem_report,
    trivial_family,
)
from hopfqf.linalg import GF, QQ, Matrix, hstack, inverse, kron

ZOO = zoo.homomorphisms()


@pytest.fixture
def delta_kz2(corpus):
    h = corpus["kZ2"]
    return QuantumFamilyData(h, h, h.alg, h.comult)


@pytest.mark.parametrize("name, qf", ZOO, ids=[n for n, _ in ZOO])
def test_zoo_members_are_unital_homomorphisms(name, qf):
    assert homomorphism_report(qf).passed


@pytest.mark.parametrize("name, qf", ZOO, ids=[n for n, _ in ZOO])
def test_defining_identity_matches_oracle(name, qf):
    assert bool(is_quantum_family(qf)) == oracles.family_identity_holds(qf)


def test_delta_counterexample(delta_kz2):
    fam = is_quantum_family(delta_kz2)
    assert not fam
    assert fam.witness == {"input": "g", "lhs": "1⊗g⊗g", "rhs": "g⊗g⊗g"}
    counit = check_counit_preservation(delta_kz2)
    assert counit.witness == {"input": "g", "lhs": "g", "rhs": "1"}
    # leg commutation and the antipode law survive on this example
    assert check_leg_commutation(delta_kz2)
    assert check_antipode_intertwining(delta_kz2)
    assert check_simeq(delta_kz2)
    assert not check_alchar(delta_kz2)


def test_classical_family_from_non_hopf_map_rejected(corpus):
    h = corpus["H4"]
    with pytest.raises(InvalidMorphismError) as err:
        classical_family([h.antipode], h, h)
    assert err.value.check.name == "multiplicative"
    assert err.value.check.witness["input"] == "g⊗x"


def test_classical_family_shape_errors(corpus):
    h = corpus["kZ2"]
    with pytest.raises(ValueError):
        classical_family([], h, h)
    with pytest.raises(ValueError):
        classical_family([h.mult], h, h)


def test_hopf_morphism_checks(corpus):
    h = corpus["H4"]
    assert hopf_morphism_checks(zoo.h4_endomorphism(QQ, 5), h, h).passed
    bad = hopf_morphism_checks(zoo.h4_endomorphism(QQ, 5, -1), h, h)
    assert [c.name for c in bad.failures()] == ["comultiplicative"]


@given(st.fractions().filter(lambda x: x != 0), st.fractions())
def test_h4_classical_families_satisfy_theorems(l1, l2):
    h = sweedler_h4(QQ)
    qf = classical_family([zoo.h4_endomorphism(QQ, l1), zoo.h4_endomorphism(QQ, l2)], h, h)
    assert is_quantum_family(qf)
    assert theorem_report(qf).passed


@given(st.sampled_from([3, 5, 7]), st.data())
def test_conjugation_preserves_verdict(p, data):
    f = GF(p)
    h = sweedler_h4(f)
    l = data.draw(st.integers(1, p - 1))
    sign = data.draw(st.sampled_from([1, -1]))
    entries = data.draw(st.lists(st.integers(0, p - 1), min_size=4, max_size=4))
    if (entries[0] * entries[3] - entries[1] * entries[2]) % p == 0:
        return
    base = zoo.into_matrices(zoo.raw_classical([h.alg.identity(), zoo.h4_endomorphism(f, l, sign)], h, h))
    conj = conjugate_family(base, Matrix.column(f, entries))
    assert bool(is_quantum_family(conj)) == bool(is_quantum_family(base)) == (sign == 1)
    assert bool(check_alchar(conj)) == bool(is_quantum_family(conj))


def test_conjugation_rejects_singular_element(corpus):
    h = corpus["H4"]
    qf = trivial_family(h, h, matrix_algebra(2, QQ))
    with pytest.raises((ValueError, ZeroDivisionError)):
        conjugate_family(qf, Matrix.column(QQ, [1, 0, 0, 0]))


@pytest.mark.parametrize("name, qf", ZOO[:12], ids=[n for n, _ in ZOO[:12]])
def test_u_inverse_and_simeq(name, qf):
    u, u_inv = build_U(qf)
    assert u_inv == inverse(u)
    assert check_u_inverse(qf)
    assert check_simeq(qf)


def test_u_acts_on_expected_legs(corpus):
    h = corpus["kZ2"]
    qf = classical_family([h.alg.identity()], h, h)
    u, _ = build_U(qf)
    # legs A1, B, A2 with B = k: U(g⊗1⊗1) = g⊗1⊗α(g) = g⊗1⊗g
    a = h.alg
    e = Matrix.identity(QQ, 1)
    assert u @ kron(a.basis("g"), e, a.basis("1")) == kron(a.basis("g"), e, a.basis("g"))


def test_trivial_family_any_base(corpus):
    h = corpus["H4"]
    qf = trivial_family(h, h, matrix_algebra(3, QQ))
    assert is_quantum_family(qf)
    assert theorem_report(qf).passed


def test_weak_coaction_trivial_and_delta(corpus):
    h = corpus["H4"]
    trivial = kron(h.alg.identity(), h.unit)
    assert check_weak_coaction(trivial, h, h).passed
    report = check_weak_coaction(h.comult, h, h)
    assert not report["weak coaction counit of A"]
    assert report["weak coaction counit of B"]
    with pytest.raises(ValueError):
        check_weak_coaction(h.antipode, h, h)


def test_family_field_mismatch(corpus):
    h = corpus["kZ2"]
    hp = corpus["taft2_F3"]
    with pytest.raises(ValueError):
        QuantumFamilyData(h, hp, h.alg, h.comult)
    with pytest.raises(ValueError):
        QuantumFamilyData(h, h, h.alg, h.antipode)


def test_corrupted_x_column_breaks_antipode_intertwining(corpus):
    h = corpus["H4"]
    qf = classical_family([h.alg.identity()], h, h)
    assert check_antipode_intertwining(qf)
    cols = [qf.alpha.col(j) for j in range(h.dim)]
    cols[2] = cols[2] * 2  # α(x) := 2x
    bad = QuantumFamilyData(h, h, qf.b, hstack(cols))
    res = check_antipode_intertwining(bad)
    assert not res and res.witness["input"] == "x"
