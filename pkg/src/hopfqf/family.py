"""Quantum families of Hopf-algebra homomorphisms α: A₁ → B⊗A₂.

α is stored as a (dim B · dim A₂) x dim A₁ matrix with the B leg first.
The theorem checkers evaluate their identities unconditionally, so they can
be run on arbitrary homomorphisms and their implications observed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .hopf import AlgebraData, HopfAlgebraData, diagonal_algebra, multiplicative_unitary, tensor_algebra
from .linalg import Matrix, hstack, inverse, kron, leg_embed, permute_codomain, vstack
from .report import Check, Report, compare_maps, tensor_labels


class InvalidMorphismError(ValueError):
    """A proposed map fails a homomorphism condition; ``check`` holds the witness."""

    def __init__(self, message: str, check: Check):
        super().__init__(message)
        self.check = check


@dataclass(frozen=True, eq=False)
class QuantumFamilyData:
    h1: HopfAlgebraData
    h2: HopfAlgebraData
    b: AlgebraData
    alpha: Matrix

    def __post_init__(self):
        shape = (self.b.dim * self.h2.dim, self.h1.dim)
        if self.alpha.shape != shape:
            raise ValueError(f"alpha must be {shape[0]}x{shape[1]}, got {self.alpha.shape}")
        if not (self.h1.field == self.h2.field == self.b.field == self.alpha.field):
            raise ValueError("family data over different fields")

    @property
    def field(self):
        return self.h1.field

    @cached_property
    def target(self) -> AlgebraData:
        """B⊗A₂ with the componentwise product."""
        return tensor_algebra(self.b, self.h2.alg)

    @property
    def target_labels(self) -> list[str]:
        return list(self.target.basis_names)

    def image(self, a: int | str) -> Matrix:
        return self.alpha @ self.h1.alg.basis(a)


def homomorphism_report(qf: QuantumFamilyData) -> Report:
    """α unital and multiplicative into B⊗A₂."""
    t = qf.target
    names = qf.h1.basis_names
    return Report(
        [
            compare_maps("alpha unital", qf.alpha @ qf.h1.unit, t.unit, ["k"], t.basis_names),
            compare_maps(
                "alpha multiplicative",
                qf.alpha @ qf.h1.mult,
                t.mult @ kron(qf.alpha, qf.alpha),
                tensor_labels(names, names),
                t.basis_names,
            ),
        ]
    )


def is_quantum_family(qf: QuantumFamilyData) -> Check:
    """(m_B⊗id⊗id)(id⊗σ⊗id)(α⊗α)Δ₁ = (id⊗Δ₂)α."""
    nb, n2 = qf.b.dim, qf.h2.dim
    pair = kron(qf.alpha, qf.alpha) @ qf.h1.comult  # legs B, A2, B, A2
    pair = permute_codomain(pair, (nb, n2, nb, n2), (0, 2, 1, 3))
    lhs = kron(qf.b.mult, Matrix.identity(qf.field, n2 * n2)) @ pair
    rhs = kron(Matrix.identity(qf.field, nb), qf.h2.comult) @ qf.alpha
    return compare_maps(
        "defining identity",
        lhs,
        rhs,
        qf.h1.basis_names,
        tensor_labels(qf.b.basis_names, qf.h2.basis_names, qf.h2.basis_names),
    )


def quantum_family_report(qf: QuantumFamilyData) -> Report:
    return homomorphism_report(qf).extend([is_quantum_family(qf)])


def hopf_morphism_checks(hom: Matrix, h1: HopfAlgebraData, h2: HopfAlgebraData) -> Report:
    names1 = h1.basis_names
    nn = tensor_labels(names1, names1)
    return Report(
        [
            compare_maps("unital", hom @ h1.unit, h2.unit, ["k"], h2.basis_names),
            compare_maps("multiplicative", hom @ h1.mult, h2.mult @ kron(hom, hom), nn, h2.basis_names),
            compare_maps(
                "comultiplicative",
                h2.comult @ hom,
                kron(hom, hom) @ h1.comult,
                names1,
                tensor_labels(h2.basis_names, h2.basis_names),
            ),
        ]
    )


def classical_family(homs: Sequence[Matrix], h1: HopfAlgebraData, h2: HopfAlgebraData) -> QuantumFamilyData:
    """The family over B = kⁿ assembled from n Hopf-algebra homomorphisms A₁ → A₂."""
    if not homs:
        raise ValueError("at least one homomorphism is required")
    for i, hom in enumerate(homs):
        if hom.shape != (h2.dim, h1.dim):
            raise ValueError(f"map {i} has shape {hom.shape}, expected {(h2.dim, h1.dim)}")
        for check in hopf_morphism_checks(hom, h1, h2):
            if not check:
                raise InvalidMorphismError(f"map {i} is not a Hopf homomorphism: {check.line()}", check)
    b = diagonal_algebra(h1.field, len(homs))
    return QuantumFamilyData(h1, h2, b, vstack(list(homs)))


def _x_operator(qf: QuantumFamilyData, with_antipode: bool) -> Matrix:
    """a ↦ (id⊗α)Δ₁(a), or (id⊗α)(id⊗S₁)Δ₁(a)."""
    n1 = qf.h1.dim
    I1 = Matrix.identity(qf.field, n1)
    d = qf.h1.comult
    if with_antipode:
        d = kron(I1, qf.h1.antipode) @ d
    return kron(I1, qf.alpha) @ d


def _right_multiplied(qf: QuantumFamilyData, x: Matrix) -> Matrix:
    """a⊗b⊗a' ↦ x(a)·(1⊗b⊗a')."""
    n1, N = qf.h1.dim, qf.target.dim
    I1, IN = Matrix.identity(qf.field, n1), Matrix.identity(qf.field, N)
    return kron(I1, qf.target.mult) @ kron(x, IN)


def build_U(qf: QuantumFamilyData) -> tuple[Matrix, Matrix]:
    """U(a⊗b⊗a') = (id⊗α)(Δ₁(a))(1⊗b⊗a') on A₁⊗B⊗A₂, with the antipode formula for U⁻¹."""
    return (
        _right_multiplied(qf, _x_operator(qf, False)),
        _right_multiplied(qf, _x_operator(qf, True)),
    )


def check_u_inverse(qf: QuantumFamilyData) -> Check:
    """The antipode formula for U⁻¹ equals the matrix inverse of U."""
    u, u_inv = build_U(qf)
    labels = tensor_labels(qf.h1.basis_names, qf.b.basis_names, qf.h2.basis_names)
    try:
        direct = inverse(u)
    except ZeroDivisionError:
        return Check("U inverse", False, {"reason": "U is singular"})
    return compare_maps("U inverse", u_inv, direct, labels, labels)


def check_simeq(qf: QuantumFamilyData) -> Check:
    """(W₁₂^{H₁})⁻¹ U₂₃₄ W₁₂^{H₁} = U₁₃₄ U₂₃₄ on A₁⊗A₁⊗B⊗A₂."""
    n1, nb, n2 = qf.h1.dim, qf.b.dim, qf.h2.dim
    space = (n1, n1, nb, n2)
    u, _ = build_U(qf)
    w, w_inv = multiplicative_unitary(qf.h1)
    w12, w12_inv = leg_embed(w, (1, 2), space), leg_embed(w_inv, (1, 2), space)
    u234, u134 = leg_embed(u, (2, 3, 4), space), leg_embed(u, (1, 3, 4), space)
    labels = tensor_labels(qf.h1.basis_names, qf.h1.basis_names, qf.b.basis_names, qf.h2.basis_names)
    return compare_maps("U conjugation by W1", w12_inv @ u234 @ w12, u134 @ u234, labels, labels)


def check_alchar(qf: QuantumFamilyData) -> Check:
    """W₃₄^{H₂} U₁₂₃ (W₃₄^{H₂})⁻¹ = U₁₂₃ U₁₂₄ on A₁⊗B⊗A₂⊗A₂."""
    n1, nb, n2 = qf.h1.dim, qf.b.dim, qf.h2.dim
    space = (n1, nb, n2, n2)
    u, _ = build_U(qf)
    w, w_inv = multiplicative_unitary(qf.h2)
    w34, w34_inv = leg_embed(w, (3, 4), space), leg_embed(w_inv, (3, 4), space)
    u123, u124 = leg_embed(u, (1, 2, 3), space), leg_embed(u, (1, 2, 4), space)
    labels = tensor_labels(qf.h1.basis_names, qf.b.basis_names, qf.h2.basis_names, qf.h2.basis_names)
    return compare_maps("U conjugation by W2", w34 @ u123 @ w34_inv, u123 @ u124, labels, labels)


def check_leg_commutation(qf: QuantumFamilyData) -> Check:
    """α(a)₁₂ α(a')₁₃ = α(a')₁₃ α(a)₁₂ in B⊗A₂⊗A₂ for all basis pairs (a, a')."""
    nb, n2, n1 = qf.b.dim, qf.h2.dim, qf.h1.dim
    t = qf.target
    space = (nb, n2, n2)
    u2 = qf.h2.unit
    left12, left13, x12, x13 = [], [], [], []
    for a in range(n1):
        v = qf.image(a)
        left = t.left_mult(v)
        left12.append(kron(left, Matrix.identity(qf.field, n2)))
        left13.append(leg_embed(left, (1, 3), space))
        x12.append(kron(v, u2))
        x13.append(permute_codomain(kron(v, u2), space, (0, 2, 1)))
    X12, X13 = hstack(x12), hstack(x13)
    # column (a, a') of lhs is α(a)₁₂α(a')₁₃, of rhs α(a')₁₃α(a)₁₂
    lhs_blocks = [left12[a] @ X13 for a in range(n1)]
    rhs_by_aprime = [left13[ap] @ X12 for ap in range(n1)]
    rhs_cols = [rhs_by_aprime[ap].col(a) for a in range(n1) for ap in range(n1)]
    names = qf.h1.basis_names
    return compare_maps(
        "leg commutation",
        hstack(lhs_blocks),
        hstack(rhs_cols),
        [f"({a}, {b})" for a in names for b in names],
        tensor_labels(qf.b.basis_names, qf.h2.basis_names, qf.h2.basis_names),
    )


def check_counit_preservation(qf: QuantumFamilyData) -> Check:
    """(id⊗ε₂)α(a) = ε₁(a)1_B."""
    lhs = kron(Matrix.identity(qf.field, qf.b.dim), qf.h2.counit) @ qf.alpha
    rhs = qf.b.unit @ qf.h1.counit
    return compare_maps("counit preservation", lhs, rhs, qf.h1.basis_names, qf.b.basis_names)


def check_antipode_intertwining(qf: QuantumFamilyData) -> Check:
    """α∘S₁ = (id_B⊗S₂)∘α."""
    lhs = qf.alpha @ qf.h1.antipode
    rhs = kron(Matrix.identity(qf.field, qf.b.dim), qf.h2.antipode) @ qf.alpha
    return compare_maps("antipode intertwining", lhs, rhs, qf.h1.basis_names, qf.target_labels)


def theorem_report(qf: QuantumFamilyData) -> Report:
    """Defining identity plus the three consequences it implies."""
    return Report(
        [
            is_quantum_family(qf),
            check_leg_commutation(qf),
            check_counit_preservation(qf),
            check_antipode_intertwining(qf),
        ]
    )


def check_weak_coaction(rho: Matrix, coalg: HopfAlgebraData, b: HopfAlgebraData) -> Report:
    """The three weak-coaction conditions for ρ: A → A⊗B (A leg first)."""
    na, nb = coalg.dim, b.dim
    if rho.shape != (na * nb, na):
        raise ValueError(f"rho must be {na * nb}x{na}, got {rho.shape}")
    f = coalg.field
    Ia, Ib = Matrix.identity(f, na), Matrix.identity(f, nb)
    names_a, names_b = coalg.basis_names, b.basis_names
    pair = kron(rho, rho) @ coalg.comult  # legs A, B, A, B
    pair = permute_codomain(pair, (na, nb, na, nb), (0, 2, 1, 3))
    m24 = kron(Matrix.identity(f, na * na), b.mult)
    return Report(
        [
            compare_maps(
                "weak coaction comultiplicativity",
                kron(coalg.comult, Ib) @ rho,
                m24 @ pair,
                names_a,
                tensor_labels(names_a, names_a, names_b),
            ),
            compare_maps("weak coaction counit of A", kron(coalg.counit, Ib) @ rho, b.unit @ coalg.counit, names_a, names_b),
            compare_maps("weak coaction counit of B", kron(Ia, b.counit) @ rho, Ia, names_a, names_a),
        ]
    )


def trivial_family(h1: HopfAlgebraData, h2: HopfAlgebraData, b: AlgebraData, hom: Matrix | None = None) -> QuantumFamilyData:
    """α(a) = 1_B⊗φ(a) for a Hopf homomorphism φ (identity by default)."""
    if hom is None:
        hom = Matrix.identity(h1.field, h1.dim)
    return QuantumFamilyData(h1, h2, b, kron(b.unit, hom))


def conjugate_family(qf: QuantumFamilyData, u: Matrix) -> QuantumFamilyData:
    """α'(a) = (u⊗1)α(a)(u⁻¹⊗1) for an invertible u ∈ B."""
    lu = qf.b.left_mult(u)
    u_inv = inverse(lu) @ qf.b.unit
    if qf.b.product(u, u_inv) != qf.b.unit:
        raise ValueError("element has no two-sided inverse")
    t = qf.target
    left = t.left_mult(kron(u, qf.h2.unit))
    right = t.right_mult(kron(u_inv, qf.h2.unit))
    return QuantumFamilyData(qf.h1, qf.h2, qf.b, left @ right @ qf.alpha)
