"""Finite-dimensional algebras and Hopf algebras given by structure constants.

Every structure map is a matrix over the fixed basis acting on column
vectors: ``mult`` is dim x dim**2, ``unit`` dim x 1, ``comult`` dim**2 x dim,
``counit`` 1 x dim and ``antipode`` dim x dim.  The Sweedler legs of
``Δ(e_i)`` are literally column ``i`` of ``comult``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .linalg import (
    Field,
    Matrix,
    inverse,
    kron,
    leg_embed,
    permute_codomain,
    permute_domain,
)
from .report import Check, Report, compare_maps, tensor_labels


@dataclass(frozen=True, eq=False)
class AlgebraData:
    field: Field
    dim: int
    basis_names: tuple[str, ...]
    mult: Matrix
    unit: Matrix

    def __post_init__(self):
        object.__setattr__(self, "basis_names", tuple(self.basis_names))
        n = self.dim
        if len(self.basis_names) != n or len(set(self.basis_names)) != n:
            raise ValueError("basis names must be distinct and match the dimension")
        if self.mult.shape != (n, n * n):
            raise ValueError(f"mult must be {n}x{n * n}, got {self.mult.shape}")
        if self.unit.shape != (n, 1):
            raise ValueError(f"unit must be {n}x1, got {self.unit.shape}")
        for m in (self.mult, self.unit):
            if m.field != self.field:
                raise ValueError("structure constants over the wrong field")

    def identity(self) -> Matrix:
        return Matrix.identity(self.field, self.dim)

    def basis(self, i: int | str) -> Matrix:
        if isinstance(i, str):
            i = self.basis_names.index(i)
        return Matrix.basis_vector(self.field, self.dim, i)

    def element(self, coeffs: dict) -> Matrix:
        """Vector from ``{basis name or index: scalar}``."""
        v = Matrix.zeros(self.field, self.dim, 1)
        for k, c in coeffs.items():
            v = v + self.basis(k).scale(c)
        return v

    def product(self, x: Matrix, y: Matrix) -> Matrix:
        return self.mult @ kron(x, y)

    def left_mult(self, x: Matrix) -> Matrix:
        return self.mult @ kron(x, self.identity())

    def right_mult(self, x: Matrix) -> Matrix:
        return self.mult @ kron(self.identity(), x)

    def same_structure(self, other: "AlgebraData") -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
        )


@dataclass(frozen=True, eq=False)
class HopfAlgebraData:
    alg: AlgebraData
    comult: Matrix
    counit: Matrix
    antipode: Matrix

    def __post_init__(self):
        n = self.alg.dim
        shapes = {"comult": (n * n, n), "counit": (1, n), "antipode": (n, n)}
        for name, shape in shapes.items():
            m = getattr(self, name)
            if m.shape != shape:
                raise ValueError(f"{name} must be {shape[0]}x{shape[1]}, got {m.shape}")
            if m.field != self.alg.field:
                raise ValueError("structure constants over the wrong field")

    @property
    def field(self) -> Field:
        return self.alg.field

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def basis_names(self) -> tuple[str, ...]:
        return self.alg.basis_names

    @property
    def mult(self) -> Matrix:
        return self.alg.mult

    @property
    def unit(self) -> Matrix:
        return self.alg.unit

    @cached_property
    def comult_op(self) -> Matrix:
        """Δᵒᵖ = σ∘Δ."""
        return permute_codomain(self.comult, (self.dim, self.dim), (1, 0))

    def is_cocommutative(self) -> bool:
        return self.comult == self.comult_op

    def is_commutative(self) -> bool:
        return self.mult == permute_domain(self.mult, (self.dim, self.dim), (1, 0))

    def same_structure(self, other: "HopfAlgebraData") -> bool:
        return (
            self.alg.same_structure(other.alg)
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )


def tensor_algebra(a: AlgebraData, b: AlgebraData) -> AlgebraData:
    """A⊗B with the componentwise product (a⊗b)(a'⊗b') = aa'⊗bb'."""
    if a.field != b.field:
        raise ValueError("tensor product of algebras over different fields")
    mult = permute_domain(kron(a.mult, b.mult), (a.dim, b.dim, a.dim, b.dim), (0, 2, 1, 3))
    return AlgebraData(
        a.field, a.dim * b.dim, tuple(tensor_labels(a.basis_names, b.basis_names)), mult, kron(a.unit, b.unit)
    )


def diagonal_algebra(field: Field, n: int, prefix: str = "e") -> AlgebraData:
    """k^n with orthogonal idempotents e1..en and unit (1,...,1)."""
    mult = Matrix.zeros(field, n, n * n)
    data = mult.num.copy()
    for i in range(n):
        data[i, i * n + i] = 1
    ones = Matrix.column(field, [1] * n)
    return AlgebraData(field, n, tuple(f"{prefix}{i + 1}" for i in range(n)), Matrix(field, data), ones)


def ground_algebra(field: Field) -> AlgebraData:
    return AlgebraData(field, 1, ("1",), Matrix.identity(field, 1), Matrix.identity(field, 1))


def verify_algebra(a: AlgebraData) -> Report:
    """Associativity and both unit laws, as exact matrix identities."""
    n, I, m, u = a.dim, a.identity(), a.mult, a.unit
    names = a.basis_names
    return Report(
        [
            compare_maps(
                "associativity",
                m @ kron(m, I),
                m @ kron(I, m),
                tensor_labels(names, names, names),
                names,
            ),
            compare_maps("left unit", m @ kron(u, I), I, names, names),
            compare_maps("right unit", m @ kron(I, u), I, names, names),
        ]
    )


def verify_hopf(h: HopfAlgebraData) -> Report:
    """Algebra axioms followed by every bialgebra and antipode identity."""
    report = verify_algebra(h.alg)
    n = h.dim
    I, m, u = h.alg.identity(), h.mult, h.unit
    D, e, S = h.comult, h.counit, h.antipode
    names = h.basis_names
    nn = tensor_labels(names, names)
    one = Matrix.identity(h.field, 1)
    mAA = tensor_algebra(h.alg, h.alg).mult
    report.extend(
        [
            compare_maps(
                "coassociativity",
                kron(D, I) @ D,
                kron(I, D) @ D,
                names,
                tensor_labels(names, names, names),
            ),
            compare_maps("left counit", kron(e, I) @ D, I, names, names),
            compare_maps("right counit", kron(I, e) @ D, I, names, names),
            compare_maps("comultiplication multiplicative", D @ m, mAA @ kron(D, D), nn, nn),
            compare_maps("comultiplication unital", D @ u, kron(u, u), ["k"], nn),
            compare_maps("counit multiplicative", e @ m, kron(e, e), nn, ["1"]),
            compare_maps("counit unital", e @ u, one, ["k"], ["1"]),
            compare_maps("left antipode", m @ kron(S, I) @ D, u @ e, names, names),
            compare_maps("right antipode", m @ kron(I, S) @ D, u @ e, names, names),
        ]
    )
    return report


def multiplicative_unitary(h: HopfAlgebraData) -> tuple[Matrix, Matrix]:
    """W(a⊗a') = a₍₁₎⊗a₍₂₎a' and its inverse a₍₁₎⊗S(a₍₂₎)a'."""
    I, m, D = h.alg.identity(), h.mult, h.comult
    w = kron(I, m) @ kron(D, I)
    w_inv = kron(I, m) @ kron(I, h.antipode, I) @ kron(D, I)
    return w, w_inv


def check_pentagon(h: HopfAlgebraData) -> Check:
    """W₂₃W₁₂ = W₁₂W₁₃W₂₃ on A⊗A⊗A."""
    I, m, D = h.alg.identity(), h.mult, h.comult
    w = kron(I, m) @ kron(D, I)
    space = (h.dim,) * 3
    w12, w13, w23 = (leg_embed(w, legs, space) for legs in ((1, 2), (1, 3), (2, 3)))
    names = tensor_labels(h.basis_names, h.basis_names, h.basis_names)
    return compare_maps("pentagon", w23 @ w12, w12 @ w13 @ w23, names, names)


def check_unitary_inverse(h: HopfAlgebraData) -> Check:
    """The antipode formula for W⁻¹ agrees with the matrix inverse of W."""
    w, w_inv = multiplicative_unitary(h)
    names = tensor_labels(h.basis_names, h.basis_names)
    try:
        direct = inverse(w)
    except ZeroDivisionError:
        return Check("W inverse", False, {"reason": "W is singular"})
    return compare_maps("W inverse", w_inv, direct, names, names)


def _slice_dim(l: Matrix, h: HopfAlgebraData) -> int:
    n = h.dim
    if l.cols != n or l.rows % n:
        raise ValueError(f"map of shape {l.shape} is not A -> A⊗V for dim A = {n}")
    return l.rows // n


def recover_right_slice(l: Matrix, h: HopfAlgebraData) -> Matrix:
    """Given l = (id⊗T)∘Δ, return T = (ε⊗id)∘l."""
    v = _slice_dim(l, h)
    return kron(h.counit, Matrix.identity(h.field, v)) @ l


def recover_left_slice(l: Matrix, h: HopfAlgebraData) -> Matrix:
    """Given l = (T⊗id)∘Δ, return T = (id⊗ε)∘l."""
    v = _slice_dim(l, h)
    return kron(Matrix.identity(h.field, v), h.counit) @ l


def check_antipode_antihomomorphism(h: HopfAlgebraData) -> Check:
    """S(ab) = S(b)S(a) on all basis pairs."""
    n, S, m = h.dim, h.antipode, h.mult
    nn = tensor_labels(h.basis_names, h.basis_names)
    rhs = permute_domain(m @ kron(S, S), (n, n), (1, 0))
    return compare_maps("antipode anti-multiplicative", S @ m, rhs, nn, h.basis_names)
