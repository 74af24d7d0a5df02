"""Adjoint coaction, cocommuting morphisms and cocentralizer quotients."""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from functools import cached_property

from .family import InvalidMorphismError, QuantumFamilyData
from .hopf import AlgebraData, HopfAlgebraData, tensor_algebra, verify_algebra, verify_hopf
from .linalg import Matrix, hstack, kernel_basis, kron, permute_codomain, rank, row_space_basis, vstack
from .report import Check, Report, compare_maps, format_vector, tensor_labels


def adjoint_coaction(h: HopfAlgebraData) -> Matrix:
    """ad(x) = x₍₁₎S(x₍₃₎)⊗x₍₂₎ as a map A → A⊗A."""
    n = h.dim
    I = h.alg.identity()
    d2 = kron(h.comult, I) @ h.comult
    d2 = kron(I, I, h.antipode) @ d2
    d2 = permute_codomain(d2, (n, n, n), (0, 2, 1))
    return kron(h.mult, I) @ d2


def check_ad_identities(h: HopfAlgebraData) -> Report:
    n = h.dim
    I = h.alg.identity()
    ad = adjoint_coaction(h)
    names = h.basis_names
    nnn = tensor_labels(names, names, names)
    pair = permute_codomain(kron(ad, ad) @ h.comult, (n,) * 4, (0, 2, 1, 3))
    return Report(
        [
            compare_maps("ad coassociative", kron(I, ad) @ ad, kron(h.comult, I) @ ad, names, nnn),
            compare_maps(
                "ad family identity",
                kron(h.mult, I, I) @ pair,
                kron(I, h.comult) @ ad,
                names,
                nnn,
            ),
        ]
    )


def _commutator_map(a: AlgebraData) -> Matrix:
    """z ↦ (zb − bz)_b stacked over the basis b."""
    return vstack([a.right_mult(a.basis(b)) - a.left_mult(a.basis(b)) for b in range(a.dim)])


def center(a: AlgebraData) -> list[Matrix]:
    return kernel_basis(_commutator_map(a))


def is_ad_homomorphism(h: HopfAlgebraData) -> tuple[Check, Check]:
    """(ad is a unital algebra map, first-leg components of ad lie in the center)."""
    ad = adjoint_coaction(h)
    aa = tensor_algebra(h.alg, h.alg)
    names = h.basis_names
    unital = compare_maps("ad homomorphism", ad @ h.unit, aa.unit, ["k"], aa.basis_names)
    mult = compare_maps(
        "ad homomorphism", ad @ h.mult, aa.mult @ kron(ad, ad), tensor_labels(names, names), aa.basis_names
    )
    is_hom = unital if not unital else mult

    # ad(x) = Σ_j c_j(x) ⊗ e_j; centrality of every c_j(x) is (K⊗id)∘ad = 0
    stacked = kron(_commutator_map(h.alg), h.alg.identity()) @ ad
    if stacked.is_zero():
        central = Check("ad central", True)
    else:
        x = min(c for _, c in stacked.nonzero())
        central = Check(
            "ad central",
            False,
            {"input": names[x], "ad": format_vector(ad.col(x), aa.basis_names), "reason": "first-leg component not central"},
        )
    return is_hom, central


class AdjointNotHomomorphism(ValueError):
    def __init__(self, message: str, check: Check):
        super().__init__(message)
        self.check = check


def ad_as_family(h: HopfAlgebraData) -> QuantumFamilyData:
    """ad viewed as a quantum family A → A⊗A, available when ad is an algebra map."""
    is_hom, central = is_ad_homomorphism(h)
    if not (is_hom and central):
        bad = central if not central else is_hom
        raise AdjointNotHomomorphism(f"adjoint coaction is not an algebra map: {bad.line()}", bad)
    return QuantumFamilyData(h, h, h.alg, adjoint_coaction(h))


# ---------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True, eq=False)
class AlgebraMorphism:
    source: HopfAlgebraData | AlgebraData
    target: AlgebraData
    map: Matrix

    def __post_init__(self):
        src = self.source_algebra
        if self.map.shape != (self.target.dim, src.dim):
            raise ValueError(f"map must be {self.target.dim}x{src.dim}, got {self.map.shape}")
        names = src.basis_names
        checks = [
            compare_maps("unital", self.map @ src.unit, self.target.unit, ["k"], self.target.basis_names),
            compare_maps(
                "multiplicative",
                self.map @ src.mult,
                self.target.mult @ kron(self.map, self.map),
                tensor_labels(names, names),
                self.target.basis_names,
            ),
        ]
        for c in checks:
            if not c:
                raise InvalidMorphismError(f"not an algebra morphism: {c.line()}", c)

    @property
    def source_algebra(self) -> AlgebraData:
        return self.source.alg if isinstance(self.source, HopfAlgebraData) else self.source

    @cached_property
    def surjective(self) -> bool:
        return rank(self.map) == self.target.dim


class CocommuteMode(enum.Enum):
    VIA_COPRODUCT = "coproduct"
    VIA_ADJOINT = "adjoint"


def _hopf_source(*morphisms: AlgebraMorphism) -> HopfAlgebraData:
    h = morphisms[0].source
    if not isinstance(h, HopfAlgebraData):
        raise ValueError("morphism source must be a Hopf algebra")
    for m in morphisms[1:]:
        if m.source is not h and not (
            isinstance(m.source, HopfAlgebraData) and m.source.same_structure(h)
        ):
            raise ValueError("morphisms do not share a Hopf source")
    return h


def cocommute(phi: AlgebraMorphism, psi: AlgebraMorphism, mode: CocommuteMode = CocommuteMode.VIA_COPRODUCT) -> Check:
    """(Ψ⊗Φ)Δ = (Ψ⊗Φ)Δᵒᵖ, or equivalently (Φ⊗Ψ)ad(x) = 1⊗Ψ(x)."""
    h = _hopf_source(phi, psi)
    for m in (phi, psi):
        if not m.surjective:
            warnings.warn("cocommutation is defined for surjective morphisms", stacklevel=2)
    names = h.basis_names
    if mode is CocommuteMode.VIA_COPRODUCT:
        both = kron(psi.map, phi.map)
        return compare_maps(
            "cocommute via coproduct",
            both @ h.comult,
            both @ h.comult_op,
            names,
            tensor_labels(psi.target.basis_names, phi.target.basis_names),
        )
    lhs = kron(phi.map, psi.map) @ adjoint_coaction(h)
    rhs = kron(phi.target.unit, psi.map)
    return compare_maps(
        "cocommute via adjoint",
        lhs,
        rhs,
        names,
        tensor_labels(phi.target.basis_names, psi.target.basis_names),
    )


# ---------------------------------------------------------------------------
# ideals and quotients


@dataclass(frozen=True, eq=False)
class QuotientPresentation:
    ideal_basis: list[Matrix]
    projection: Matrix
    section: Matrix
    quotient: AlgebraData
    generators: list[Matrix] = field(default_factory=list)

    @property
    def ideal_dim(self) -> int:
        return len(self.ideal_basis)


def _closure_spanning_set(a: AlgebraData, vectors: list[Matrix]) -> list[Matrix]:
    left = [a.left_mult(a.basis(i)) for i in range(a.dim)]
    right = [a.right_mult(a.basis(j)) for j in range(a.dim)]
    out = []
    if vectors:
        V = hstack(vectors)
        for L in left:
            LV = L @ V
            for R in right:
                out.append(R @ LV)
    return out


def two_sided_ideal(a: AlgebraData, vectors: list[Matrix]) -> tuple[Matrix, list[int]]:
    """RREF basis of A·span(vectors)·A, computed in a single pass."""
    R, pivots = row_space_basis(_closure_spanning_set(a, vectors), a.dim, a.field)
    again, _ = row_space_basis(_closure_spanning_set(a, R.T.columns()), a.dim, a.field)
    if again.rows != R.rows:
        raise RuntimeError("ideal closure is not a fixed point; is the algebra associative?")
    return R, pivots


def quotient_by_ideal(a: AlgebraData, R: Matrix, pivots: list[int], generators=()) -> QuotientPresentation:
    """A/J with J given by RREF rows ``R``; quotient basis = the non-pivot coordinates."""
    n, f = a.dim, a.field
    keep = [c for c in range(n) if c not in set(pivots)]
    I = a.identity()
    if pivots:
        reduce = I - R.T @ I.select_rows(pivots)
    else:
        reduce = I
    projection = reduce.select_rows(keep) if keep else Matrix.zeros(f, 0, n)
    section = I.select_cols(keep) if keep else Matrix.zeros(f, n, 0)
    r = len(keep)
    if r:
        qmult = projection @ a.mult @ kron(section, section)
        quotient = AlgebraData(f, r, tuple(f"[{a.basis_names[c]}]" for c in keep), qmult, projection @ a.unit)
    else:
        quotient = None
    return QuotientPresentation(R.T.columns(), projection, section, quotient, list(generators))


def cocentralizer_generators(phi: AlgebraMorphism) -> list[Matrix]:
    """(μ⊗id)((Φ⊗id)ad(x)) − μ(1)x over the dual basis μ of B and basis x of A."""
    h = _hopf_source(phi)
    n, nb = h.dim, phi.target.dim
    alpha = kron(phi.map, h.alg.identity()) @ adjoint_coaction(h)
    gens = []
    for b in range(nb):
        mu = Matrix.basis_vector(h.field, nb, b).T
        block = kron(mu, h.alg.identity()) @ alpha - h.alg.identity().scale(phi.target.unit[b, 0])
        gens.extend(block.columns())
    return gens


def cocentralizer(phi: AlgebraMorphism, *, strict: bool = False) -> tuple[QuotientPresentation, AlgebraMorphism]:
    """The universal quotient A → A/J cocommuting with Φ, J = A·I·A."""
    h = _hopf_source(phi)
    if not phi.surjective:
        if strict:
            raise ValueError("cocentralizer requires a surjective morphism")
        warnings.warn("cocentralizer of a non-surjective morphism", stacklevel=2)
    gens = cocentralizer_generators(phi)
    R, pivots = two_sided_ideal(h.alg, [g for g in gens if not g.is_zero()])
    q = quotient_by_ideal(h.alg, R, pivots, gens)
    if q.quotient is None:
        raise ValueError("ideal is the whole algebra; the quotient is zero")
    return q, AlgebraMorphism(h, q.quotient, q.projection)


def ideal_in_kernel(q: QuotientPresentation, psi: AlgebraMorphism) -> Check:
    """I ⊆ ker Ψ, so that Ψ factors through the cocentralizer."""
    bad = [i for i, g in enumerate(q.generators) if not (psi.map @ g).is_zero()]
    if not bad:
        return Check("generators in kernel", True)
    names = psi.source_algebra.basis_names
    return Check(
        "generators in kernel",
        False,
        {"generator": format_vector(q.generators[bad[0]], names)},
    )


def factor_through(psi: AlgebraMorphism, q: QuotientPresentation) -> Matrix | None:
    """π with Ψ = π∘Ψᵘ, or None when J ⊄ ker Ψ."""
    if any(not (psi.map @ v).is_zero() for v in q.ideal_basis):
        return None
    pi = psi.map @ q.section
    assert pi @ q.projection == psi.map
    return pi


@dataclass(frozen=True, eq=False)
class InducedBialgebra:
    report: Report
    comult: Matrix | None
    counit: Matrix | None
    antipode_descends: bool
    hopf: HopfAlgebraData | None = None

    @property
    def ok(self) -> bool:
        return self.report.passed


def induced_bialgebra(h: HopfAlgebraData, q: QuotientPresentation) -> InducedBialgebra:
    """Check J is a bi-ideal and, if so, push Δ and ε down to A/J."""
    pi, s = q.projection, q.section
    names = h.basis_names
    J = hstack(q.ideal_basis) if q.ideal_basis else Matrix.zeros(h.field, h.dim, 0)
    labels_j = [format_vector(v, names) for v in q.ideal_basis]
    qnames = q.quotient.basis_names
    report = Report()
    if q.ideal_basis:
        report.checks.append(
            compare_maps(
                "ideal is a coideal",
                kron(pi, pi) @ h.comult @ J,
                Matrix.zeros(h.field, q.quotient.dim ** 2, J.cols),
                labels_j,
                tensor_labels(qnames, qnames),
            )
        )
        report.checks.append(
            compare_maps("counit vanishes on ideal", h.counit @ J, Matrix.zeros(h.field, 1, J.cols), labels_j, ["1"])
        )
        descends = (pi @ h.antipode @ J).is_zero()
    else:
        descends = True
    if not report.passed:
        return InducedBialgebra(report, None, None, descends)

    comult = kron(pi, pi) @ h.comult @ s
    counit = h.counit @ s
    antipode = pi @ h.antipode @ s if descends else Matrix.identity(h.field, q.quotient.dim)
    candidate = HopfAlgebraData(q.quotient, comult, counit, antipode)
    axioms = verify_hopf(candidate)
    bialgebra_checks = [c for c in axioms if "antipode" not in c.name]
    report.checks.extend(bialgebra_checks)
    hopf = candidate if descends and axioms.passed else None
    return InducedBialgebra(report, comult, counit, descends, hopf)


__all__ = [
    "AdjointNotHomomorphism",
    "AlgebraMorphism",
    "CocommuteMode",
    "InducedBialgebra",
    "QuotientPresentation",
    "ad_as_family",
    "adjoint_coaction",
    "center",
    "check_ad_identities",
    "cocentralizer",
    "cocentralizer_generators",
    "cocommute",
    "factor_through",
    "ideal_in_kernel",
    "induced_bialgebra",
    "is_ad_homomorphism",
    "quotient_by_ideal",
    "two_sided_ideal",
    "verify_algebra",
]
