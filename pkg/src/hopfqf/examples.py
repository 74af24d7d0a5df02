"""Standard finite-dimensional Hopf algebras used throughout the test-suite.

Basis orderings are fixed: group elements in table order, indicator
functions in the same order, {1, g, x, gx} for Sweedler's algebra and
g^i x^j in lexicographic (i, j) order for Taft algebras.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .hopf import AlgebraData, HopfAlgebraData, tensor_algebra
from .linalg import Field, Matrix, hstack, kron


class InvalidGroupTable(ValueError):
    pass


def _check_latin(n: int, prod) -> None:
    if len(prod) != n or any(len(row) != n for row in prod):
        raise InvalidGroupTable(f"product table must be {n}x{n}")
    full = set(range(n))
    for i, row in enumerate(prod):
        if set(row) != full:
            raise InvalidGroupTable(f"row {i} is not a permutation (not a Latin square)")
    for j in range(n):
        if {prod[i][j] for i in range(n)} != full:
            raise InvalidGroupTable(f"column {j} is not a permutation (not a Latin square)")


@dataclass(frozen=True, eq=False)
class GroupTable:
    order: int
    product: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    identity: int
    names: tuple[str, ...]

    def __post_init__(self):
        n = self.order
        prod = self.product
        _check_latin(n, prod)
        e = self.identity
        for a in range(n):
            if prod[e][a] != a or prod[a][e] != a:
                raise InvalidGroupTable(f"{self.names[e]} is not an identity: fails at {self.names[a]}")
        for a in range(n):
            b = self.inverse[a]
            if prod[a][b] != e or prod[b][a] != e:
                raise InvalidGroupTable(f"{self.names[b]} is not inverse to {self.names[a]}")
        for a, b, c in itertools.product(range(n), repeat=3):
            if prod[prod[a][b]][c] != prod[a][prod[b][c]]:
                raise InvalidGroupTable(
                    "not associative at ({}, {}, {})".format(*(self.names[k] for k in (a, b, c))),
                )

    @classmethod
    def from_product(cls, product: Sequence[Sequence[int]], names: Sequence[str] | None = None) -> "GroupTable":
        """Infer identity and inverses from a product table, then validate."""
        n = len(product)
        names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        product = tuple(tuple(int(x) for x in row) for row in product)
        _check_latin(n, product)
        ids = [e for e in range(n) if all(product[e][a] == a == product[a][e] for a in range(n))]
        if not ids:
            raise InvalidGroupTable("no identity element")
        e = ids[0]
        inv = []
        for a in range(n):
            cands = [b for b in range(n) if product[a][b] == e]
            if not cands:
                raise InvalidGroupTable(f"{names[a]} has no inverse")
            inv.append(cands[0])
        return cls(n, product, tuple(inv), e, names)


def cyclic_group(n: int) -> GroupTable:
    names = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    return GroupTable.from_product([[(i + j) % n for j in range(n)] for i in range(n)], names[:n])


def symmetric_group(n: int) -> GroupTable:
    """Permutations of 1..n in lexicographic one-line order; (p*q)(i) = p(q(i))."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    product = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    names = ["".join(str(k + 1) for k in p) for p in perms]
    return GroupTable.from_product(product, names)


def _tensor_from_entries(field: Field, shape, entries) -> Matrix:
    data = np.zeros(shape, dtype=np.int64)
    for (i, j), v in entries.items():
        data[i, j] += v
    return Matrix(field, data)


def group_algebra(g: GroupTable, field: Field) -> HopfAlgebraData:
    """kG: Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹."""
    n = g.order
    mult = {(g.product[a][b], a * n + b): 1 for a in range(n) for b in range(n)}
    comult = {(a * n + a, a): 1 for a in range(n)}
    alg = AlgebraData(
        field,
        n,
        g.names,
        _tensor_from_entries(field, (n, n * n), mult),
        Matrix.basis_vector(field, n, g.identity),
    )
    return HopfAlgebraData(
        alg,
        _tensor_from_entries(field, (n * n, n), comult),
        Matrix.from_rows(field, [[1] * n]),
        _tensor_from_entries(field, (n, n), {(g.inverse[a], a): 1 for a in range(n)}),
    )


def function_algebra(g: GroupTable, field: Field) -> HopfAlgebraData:
    """k^G: pointwise product, Δ(δ_g) = Σ_{hk=g} δ_h⊗δ_k, ε(δ_g) = [g = e], S(δ_g) = δ_{g⁻¹}."""
    n = g.order
    mult = {(a, a * n + a): 1 for a in range(n)}
    comult = {(h * n + k, g.product[h][k]): 1 for h in range(n) for k in range(n)}
    counit = [[1 if a == g.identity else 0 for a in range(n)]]
    alg = AlgebraData(
        field,
        n,
        tuple(f"d[{name}]" for name in g.names),
        _tensor_from_entries(field, (n, n * n), mult),
        Matrix.column(field, [1] * n),
    )
    return HopfAlgebraData(
        alg,
        _tensor_from_entries(field, (n * n, n), comult),
        Matrix.from_rows(field, counit),
        _tensor_from_entries(field, (n, n), {(g.inverse[a], a): 1 for a in range(n)}),
    )


def sweedler_h4(field: Field) -> HopfAlgebraData:
    """Sweedler's 4-dimensional Hopf algebra on the basis {1, g, x, gx}."""
    if field.characteristic == 2:
        raise ValueError("Sweedler's algebra degenerates in characteristic 2")
    one, g, x, gx = range(4)
    # xg = -gx, gxg = -x, x*gx = -g x x = 0, gx*gx = -g g x x = 0
    table = {
        (one, one): {one: 1}, (one, g): {g: 1}, (one, x): {x: 1}, (one, gx): {gx: 1},
        (g, one): {g: 1}, (g, g): {one: 1}, (g, x): {gx: 1}, (g, gx): {x: 1},
        (x, one): {x: 1}, (x, g): {gx: -1}, (x, x): {}, (x, gx): {},
        (gx, one): {gx: 1}, (gx, g): {x: -1}, (gx, x): {}, (gx, gx): {},
    }
    mult = {(k, a * 4 + b): v for (a, b), out in table.items() for k, v in out.items()}
    comult = {
        (one * 4 + one, one): 1,
        (g * 4 + g, g): 1,
        (x * 4 + one, x): 1,
        (g * 4 + x, x): 1,
        (gx * 4 + g, gx): 1,  # Δ(gx) = (g⊗g)(x⊗1 + g⊗x) = gx⊗g + 1⊗gx
        (one * 4 + gx, gx): 1,
    }
    antipode = {(one, one): 1, (g, g): 1, (gx, x): -1, (x, gx): 1}
    alg = AlgebraData(
        field, 4, ("1", "g", "x", "gx"), _tensor_from_entries(field, (4, 16), mult), Matrix.basis_vector(field, 4, 0)
    )
    return HopfAlgebraData(
        alg,
        _tensor_from_entries(field, (16, 4), comult),
        Matrix.from_rows(field, [[1, 1, 0, 0]]),
        _tensor_from_entries(field, (4, 4), antipode),
    )


def primitive_root_of_unity(n: int, p: int) -> int:
    """Smallest primitive n-th root of unity in F_p."""
    if n < 1 or (p - 1) % n:
        raise ValueError(f"F_{p} has no primitive {n}-th root of unity ({n} does not divide {p - 1})")
    for q in range(1, p):
        if pow(q, n, p) == 1 and all(pow(q, k, p) != 1 for k in range(1, n)):
            return q
    raise AssertionError("unreachable")


def _taft_name(i: int, j: int) -> str:
    gpart = "" if i == 0 else "g" if i == 1 else f"g^{i}"
    xpart = "" if j == 0 else "x" if j == 1 else f"x^{j}"
    return (gpart + xpart) or "1"


def taft(n: int, field: Field) -> HopfAlgebraData:
    """Taft algebra T_n: gⁿ = 1, xⁿ = 0, xg = q·gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x."""
    if field.p is None:
        raise ValueError("Taft algebras are built over a prime field")
    if n < 2:
        raise ValueError("Taft algebras need n >= 2")
    p = field.p
    q = primitive_root_of_unity(n, p)
    dim = n * n
    idx = lambda i, j: (i % n) * n + j  # noqa: E731

    # (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}
    mult = {}
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if j + l < n:
            mult[(idx(i + k, j + l), idx(i, j) * dim + idx(k, l))] = pow(q, j * k, p)
    names = tuple(_taft_name(i, j) for i in range(n) for j in range(n))
    alg = AlgebraData(field, dim, names, _tensor_from_entries(field, (dim, dim * dim), mult), Matrix.basis_vector(field, dim, 0))

    aa = tensor_algebra(alg, alg)
    g, x = alg.basis(idx(1, 0)), alg.basis(idx(0, 1))
    dg = kron(g, g)
    dx = kron(x, alg.basis(0)) + kron(g, x)
    s_g = alg.basis(idx(n - 1, 0))
    s_x = -alg.product(s_g, x)

    comult_cols, antipode_cols = [], []
    for i in range(n):
        for j in range(n):
            d = kron(alg.basis(0), alg.basis(0))
            s = alg.basis(0)
            for _ in range(i):
                d = aa.product(d, dg)
            for _ in range(j):
                d = aa.product(d, dx)
            # S is an anti-homomorphism: S(g^i x^j) = S(x)^j S(g)^i
            for _ in range(j):
                s = alg.product(s, s_x)
            for _ in range(i):
                s = alg.product(s, s_g)
            comult_cols.append(d)
            antipode_cols.append(s)
    return HopfAlgebraData(
        alg,
        hstack(comult_cols),
        Matrix.from_rows(field, [[1 if j == 0 else 0 for i in range(n) for j in range(n)]]),
        hstack(antipode_cols),
    )


def matrix_algebra(n: int, field: Field) -> AlgebraData:
    """M_n(k) on matrix units E_ij (index i*n + j); E_ij E_kl = δ_jk E_il."""
    dim = n * n
    mult = {}
    for i, j, l in itertools.product(range(n), repeat=3):
        mult[(i * n + l, (i * n + j) * dim + (j * n + l))] = 1
    names = tuple(f"E{i + 1}{j + 1}" for i in range(n) for j in range(n))
    unit = Matrix.column(field, [1 if i == j else 0 for i in range(n) for j in range(n)])
    return AlgebraData(field, dim, names, _tensor_from_entries(field, (dim, dim * dim), mult), unit)


def corpus(field_q: Field | None = None) -> dict[str, HopfAlgebraData]:
    """The named corpus: kZ2, kS3, k^Z2, k^S3, H4 over Q, taft(2, F3), taft(3, F7)."""
    q = field_q or Field()
    z2, s3 = cyclic_group(2), symmetric_group(3)
    return {
        "kZ2": group_algebra(z2, q),
        "kS3": group_algebra(s3, q),
        "fnZ2": function_algebra(z2, q),
        "fnS3": function_algebra(s3, q),
        "H4": sweedler_h4(q),
        "taft2_F3": taft(2, Field(3)),
        "taft3_F7": taft(3, Field(7)),
    }


__all__ = [
    "GroupTable",
    "InvalidGroupTable",
    "corpus",
    "cyclic_group",
    "function_algebra",
    "group_algebra",
    "matrix_algebra",
    "primitive_root_of_unity",
    "sweedler_h4",
    "symmetric_group",
    "taft",
]
