"""Exact dense linear algebra over the rationals and prime fields.

Matrices store an integer numerator array together with a single positive
denominator (always 1 over a prime field).  Numerators live in ``int64`` while
that is provably safe and fall back to Python integers otherwise, so no
operation ever rounds.  Products whose worst-case partial sums stay below
2**53 are routed through float64 BLAS, which is exact in that range.

Tensor bases are row-major with the first factor most significant; this is
the convention of :func:`numpy.kron` and is used everywhere in the package.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

import numpy as np

Scalar = Union[int, Fraction]

_EXACT_FLOAT = 2**53
_INT64_SAFE = 2**62

_RATIONAL_RE = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?")
_RESIDUE_RE = re.compile(r"0|[1-9][0-9]*")


class FieldMismatchError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True)
class Field:
    """The ground field: rationals when ``p`` is None, else the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if isinstance(self.p, bool) or not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"{self.p!r} is not a prime")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def tag(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    @classmethod
    def from_tag(cls, tag: str) -> "Field":
        if tag == "Q":
            return cls()
        m = re.fullmatch(r"Fp:([1-9][0-9]*)", tag)
        if m is None:
            raise ValueError(f"unknown field tag {tag!r}")
        return cls(int(m.group(1)))

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def coerce(self, x) -> Scalar:
        """Canonical representative of ``x`` (an int, Fraction or canonical text)."""
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (bool, float)) or not isinstance(x, (int, Fraction, np.integer)):
            raise TypeError(f"cannot interpret {x!r} as an exact scalar")
        x = Fraction(int(x)) if not isinstance(x, Fraction) else x
        if self.p is None:
            return x
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def parse(self, text: str) -> Scalar:
        """Parse canonical scalar text; non-canonical spellings are rejected."""
        if self.p is None:
            if not _RATIONAL_RE.fullmatch(text) or text == "-0":
                raise ValueError(f"malformed rational {text!r}")
            value = Fraction(text)
            if self.format(value) != text:
                raise ValueError(f"non-canonical rational {text!r} (expected {self.format(value)!r})")
            return value
        if not _RESIDUE_RE.fullmatch(text):
            raise ValueError(f"malformed residue {text!r}")
        value = int(text)
        if value >= self.p:
            raise ValueError(f"residue {text!r} not in [0, {self.p})")
        return value

    def format(self, x: Scalar) -> str:
        x = self.coerce(x)
        if self.p is None:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x)

    def inv(self, x: Scalar) -> Scalar:
        x = self.coerce(x)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x if self.p is None else pow(x, -1, self.p)


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


# ---------------------------------------------------------------------------
# integer array kernels


def _maxabs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return max(abs(int(x)) for x in arr.flat)
    return int(np.abs(arr).max())


def _fit(arr: np.ndarray) -> np.ndarray:
    """Integer array in int64 when every entry is safely small, else Python ints."""
    if arr.dtype != object:
        return arr.astype(np.int64, copy=False)
    if arr.size == 0 or _maxabs(arr) < _INT64_SAFE:
        return arr.astype(np.int64)
    return arr


def _as_object(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object:
        return arr
    out = np.empty(arr.shape, dtype=object)
    out[...] = arr.tolist() if arr.ndim else int(arr)
    return out


def _int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] == 0 or a.size == 0 or b.size == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    bound = _maxabs(a) * _maxabs(b) * a.shape[1]
    if a.dtype != object and b.dtype != object:
        if bound < _EXACT_FLOAT:
            return (a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        if bound < _INT64_SAFE:
            return a @ b
    return _fit(_as_object(a) @ _as_object(b))


def _int_kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and b.dtype != object and _maxabs(a) * _maxabs(b) < _INT64_SAFE:
        return np.kron(a, b)
    return _fit(np.kron(_as_object(a), _as_object(b)))


def _int_lincomb(a: np.ndarray, sa: int, b: np.ndarray, sb: int) -> np.ndarray:
    """a*sa + b*sb, exactly."""
    if (
        a.dtype != object
        and b.dtype != object
        and _maxabs(a) * abs(sa) + _maxabs(b) * abs(sb) < _INT64_SAFE
    ):
        return a * sa + b * sb
    return _fit(_as_object(a) * sa + _as_object(b) * sb)


def _int_scale(a: np.ndarray, s: int) -> np.ndarray:
    if a.dtype != object and _maxabs(a) * abs(s) < _INT64_SAFE:
        return a * s
    return _fit(_as_object(a) * s)


def _content(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return math.gcd(*(int(x) for x in arr.flat))
    return int(np.gcd.reduce(arr.ravel()))


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable exact matrix ``num / den`` over a :class:`Field`."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: Field, num, den: int = 1):
        num = np.asarray(num)
        if num.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if num.dtype != object and not np.issubdtype(num.dtype, np.integer):
            raise TypeError("matrix numerators must be integers")
        num = _fit(num)
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if field.p is not None:
            if den != 1:
                num = _int_scale(num, pow(den, -1, field.p))
            num = _fit(num % field.p)
            den = 1
        else:
            if den < 0:
                num, den = _int_scale(num, -1), -den
            g = math.gcd(_content(num), den)
            if g > 1:
                num, den = _fit(num // g), den // g
        num.flags.writeable = False
        self.field = field
        self.num = num
        self.den = den

    # construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        rows = [[field.coerce(x) for x in row] for row in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        if field.p is not None:
            return cls(field, np.array(rows, dtype=object).reshape(len(rows), width))
        den = reduce(math.lcm, (x.denominator for r in rows for x in r), 1)
        data = np.array(
            [[x.numerator * (den // x.denominator) for x in r] for r in rows], dtype=object
        ).reshape(len(rows), width)
        return cls(field, data, den)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence["Matrix"], height: int | None = None) -> "Matrix":
        if not columns:
            if height is None:
                raise ValueError("height required for an empty column list")
            return cls.zeros(field, height, 0)
        return hstack(columns)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def basis_vector(cls, field: Field, n: int, i: int) -> "Matrix":
        data = np.zeros((n, 1), dtype=np.int64)
        data[i, 0] = 1
        return cls(field, data)

    @classmethod
    def column(cls, field: Field, values: Sequence) -> "Matrix":
        return cls.from_rows(field, [[v] for v in values])

    # inspection -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    @property
    def rows(self) -> int:
        return self.num.shape[0]

    @property
    def cols(self) -> int:
        return self.num.shape[1]

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, (int, np.integer)) and isinstance(j, (int, np.integer)):
            return self._scalar(self.num[i, j])
        if isinstance(i, (int, np.integer)):
            i = slice(i, i + 1) if i >= 0 else slice(i, (i + 1) or None)
        if isinstance(j, (int, np.integer)):
            j = slice(j, j + 1) if j >= 0 else slice(j, (j + 1) or None)
        return Matrix(self.field, self.num[i, j], self.den)

    def _scalar(self, n) -> Scalar:
        return Fraction(int(n), self.den) if self.field.p is None else int(n)

    def to_lists(self) -> list[list[Scalar]]:
        return [[self._scalar(x) for x in row] for row in self.num.tolist()]

    def col(self, j: int) -> "Matrix":
        return Matrix(self.field, self.num[:, j : j + 1], self.den)

    def columns(self) -> list["Matrix"]:
        return [self.col(j) for j in range(self.cols)]

    def select_rows(self, idx) -> "Matrix":
        return Matrix(self.field, self.num[np.asarray(idx, dtype=np.intp), :], self.den)

    def select_cols(self, idx) -> "Matrix":
        return Matrix(self.field, self.num[:, np.asarray(idx, dtype=np.intp)], self.den)

    def nonzero(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.num))]

    def is_zero(self) -> bool:
        return not np.any(self.num)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.num.T.copy(), self.den)

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in row) for row in self.to_lists())
        return f"Matrix<{self.field.tag}, {self.rows}x{self.cols}>[{body}]"

    # arithmetic -----------------------------------------------------------

    def _same_field(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        return True

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self.den == other.den
            and np.array_equal(self.num, other.num)
        )

    __hash__ = None

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix(self.field, _int_matmul(self.num, other.num), self.den * other.den)

    def _combine(self, other: "Matrix", sign: int) -> "Matrix":
        self._same_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        if self.field.p is not None:
            return Matrix(self.field, _int_lincomb(self.num, 1, other.num, sign))
        den = math.lcm(self.den, other.den)
        num = _int_lincomb(self.num, den // self.den, other.num, sign * (den // other.den))
        return Matrix(self.field, num, den)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Matrix(self.field, _int_scale(self.num, -1), self.den)

    def scale(self, s) -> "Matrix":
        s = Fraction(self.field.coerce(s))
        return Matrix(self.field, _int_scale(self.num, s.numerator), self.den * s.denominator)

    def __mul__(self, s):
        if isinstance(s, Matrix):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__


def _common(mats: Sequence[Matrix]) -> tuple[Field, int, list[np.ndarray]]:
    field = mats[0].field
    for m in mats:
        if m.field != field:
            raise FieldMismatchError(f"{field} vs {m.field}")
    den = reduce(math.lcm, (m.den for m in mats), 1)
    return field, den, [_int_scale(m.num, den // m.den) for m in mats]


def hstack(mats: Sequence[Matrix]) -> Matrix:
    field, den, nums = _common(mats)
    if any(n.dtype == object for n in nums):
        nums = [_as_object(n) for n in nums]
    return Matrix(field, np.hstack(nums), den)


def vstack(mats: Sequence[Matrix]) -> Matrix:
    field, den, nums = _common(mats)
    if any(n.dtype == object for n in nums):
        nums = [_as_object(n) for n in nums]
    return Matrix(field, np.vstack(nums), den)


def kron(a: Matrix, b: Matrix, *more: Matrix) -> Matrix:
    """Kronecker product: the matrix of ``a ⊗ b`` on the row-major tensor basis."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    out = Matrix(a.field, _int_kron(a.num, b.num), a.den * b.den)
    for c in more:
        out = kron(out, c)
    return out


# ---------------------------------------------------------------------------
# row reduction


def _rref_prime(num: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    small = p < 2**31
    A = num.astype(np.int64) if small else _as_object(num).copy()
    A = A % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if len(hit):
            A[hit] = (A[hit] - np.outer(col[hit], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _rref_rational(num: np.ndarray) -> tuple[list[list[Fraction]], list[int]]:
    # fraction-free elimination with row-content reduction
    A = _as_object(num).copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if A[i, c] != 0]
        if not nz:
            continue
        pr = nz[0]
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        piv = A[r, c]
        hit = [i for i in range(rows) if i != r and A[i, c] != 0]
        if hit:
            A[hit] = A[hit] * piv - np.outer(A[hit, c], A[r])
            for i in hit:
                g = math.gcd(*A[i].tolist())
                if g > 1:
                    A[i] = A[i] // g
        pivots.append(c)
        r += 1
    out = []
    for i, c in enumerate(pivots):
        piv = A[i, c]
        out.append([Fraction(int(x), int(piv)) for x in A[i].tolist()])
    return out, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form, returned as (nonzero rows, pivot columns)."""
    if m.field.p is not None:
        R, pivots = _rref_prime(m.num, m.field.p)
        return Matrix(m.field, R), pivots
    R, pivots = _rref_rational(m.num)
    if not R:
        return Matrix.zeros(m.field, 0, m.cols), pivots
    return Matrix.from_rows(m.field, R), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> list[Matrix]:
    """Basis of the null space as column vectors, one per free column in order."""
    R, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [m.field.coerce(0)] * m.cols
        v[f] = m.field.coerce(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i, f] if m.field.p is None else (-R[i, f]) % m.field.p
        basis.append(Matrix.column(m.field, v))
    return basis


def inverse(m: Matrix) -> Matrix:
    """Two-sided inverse by Gauss-Jordan elimination; raises on singular input."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    R, pivots = rref(hstack([m, Matrix.identity(m.field, n)]))
    if pivots[:n] != list(range(n)) or R.rows < n:
        raise ZeroDivisionError("matrix is singular")
    return R[:n, n:]


def row_space_basis(vectors: Iterable[Matrix], dim: int, field: Field) -> tuple[Matrix, list[int]]:
    """RREF rows spanning the same space as the given column vectors."""
    vectors = list(vectors)
    if not vectors:
        return Matrix.zeros(field, 0, dim), []
    return rref(hstack(vectors).T)


# ---------------------------------------------------------------------------
# tensor legs


@dataclass(frozen=True)
class LegSpace:
    """Ordered tensor factors; basis tuples are indexed row-major, first leg most significant."""

    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if any(d <= 0 for d in self.dims):
            raise ValueError("leg dimensions must be positive")

    @property
    def total(self) -> int:
        return math.prod(self.dims)

    def index(self, tup: Sequence[int]) -> int:
        return int(np.ravel_multi_index(tuple(tup), self.dims))

    def unindex(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in np.unravel_index(i, self.dims))


def leg_order_index(dims: Sequence[int], order: Sequence[int]) -> np.ndarray:
    """``pi[f]``: position of basis tuple ``f`` after reordering legs to ``order`` (0-based)."""
    dims = tuple(dims)
    order = tuple(order)
    if sorted(order) != list(range(len(dims))):
        raise ValueError(f"{order} is not a permutation of the legs")
    reordered = np.arange(math.prod(dims)).reshape([dims[k] for k in order])
    return reordered.transpose(np.argsort(order)).reshape(-1)


def permute_codomain(m: Matrix, dims: Sequence[int], order: Sequence[int]) -> Matrix:
    """Compose ``m`` with the leg reordering of its codomain (P @ m without forming P)."""
    pi = leg_order_index(dims, order)
    return m.select_rows(np.argsort(pi))


def permute_domain(m: Matrix, dims: Sequence[int], order: Sequence[int]) -> Matrix:
    """Precompose ``m`` with the leg reordering of its domain (m @ P without forming P)."""
    return m.select_cols(leg_order_index(dims, order))


def leg_permutation(field: Field, dims: Sequence[int], order: Sequence[int]) -> Matrix:
    """Permutation matrix sending basis tuple (i_1..i_m) to (i_order[0], i_order[1], ...)."""
    n = math.prod(dims)
    return permute_codomain(Matrix.identity(field, n), dims, order)


def flip_map(field: Field, dim_a: int, dim_b: int) -> Matrix:
    """The flip A⊗B -> B⊗A, e_i⊗f_j -> f_j⊗e_i."""
    if dim_a <= 0 or dim_b <= 0:
        raise ValueError("dimensions must be positive")
    return leg_permutation(field, (dim_a, dim_b), (1, 0))


def leg_embed(t: Matrix, legs: Sequence[int], space: LegSpace | Sequence[int]) -> Matrix:
    """Operator acting as ``t`` on the listed legs (1-based, in that order), identity elsewhere."""
    if not isinstance(space, LegSpace):
        space = LegSpace(tuple(space))
    legs = [int(l) for l in legs]
    m = len(space.dims)
    if len(set(legs)) != len(legs):
        raise ValueError(f"repeated leg in {legs}")
    if any(l < 1 or l > m for l in legs):
        raise ValueError(f"leg out of range in {legs} for {m} legs")
    sel = [l - 1 for l in legs]
    inner = math.prod(space.dims[k] for k in sel)
    if t.shape != (inner, inner):
        raise ValueError(f"operator of shape {t.shape} does not act on legs {legs} of {space.dims}")
    rest = [k for k in range(m) if k not in sel]
    big = kron(t, Matrix.identity(t.field, math.prod(space.dims[k] for k in rest)))
    pi = leg_order_index(space.dims, sel + rest)
    return Matrix(t.field, big.num[np.ix_(pi, pi)], big.den)
