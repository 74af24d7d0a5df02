"""Check verdicts with human-readable witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .linalg import Matrix

TENSOR = "⊗"


def tensor_labels(*factors: Sequence[str]) -> list[str]:
    """Basis labels of a tensor product, row-major."""
    out = [""]
    for names in factors:
        out = [f"{a}{TENSOR}{b}" if a else b for a in out for b in names]
    return out


def format_vector(v: Matrix, labels: Sequence[str]) -> str:
    """Render a column vector as a linear combination of basis labels."""
    terms = []
    for (i, _), c in ((ij, v[ij]) for ij in v.nonzero()):
        coeff = v.field.format(c)
        sign = "-" if coeff.startswith("-") else "+"
        coeff = coeff.lstrip("-")
        terms.append((sign, labels[i] if coeff == "1" else f"{coeff}*{labels[i]}"))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, t in terms[1:]:
        text += f" {sign} {t}"
    return text


@dataclass(frozen=True)
class Check:
    """Verdict of one exact identity; truthy iff it holds."""

    name: str
    passed: bool
    witness: dict | None = None

    def __bool__(self):
        return self.passed

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name}"
        if not self.witness:
            return f"FAIL {self.name}"
        detail = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        return f"FAIL {self.name}: {detail}"

    def to_dict(self) -> dict:
        d = {"name": self.name, "verdict": "pass" if self.passed else "fail"}
        if self.witness:
            d["witness"] = dict(self.witness)
        return d


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def __iter__(self) -> Iterator[Check]:
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def extend(self, other) -> "Report":
        self.checks.extend(other)
        return self

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def compare_maps(
    name: str,
    lhs: Matrix,
    rhs: Matrix,
    domain: Sequence[str],
    codomain: Sequence[str],
) -> Check:
    """Exact comparison of two linear maps; the witness is the first differing basis input."""
    if lhs.shape != rhs.shape:
        raise ValueError(f"{name}: shape mismatch {lhs.shape} vs {rhs.shape}")
    if lhs == rhs:
        return Check(name, True)
    diff = lhs - rhs
    j = min(c for _, c in diff.nonzero())
    return Check(
        name,
        False,
        {
            "input": domain[j],
            "lhs": format_vector(lhs.col(j), codomain),
            "rhs": format_vector(rhs.col(j), codomain),
        },
    )
