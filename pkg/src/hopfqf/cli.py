"""Batch commands over ``.hopf.json`` files.

Exit status: 0 when every check passes, 1 when a check fails (the report
carries witnesses), 2 on usage, I/O or format errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import adjoint, examples, family, hopf
from .fileformat import FormatError, HopfFile, MorphismSpec, parse_file, write_file
from .linalg import Field
from .report import Check, Report, format_vector

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: list[str]
    checks: list[Check] = field(default_factory=list)
    info: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_FAIL

    def add(self, checks) -> None:
        if isinstance(checks, Check):
            checks = [checks]
        self.checks.extend(checks)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "checks": [c.to_dict() for c in self.checks],
            "info": self.info,
            "overall": "pass" if self.passed else "fail",
        }

    def text(self) -> str:
        lines = [f"{k}: {v}" for k, v in self.info.items()]
        lines += [c.line() for c in self.checks]
        lines.append("OVERALL " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# named examples


def _hopf_example(name: str) -> hopf.HopfAlgebraData | None:
    q = Field()
    named = {
        "kZ2": lambda: examples.group_algebra(examples.cyclic_group(2), q),
        "kS3": lambda: examples.group_algebra(examples.symmetric_group(3), q),
        "fnZ2": lambda: examples.function_algebra(examples.cyclic_group(2), q),
        "fnS3": lambda: examples.function_algebra(examples.symmetric_group(3), q),
        "H4": lambda: examples.sweedler_h4(q),
    }
    key = {k.lower(): k for k in named}.get(name.lower())
    if key:
        return named[key]()
    m = re.fullmatch(r"taft:(\d+):(\d+)", name)
    if m:
        return examples.taft(int(m.group(1)), Field(int(m.group(2))))
    return None


def _delta_family(h):
    return family.QuantumFamilyData(h, h, h.alg, h.comult)


def _classical_id_counit(h):
    return family.classical_family([h.alg.identity(), h.unit @ h.counit], h, h)


_FAMILY_BUILDERS: dict[str, Callable] = {"classical": _classical_id_counit, "delta": _delta_family}
_MORPHISM_BUILDERS: dict[str, Callable] = {
    "id": lambda h: adjoint.AlgebraMorphism(h, h.alg, h.alg.identity()),
    "counit": lambda h: adjoint.AlgebraMorphism(h, hopf.ground_algebra(h.field), h.counit),
}

EXAMPLE_HELP = (
    "kZ2, kS3, fnZ2, fnS3, H4, taft:N:P (Hopf algebras); M2 (2x2 matrix algebra); "
    "family:classical:<hopf> (classical family {id, unit∘counit}); "
    "family:delta:<hopf> (comultiplication as a family, usually invalid); "
    "morphism:id:<hopf>, morphism:counit:<hopf>"
)


def build_example(name: str):
    h = _hopf_example(name)
    if h is not None:
        return h
    if name == "M2":
        return examples.matrix_algebra(2, Field())
    parts = name.split(":", 2)
    if len(parts) == 3 and parts[0] in ("family", "morphism"):
        table = _FAMILY_BUILDERS if parts[0] == "family" else _MORPHISM_BUILDERS
        inner = _hopf_example(parts[2])
        if parts[1] in table and inner is not None:
            return table[parts[1]](inner)
    raise UsageError(f"unknown example {name!r}; known: {EXAMPLE_HELP}")


# ---------------------------------------------------------------------------
# commands


def _load(path: str, *kinds: str) -> HopfFile:
    hf = parse_file(path)
    if hf.kind not in kinds:
        raise UsageError(f"{path}: kind {hf.kind!r}, expected {' or '.join(kinds)}")
    return hf


def _morphism(path: str, h: hopf.HopfAlgebraData) -> adjoint.AlgebraMorphism:
    spec = _load(path, "morphism").value
    assert isinstance(spec, MorphismSpec)
    try:
        return spec.bind(h)
    except family.InvalidMorphismError as e:
        raise UsageError(f"{path}: {e}") from None


def cmd_check(args, rep: RunReport):
    if args.what == "hopf":
        rep.add(hopf.verify_hopf(_load(args.file, "hopf").value))
        return
    qf = _load(args.file, "family").value
    rep.add(family.quantum_family_report(qf))
    rep.add([family.check_u_inverse(qf), family.check_simeq(qf), family.check_alchar(qf)])


def cmd_w(args, rep: RunReport):
    h = _load(args.file, "hopf").value
    rep.add(hopf.check_unitary_inverse(h))
    if args.pentagon:
        rep.add(hopf.check_pentagon(h))


def cmd_theorems(args, rep: RunReport):
    rep.add(family.theorem_report(_load(args.file, "family").value))


def cmd_adjoint(args, rep: RunReport):
    h = _load(args.file, "hopf").value
    ad = adjoint.adjoint_coaction(h)
    labels = [f"{a}⊗{b}" for a in h.basis_names for b in h.basis_names]
    rep.info["ad"] = {n: format_vector(ad.col(i), labels) for i, n in enumerate(h.basis_names)}
    rep.add(adjoint.check_ad_identities(h))
    if not args.as_family:
        is_hom, central = adjoint.is_ad_homomorphism(h)
        rep.info["ad homomorphism"] = is_hom.passed
        rep.info["ad central"] = central.passed
        if is_hom.passed != central.passed:
            rep.add(Check("homomorphism criterion", False, {"is_hom": is_hom.passed, "central": central.passed}))
        return
    try:
        qf = adjoint.ad_as_family(h)
    except adjoint.AdjointNotHomomorphism as e:
        rep.add(e.check)
        return
    rep.add(family.theorem_report(qf))


def _describe_quotient(q: adjoint.QuotientPresentation, names, rep: RunReport):
    rep.info["ideal dimension"] = q.ideal_dim
    rep.info["ideal basis"] = [format_vector(v, names) for v in q.ideal_basis]
    rep.info["quotient basis"] = list(q.quotient.basis_names)
    rep.info["projection"] = {n: format_vector(q.projection.col(i), q.quotient.basis_names) for i, n in enumerate(names)}


def cmd_cocentralizer(args, rep: RunReport):
    h = _load(args.file, "hopf").value
    phi = _morphism(args.phi, h)
    if not phi.surjective:
        raise UsageError(f"{args.phi}: Φ is not surjective")
    try:
        q, psi_u = adjoint.cocentralizer(phi, strict=True)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _describe_quotient(q, h.basis_names, rep)
    rep.add(adjoint.cocommute(phi, psi_u))
    if args.bialgebra:
        ib = adjoint.induced_bialgebra(h, q)
        rep.add(ib.report)
        rep.info["antipode descends"] = ib.antipode_descends


def cmd_cocommute(args, rep: RunReport):
    h = _load(args.file, "hopf").value
    phi, psi = _morphism(args.phi, h), _morphism(args.psi, h)
    for name, m in (("phi", phi), ("psi", psi)):
        if not m.surjective:
            raise UsageError(f"{name}: morphism is not surjective")
    via_d = adjoint.cocommute(phi, psi, adjoint.CocommuteMode.VIA_COPRODUCT)
    via_ad = adjoint.cocommute(phi, psi, adjoint.CocommuteMode.VIA_ADJOINT)
    rep.add([via_d, via_ad])


def cmd_example(args, rep: RunReport):
    value = build_example(args.name)
    try:
        write_file(value, args.output)
    except OSError as e:
        raise UsageError(f"{args.output}: {e.strerror or e}") from None
    rep.info["wrote"] = args.output


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hopfqf", description="Exact checks for finite-dimensional Hopf algebras and quantum families.")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print the report as JSON")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="verify Hopf axioms or a quantum family")
    c.add_argument("what", choices=["hopf", "qfam"])
    c.add_argument("file")
    c.set_defaults(run=cmd_check)

    c = sub.add_parser("w", parents=[common], help="multiplicative unitary checks")
    c.add_argument("file")
    c.add_argument("--pentagon", action="store_true")
    c.set_defaults(run=cmd_w)

    c = sub.add_parser("theorems", parents=[common], help="defining identity, leg commutation, counit and antipode for a family")
    c.add_argument("file")
    c.set_defaults(run=cmd_theorems)

    c = sub.add_parser("adjoint", parents=[common], help="adjoint coaction identities")
    c.add_argument("file")
    c.add_argument("--as-family", action="store_true")
    c.set_defaults(run=cmd_adjoint)

    c = sub.add_parser("cocentralizer", parents=[common], help="cocentralizer quotient of a morphism")
    c.add_argument("file")
    c.add_argument("--phi", required=True)
    c.add_argument("--bialgebra", action="store_true")
    c.set_defaults(run=cmd_cocentralizer)

    c = sub.add_parser("cocommute", parents=[common], help="test whether two morphisms cocommute")
    c.add_argument("file")
    c.add_argument("--phi", required=True)
    c.add_argument("--psi", required=True)
    c.set_defaults(run=cmd_cocommute)

    c = sub.add_parser("example", parents=[common], help=f"write a named example: {EXAMPLE_HELP}")
    c.add_argument("name")
    c.add_argument("-o", "--output", required=True)
    c.set_defaults(run=cmd_example)
    return p


def run(argv: Sequence[str]) -> tuple[int, RunReport | None, str | None]:
    """Execute a command line; returns (exit code, report, error message)."""
    argv = list(argv)
    rep = RunReport(argv)
    try:
        args = build_parser().parse_args(argv)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            args.run(args, rep)
    except (UsageError, FormatError) as e:
        return EXIT_USAGE, None, str(e)
    except family.InvalidMorphismError as e:
        return EXIT_USAGE, None, str(e)
    return rep.exit_code, rep, None


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    code, rep, err = run(argv)
    as_json = "--json" in argv
    if err is not None:
        if as_json:
            print(json.dumps({"command": argv, "error": err, "overall": "error"}, ensure_ascii=False))
        else:
            print(f"error: {err}", file=sys.stderr)
        return code
    print(json.dumps(rep.to_dict(), ensure_ascii=False, indent=2) if as_json else rep.text())
    return code


if __name__ == "__main__":
    sys.exit(main())
