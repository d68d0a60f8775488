"""Command-line front end.

Subcommands:
    solve <system.json>                solve a system of additive equations
    tables <complex|quaternion|octonion>   print the conversion tables
    verify <tables|teichmueller|shifts|quasidet>   run a verification suite
    basis <algebra> [--order ...]      print the orbit generators
    algebra builtin <name> [--a --b]   emit an algebra definition file
    map convert --algebra ... --coords ...   coordinates -> standard components
    map basis --algebra ...            same as `basis`

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 singular system.
All printed fractions are plain p/q strings and re-parse exactly.

File formats (JSON):
  algebra definition: {"dim": n, "labels": [...], "unit": 0,
                       "constants": [[i, j, k, "p/q"], ...]}
  system definition:  {"algebra": "<builtin name or path>",
                       "matrix": [[entry, ...], ...], "rhs": [[coord, ...], ...]}
    over the complex field an entry may be a string "p/q + r/s*I" meaning
    z -> (p/q) z + (r/s) conj(z)  (plain "p/q" is multiplication);
    for any algebra an entry may be an n x n grid of fraction strings.
  coordinate matrix files: one row per line, fraction strings separated
  by whitespace.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import exact, golden
from .algebras import (complex_algebra, conjugate, conjugation_coords,
                       octonion_algebra, quaternion_algebra, QuaternionParams)
from .core import (AlgElement, FreeAlgebra, format_element, multiply,
                   random_element)
from .errors import (FreeAlgebraError, InvalidAlgebra, MinorSingular,
                     NotRepresentable, SingularMap, SingularSystem,
                     SingularTensor)
from .linmap import (LinearMap, b_matrix, compose, left_associator_map,
                     left_shift, representation_basis, right_associator_map,
                     right_shift, standard_from_coords)
from .solver import (ComplexAdditiveMap, MapMatrix, inverse_map_matrix,
                     quasideterminant, solve_additive)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_SINGULAR = 3

BUILTIN_NAMES = ("complex", "quaternion", "octonion")


# ---------------------------------------------------------------------------
# reports

@dataclass
class Check:
    name: str
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class VerificationReport:
    """Outcome of one verify suite; pass iff expected == actual exactly."""

    subject: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, expected: str, actual: str) -> None:
        self.checks.append(Check(name, expected, actual))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def render(self, machine: bool) -> str:
        lines = []
        if machine:
            lines.append(f"subject={self.subject}")
            for c in self.checks:
                lines.append(f"check.{c.name}={'PASS' if c.passed else 'FAIL'}")
                if not c.passed:
                    lines.append(f"expected.{c.name}={c.expected}")
                    lines.append(f"actual.{c.name}={c.actual}")
            lines.append(f"result={'PASS' if self.ok else 'FAIL'}")
        else:
            lines.append(f"verification suite: {self.subject}")
            for c in self.checks:
                if c.passed:
                    lines.append(f"  [ok]   {c.name}")
                else:
                    lines.append(f"  [FAIL] {c.name}")
                    lines.append(f"         expected: {c.expected}")
                    lines.append(f"         actual:   {c.actual}")
            good = sum(c.passed for c in self.checks)
            lines.append(f"result: {'PASS' if self.ok else 'FAIL'} "
                         f"({good}/{len(self.checks)} checks)")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# wire formats

def fracstr(value: Fraction) -> str:
    return str(value)


def vector_str(coords) -> str:
    return " ".join(fracstr(c) for c in coords)


def matrix_str(rows) -> str:
    return "; ".join(vector_str(row) for row in rows)


def parse_vector(text: str) -> list[Fraction]:
    return [Fraction(tok) for tok in text.split()]


def make_builtin(name: str, a=None, b=None) -> FreeAlgebra:
    if name == "complex":
        return complex_algebra()
    if name == "quaternion":
        if a is None and b is None:
            return quaternion_algebra()
        params = QuaternionParams(Fraction(a if a is not None else -1),
                                  Fraction(b if b is not None else -1))
        return quaternion_algebra(params)
    if name == "octonion":
        return octonion_algebra()
    raise InvalidAlgebra(f"unknown builtin algebra {name!r}")


def algebra_to_json(algebra: FreeAlgebra) -> dict:
    doc = {
        "dim": algebra.dim,
        "labels": list(algebra.labels),
        "constants": [[i, j, k, fracstr(v)] for i, j, k, v in algebra.constants],
    }
    if algebra.unit_index is not None:
        doc["unit"] = algebra.unit_index
    return doc


def algebra_from_json(doc: dict) -> FreeAlgebra:
    try:
        dim = int(doc["dim"])
        labels = [str(s) for s in doc["labels"]]
        constants = [(int(i), int(j), int(k), Fraction(str(v)))
                     for i, j, k, v in doc["constants"]]
    except (KeyError, TypeError, ValueError) as err:
        raise InvalidAlgebra(f"malformed algebra definition: {err}") from None
    unit = doc.get("unit")
    return FreeAlgebra(dim, labels, constants,
                       unit_index=None if unit is None else int(unit))


def load_algebra(source: str) -> FreeAlgebra:
    """Resolve a builtin name or a definition-file path."""
    if source in BUILTIN_NAMES:
        return make_builtin(source)
    with open(source, "r", encoding="utf-8") as fh:
        return algebra_from_json(json.load(fh))


def load_matrix_file(path: str) -> list[list[Fraction]]:
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append(parse_vector(line))
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise InvalidAlgebra("matrix file must have equal-length nonempty rows")
    return rows


def parse_complex_entry(text: str, algebra: FreeAlgebra) -> LinearMap:
    """Parse 'p/q + r/s*I' (z -> (p/q) z + (r/s) conj(z)) into a map."""
    compact = text.replace(" ", "")
    if not compact:
        raise InvalidAlgebra("empty matrix entry")
    terms = []
    start = 0
    for pos in range(1, len(compact)):
        if compact[pos] in "+-" and compact[pos - 1] not in "+-*/":
            terms.append(compact[start:pos])
            start = pos
    terms.append(compact[start:])
    plain = Fraction(0)
    conj_part = Fraction(0)
    for term in terms:
        sign = Fraction(1)
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        if term == "I":
            conj_part += sign
        elif term.endswith("*I"):
            conj_part += sign * Fraction(term[:-2])
        else:
            plain += sign * Fraction(term)
    return ComplexAdditiveMap(algebra.element([plain, 0]),
                              algebra.element([conj_part, 0])).to_linear_map()


def load_system(path: str) -> tuple[FreeAlgebra, MapMatrix, list[AlgElement]]:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    try:
        algebra = load_algebra(str(doc["algebra"]))
        matrix_doc = doc["matrix"]
        rhs_doc = doc["rhs"]
    except KeyError as err:
        raise InvalidAlgebra(f"system file misses field {err}") from None
    entries = []
    for row in matrix_doc:
        entry_row = []
        for cell in row:
            if isinstance(cell, str):
                if algebra.tag != "complex":
                    raise InvalidAlgebra(
                        "string entries are defined over the complex field only")
                entry_row.append(parse_complex_entry(cell, algebra))
            else:
                coords = [[Fraction(str(v)) for v in r] for r in cell]
                entry_row.append(LinearMap(algebra, algebra, coords))
        entries.append(entry_row)
    rhs = [algebra.element([Fraction(str(v)) for v in coords]) for coords in rhs_doc]
    return algebra, MapMatrix(entries), rhs


# ---------------------------------------------------------------------------
# verify suites

def _relation_str(rel: dict) -> str:
    return " ".join(f"{fracstr(rel[key])}@{key[0]}{key[1]}" for key in sorted(rel))


def _bm_row_relation(bm, k: int, m: int) -> dict:
    n = bm.algebra.dim
    row = bm.entries[bm.row_index(k, m)]
    return {(i, j): row[bm.col_index(i, j)]
            for i in range(n) for j in range(n) if row[bm.col_index(i, j)]}


def _inv_row_relation(inv, n: int, i: int, j: int) -> dict:
    row = inv[i * n + j]
    return {(k, m): row[k * n + m]
            for k in range(n) for m in range(n) if row[k * n + m]}


def _verify_conversion_tables() -> VerificationReport:
    report = VerificationReport("tables")
    cases = [
        ("H", quaternion_algebra(),
         golden.quaternion_coord_relations(), golden.quaternion_standard_relations(),
         golden.QUATERNION_SIGN_MATRIX, golden.QUATERNION_SIGN_MATRIX_INVERSE_NUM,
         golden.QUATERNION_SIGN_MATRIX_DEN, Fraction(-1, 2)),
        ("O", octonion_algebra(),
         golden.octonion_coord_relations(), golden.octonion_standard_relations(),
         golden.OCTONION_SIGN_MATRIX, golden.OCTONION_SIGN_MATRIX_INVERSE_NUM,
         golden.OCTONION_SIGN_MATRIX_DEN, Fraction(-1, 6)),
    ]
    for (name, algebra, coord_rel, std_rel, sign_m, sign_inv_num, den,
         conj_component) in cases:
        n = algebra.dim
        bm = b_matrix(algebra)
        for (k, m) in sorted(coord_rel):
            report.add(f"{name}.coord.f{k}_{m}",
                       _relation_str(coord_rel[(k, m)]),
                       _relation_str(_bm_row_relation(bm, k, m)))
        inv = exact.invert(bm.entries)
        for (i, j) in sorted(std_rel):
            report.add(f"{name}.standard.f{i}{j}",
                       _relation_str(std_rel[(i, j)]),
                       _relation_str(_inv_row_relation(inv, n, i, j)))
        computed_f = [[bm.entries[bm.row_index(k, k)][bm.col_index(i, i)]
                       for i in range(n)] for k in range(n)]
        report.add(f"{name}.sign_matrix",
                   matrix_str([[Fraction(v) for v in row] for row in sign_m]),
                   matrix_str(computed_f))
        finv = [[Fraction(v, den) for v in row] for row in sign_inv_num]
        report.add(f"{name}.sign_matrix.product",
                   matrix_str(exact.identity(n)),
                   matrix_str(exact.mat_mul(computed_f, finv)))
        # conjugation through the component solver
        solution = standard_from_coords(
            LinearMap(algebra, algebra, conjugation_coords(algebra)))
        expected = {(k, k): conj_component for k in range(n)}
        got = {(i, j): v for i, row in enumerate(solution.particular.components)
               for j, v in enumerate(row) if v}
        report.add(f"{name}.conjugation.components",
                   _relation_str(expected), _relation_str(got))
        report.add(f"{name}.conjugation.unique", "1",
                   "1" if solution.is_unique() else "0")
        # conjugation as a sandwich sum, directly on random elements
        rng = random.Random(20100801)
        for sample in range(10):
            z = random_element(algebra, rng)
            acc = algebra.zero()
            for t in range(n):
                e_t = algebra.basis_element(t)
                acc = acc + multiply(multiply(e_t, z), e_t)
            report.add(f"{name}.conjugation.identity.{sample}",
                       vector_str(conjugate(z).coords),
                       vector_str(acc.scaled(conj_component).coords))
    return report


def _verify_teichmueller() -> VerificationReport:
    report = VerificationReport("teichmueller")
    algebra = octonion_algebra()
    rng = random.Random(32303)
    from .core import associator
    zero = vector_str(algebra.zero().coords)
    for sample in range(200):
        a, b, c, d = (random_element(algebra, rng) for _ in range(4))
        lhs = multiply(a, associator(b, c, d)) + multiply(associator(a, b, c), d)
        rhs = (associator(multiply(a, b), c, d)
               - associator(a, multiply(b, c), d)
               + associator(a, b, multiply(c, d)))
        report.add(f"sample.{sample:03d}", zero,
                   vector_str((lhs - rhs).coords))
    return report


def _verify_shifts() -> VerificationReport:
    report = VerificationReport("shifts")
    algebra = octonion_algebra()
    rng = random.Random(380806)
    zero = matrix_str(LinearMap.zero(algebra).coords)
    for sample in range(200):
        a, b = random_element(algebra, rng), random_element(algebra, rng)
        left = (compose(left_shift(a), left_shift(b)) + left_associator_map(a, b)
                - left_shift(multiply(a, b)))
        right = (compose(right_shift(a), right_shift(b))
                 - right_shift(multiply(b, a)) - right_associator_map(b, a))
        report.add(f"left.{sample:03d}", zero, matrix_str(left.coords))
        report.add(f"right.{sample:03d}", zero, matrix_str(right.coords))
    return report


def _random_cadd_matrix(algebra, rng, size: int) -> MapMatrix:
    def entry():
        return ComplexAdditiveMap(
            random_element(algebra, rng, 5),
            random_element(algebra, rng, 5)).to_linear_map()
    return MapMatrix([[entry() for _ in range(size)] for _ in range(size)])


def _verify_quasidet() -> VerificationReport:
    report = VerificationReport("quasidet")
    algebra = complex_algebra()
    rng = random.Random(230310)
    done = {2: 0, 3: 0}
    while min(done.values()) < 25:
        size = 2 if done[2] <= done[3] else 3
        m = _random_cadd_matrix(algebra, rng, size)
        try:
            inverse = inverse_map_matrix(m)
        except SingularSystem:
            continue
        try:
            for i in range(size):
                for j in range(size):
                    recursed = quasideterminant(m, j, i)
                    report.add(f"{size}x{size}.{done[size]:02d}.entry{i}{j}",
                               matrix_str(inverse.entries[i][j].matrix()),
                               matrix_str(exact.invert(recursed.matrix())))
        except (MinorSingular, ValueError):
            continue
        done[size] += 1
    return report


_VERIFY_SUITES = {
    "tables": _verify_conversion_tables,
    "teichmueller": _verify_teichmueller,
    "shifts": _verify_shifts,
    "quasidet": _verify_quasidet,
}


# ---------------------------------------------------------------------------
# commands

def cmd_solve(args) -> int:
    algebra, matrix, rhs = load_system(args.system)
    solution = solve_additive(matrix, rhs)
    lines = []
    if args.machine:
        for idx, x in enumerate(solution):
            lines.append(f"solution.{idx}={vector_str(x.coords)}")
        lines.append("substitution=ok")
    else:
        lines.append(f"system over {algebra.tag or 'user algebra'}, "
                     f"{matrix.rows} equations")
        for idx, x in enumerate(solution):
            lines.append(f"  x{idx} = {format_element(x)}")
        lines.append("substitution check: ok (all equations satisfied exactly)")
    print("\n".join(lines))
    return EXIT_OK


def cmd_tables(args) -> int:
    lines = []
    if args.which == "complex":
        algebra = complex_algebra()
        bm = b_matrix(algebra)
        if args.machine:
            for k in range(2):
                for m in range(2):
                    rel = _bm_row_relation(bm, k, m)
                    lines.append(f"coord.f{k}_{m}={_relation_str(rel)}")
        else:
            lines.append("coordinates of z -> sum f^{ij} e_i z e_j over the "
                         "complex field:")
            for k in range(2):
                for m in range(2):
                    rel = _bm_row_relation(bm, k, m)
                    terms = " ".join(
                        f"{'+' if rel[key] > 0 else '-'}"
                        f"{'' if abs(rel[key]) == 1 else str(abs(rel[key])) + '*'}"
                        f"f^{{{key[0]}{key[1]}}}"
                        for key in sorted(rel))
                    lines.append(f"  f^{k}_{m} = {terms}")
    else:
        algebra = (quaternion_algebra() if args.which == "quaternion"
                   else octonion_algebra())
        n = algebra.dim
        bm = b_matrix(algebra)
        sign = [[bm.entries[bm.row_index(k, k)][bm.col_index(i, i)]
                 for i in range(n)] for k in range(n)]
        inv = exact.invert(sign)
        den = 1
        for row in inv:
            for v in row:
                den = den * v.denominator // math.gcd(den, v.denominator)
        num = [[v * den for v in row] for row in inv]
        if args.machine:
            for r in range(n):
                lines.append(f"F.{r}={vector_str(sign[r])}")
            lines.append(f"Finv.den={den}")
            for r in range(n):
                lines.append(f"Finv.{r}={vector_str(num[r])}")
        else:
            lines.append(f"{args.which}: coordinate block = F * component block")
            lines.append("F =")
            for row in sign:
                lines.append("   " + " ".join(f"{str(v):>3}" for v in row))
            lines.append(f"F^-1 = 1/{den} *")
            for row in num:
                lines.append("   " + " ".join(f"{str(v):>3}" for v in row))
            check = exact.mat_mul(sign, inv) == exact.identity(n)
            lines.append(f"F * F^-1 == identity: {'yes' if check else 'NO'}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = _VERIFY_SUITES[args.suite]()
    print(report.render(args.machine))
    if not report.ok:
        failure = report.first_failure()
        print(f"first failing check: {failure.name}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_basis(args) -> int:
    algebra = load_algebra(args.algebra)
    generators = representation_basis(algebra, args.order)
    lines = []
    if args.machine:
        lines.append(f"generators={len(generators)}")
        for idx, g in enumerate(generators):
            for r, row in enumerate(g.coords):
                lines.append(f"generator.{idx}.{r}={vector_str(row)}")
    else:
        lines.append(f"{len(generators)} generator(s) whose orbits span all "
                     f"linear maps ({args.order}-nested):")
        for idx, g in enumerate(generators):
            lines.append(f"  generator {idx}:")
            for row in g.coords:
                lines.append("    " + " ".join(f"{str(v):>4}" for v in row))
    print("\n".join(lines))
    return EXIT_OK


def cmd_algebra_builtin(args) -> int:
    algebra = make_builtin(args.name, args.a, args.b)
    print(json.dumps(algebra_to_json(algebra), indent=2))
    return EXIT_OK


def cmd_map_convert(args) -> int:
    algebra = load_algebra(args.algebra)
    coords = load_matrix_file(args.coords)
    g = LinearMap(algebra, algebra, coords)
    solution = standard_from_coords(g, args.order)
    lines = []
    if args.machine:
        lines.append(f"rank={solution.rank}")
        lines.append(f"nullity={len(solution.nullspace)}")
        for r, row in enumerate(solution.particular.components):
            lines.append(f"particular.{r}={vector_str(row)}")
        for idx, t in enumerate(solution.nullspace):
            for r, row in enumerate(t.components):
                lines.append(f"nullspace.{idx}.{r}={vector_str(row)}")
    else:
        lines.append(f"component matrix rank {solution.rank}; solution is "
                     f"{'unique' if solution.is_unique() else 'a family'}")
        lines.append("standard components (one solution):")
        for row in solution.particular.components:
            lines.append("   " + " ".join(f"{str(v):>6}" for v in row))
        if solution.nullspace:
            lines.append(f"homogeneous basis ({len(solution.nullspace)} tensors):")
            for t in solution.nullspace:
                lines.append("   " + matrix_str(t.components))
    print("\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freealg",
        description="Exact computations in free finite-dimensional algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a system of additive equations")
    p.add_argument("system", help="system definition file (JSON)")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("tables", help="print conversion tables")
    p.add_argument("which", choices=BUILTIN_NAMES)
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(_VERIFY_SUITES))
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("basis", help="orbit generators of the linear maps")
    p.add_argument("algebra", help="builtin name or definition file")
    p.add_argument("--order", choices=("left", "right"), default="left")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("algebra", help="algebra definition utilities")
    asub = p.add_subparsers(dest="subcommand", required=True)
    pb = asub.add_parser("builtin", help="emit a builtin algebra definition")
    pb.add_argument("name", choices=BUILTIN_NAMES)
    pb.add_argument("--a", default=None, help="quaternion parameter a (p/q)")
    pb.add_argument("--b", default=None, help="quaternion parameter b (p/q)")
    pb.set_defaults(func=cmd_algebra_builtin)

    p = sub.add_parser("map", help="linear-map conversions")
    msub = p.add_subparsers(dest="subcommand", required=True)
    pc = msub.add_parser("convert", help="coordinates to standard components")
    pc.add_argument("--algebra", required=True)
    pc.add_argument("--coords", required=True, help="coordinate matrix file")
    pc.add_argument("--order", choices=("left", "right"), default="left")
    pc.add_argument("--machine", action="store_true")
    pc.set_defaults(func=cmd_map_convert)
    pm = msub.add_parser("basis", help="orbit generators")
    pm.add_argument("--algebra", required=True)
    pm.add_argument("--order", choices=("left", "right"), default="left")
    pm.add_argument("--machine", action="store_true")
    pm.set_defaults(func=cmd_basis)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SingularSystem, SingularMap, SingularTensor, MinorSingular,
            NotRepresentable) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_SINGULAR
    except (FreeAlgebraError, OSError, json.JSONDecodeError, ValueError,
            ZeroDivisionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
