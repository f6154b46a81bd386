"""Command line interface over the library.

Commands operate on algebra documents: the liecore algebra format,
optionally followed by named representation blocks and an isomorphism
block.  A full document looks like

    dim 3
    basis h e f
    bracket [1, 2, [2:2]]
    bracket [1, 3, [3:-2]]
    bracket [2, 3, [1:1]]

    rep defining
    space_dim 2
    matrix 1 0 0 -1
    matrix 0 1 0 0
    matrix 0 0 1 0

    iso other.alg
    image 1 0 0
    ...

Each `matrix` line holds one generator image, row-major.  The iso block
names a reference algebra file (relative to the document) and lists the
image of each reference basis element in this algebra's coordinates.

Exit codes: 0 success, 1 input or usage error, 2 mathematical
inconsistency (a verified identity failed, which indicates a bug, never
bad input).

The only environment variable honored is LIECHARPOLY_WIDTH: a positive
integer soft-wrap width for text reports.  Unset means no wrapping, which
keeps report output byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import textwrap
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import charpoly as cp
from . import liecore, ratmat, typea
from .exactpoly import structure_checks
from .liecore import AlgebraFormatError, LieAlgebra


class UsageError(Exception):
    """Raised for bad invocations; mapped to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors by default; this artifact
    # reserves 2 for mathematical inconsistency, so remap to 1.
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class IsoBlock:
    target: str
    images: ratmat.Matrix


@dataclass(frozen=True)
class AlgebraDocument:
    algebra: LieAlgebra
    reps: dict[str, cp.Representation]
    iso: IsoBlock | None


_REP_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_-]*$")


def parse_document(text: str) -> AlgebraDocument:
    """Parse a full algebra document (algebra + rep and iso blocks)."""
    lines = text.splitlines()
    algebra_lines: list[str] = []
    block_start = None
    for idx, raw in enumerate(lines):
        stripped = liecore.strip_comment(raw).strip()
        keyword = stripped.split(" ", 1)[0] if stripped else ""
        if keyword in ("rep", "iso"):
            block_start = idx
            break
        algebra_lines.append(raw)
    L = liecore.parse_algebra("\n".join(algebra_lines))
    reps: dict[str, cp.Representation] = {}
    iso: IsoBlock | None = None
    if block_start is None:
        return AlgebraDocument(L, reps, iso)

    idx = block_start
    while idx < len(lines):
        line_no = idx + 1
        stripped = liecore.strip_comment(lines[idx]).strip()
        if not stripped:
            idx += 1
            continue
        keyword, _, rest = stripped.partition(" ")
        rest = rest.strip()
        if keyword == "rep":
            idx = _parse_rep_block(lines, idx, L, reps)
        elif keyword == "iso":
            if iso is not None:
                raise AlgebraFormatError("syntax", line_no, "duplicate iso block")
            iso, idx = _parse_iso_block(lines, idx, L)
        else:
            raise AlgebraFormatError("syntax", line_no, f"unexpected field {keyword!r}")
    return AlgebraDocument(L, reps, iso)


def _parse_rep_block(lines, idx, L, reps):
    line_no = idx + 1
    _, _, name = liecore.strip_comment(lines[idx]).strip().partition(" ")
    name = name.strip()
    if not _REP_NAME_RE.match(name):
        raise AlgebraFormatError("syntax", line_no, f"invalid rep name {name!r}")
    if name in reps:
        raise AlgebraFormatError("syntax", line_no, f"duplicate rep name {name!r}")
    idx += 1
    space_dim = None
    rows: list[list[Fraction]] = []
    while idx < len(lines):
        stripped = liecore.strip_comment(lines[idx]).strip()
        if not stripped:
            idx += 1
            continue
        keyword, _, rest = stripped.partition(" ")
        if keyword in ("rep", "iso"):
            break
        line_no = idx + 1
        if keyword == "space_dim":
            if space_dim is not None:
                raise AlgebraFormatError("syntax", line_no, "duplicate space_dim")
            if not rest.strip().isdigit() or int(rest) < 1:
                raise AlgebraFormatError("syntax", line_no, f"bad space_dim {rest.strip()!r}")
            space_dim = int(rest)
        elif keyword == "matrix":
            if space_dim is None:
                raise AlgebraFormatError("syntax", line_no, "matrix before space_dim")
            try:
                entries = [Fraction(tok) for tok in rest.split()]
            except (ValueError, ZeroDivisionError):
                raise AlgebraFormatError("syntax", line_no, f"bad matrix entries {rest!r}")
            if len(entries) != space_dim * space_dim:
                raise AlgebraFormatError(
                    "syntax", line_no,
                    f"expected {space_dim * space_dim} entries, got {len(entries)}",
                )
            rows.append(entries)
        else:
            raise AlgebraFormatError("syntax", line_no, f"unexpected field {keyword!r} in rep block")
        idx += 1
    if space_dim is None:
        raise AlgebraFormatError("syntax", line_no, f"rep {name!r} missing space_dim")
    if len(rows) != L.dim:
        raise AlgebraFormatError(
            "syntax", line_no, f"rep {name!r} has {len(rows)} matrices, expected {L.dim}"
        )
    rep = cp.rep_from_rows(space_dim, rows)
    report = cp.rep_validate(L, rep)
    if not report.ok:
        pairs = ", ".join(f"({i+1},{j+1})" for i, j in report.violations)
        raise AlgebraFormatError(
            "homomorphism", line_no, f"rep {name!r} violates the bracket relations at {pairs}"
        )
    reps[name] = rep
    return idx


def _parse_iso_block(lines, idx, L):
    line_no = idx + 1
    _, _, target = liecore.strip_comment(lines[idx]).strip().partition(" ")
    target = target.strip()
    if not target:
        raise AlgebraFormatError("syntax", line_no, "iso block needs a target file name")
    idx += 1
    images: list[list[Fraction]] = []
    while idx < len(lines):
        stripped = liecore.strip_comment(lines[idx]).strip()
        if not stripped:
            idx += 1
            continue
        keyword, _, rest = stripped.partition(" ")
        if keyword in ("rep", "iso"):
            break
        line_no = idx + 1
        if keyword != "image":
            raise AlgebraFormatError("syntax", line_no, f"unexpected field {keyword!r} in iso block")
        try:
            entries = [Fraction(tok) for tok in rest.split()]
        except (ValueError, ZeroDivisionError):
            raise AlgebraFormatError("syntax", line_no, f"bad image entries {rest!r}")
        if len(entries) != L.dim:
            raise AlgebraFormatError(
                "syntax", line_no, f"expected {L.dim} coordinates, got {len(entries)}"
            )
        images.append(entries)
        idx += 1
    return IsoBlock(target, images), idx


def load_document(path: str | Path) -> AlgebraDocument:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def render_document(doc: AlgebraDocument, header: str | None = None) -> str:
    """Serialize a document back to its input format (round-trip safe)."""
    out = liecore.render_algebra(doc.algebra, header)
    for name in doc.reps:
        rep = doc.reps[name]
        out += f"\nrep {name}\nspace_dim {rep.space_dim}\n"
        for m in rep.mats:
            out += "matrix " + " ".join(_ftext(x) for row in m for x in row) + "\n"
    if doc.iso:
        out += f"\niso {doc.iso.target}\n"
        for row in doc.iso.images:
            out += "image " + " ".join(_ftext(x) for x in row) + "\n"
    return out


def _ftext(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _pick_rep(doc: AlgebraDocument, rep_name: str | None, adjoint: bool) -> cp.Representation:
    if rep_name is not None and adjoint:
        raise UsageError("--rep and --adjoint are mutually exclusive")
    if rep_name is not None:
        if rep_name not in doc.reps:
            raise UsageError(
                f"no rep named {rep_name!r}; available: {', '.join(sorted(doc.reps)) or 'none'}"
            )
        return doc.reps[rep_name]
    return cp.adjoint_rep(doc.algebra)


def cmd_charpoly(args) -> int:
    doc = load_document(args.file)
    rep = _pick_rep(doc, args.rep, args.adjoint)
    print(cp.char_poly(rep).poly.to_text())
    return 0


def cmd_nilpotent(args) -> int:
    doc = load_document(args.file)
    verdicts = cp.nilpotency_tests(doc.algebra)
    verdict = "true" if verdicts.theorem_verdict else "false"
    print(f"nilpotent: {verdict} (p_ad = {verdicts.p_ad.to_text()})")
    return 0


def cmd_solvable(args) -> int:
    doc = load_document(args.file)
    rep = _pick_rep(doc, args.rep, args.adjoint)
    result = cp.solvability_test(doc.algebra, rep)
    if not result.consistent:
        print("error: solvability criterion contradicts the series oracle", file=sys.stderr)
        return 2
    if result.outcome == "solvable-confirmed":
        print(f"solvable: true (factorization: {result.factorization.factor_text()})")
    elif result.outcome == "non-solvable-confirmed":
        deg = result.factorization.residual.total_degree()
        print(f"solvable: false (residual of degree {deg})")
    else:
        print("solvable: undetermined-over-Q (irrational eigenvalue in a generator spectrum)")
    return 0


_WEIGHT_RE = re.compile(r"^sl(\d+):(\d+(?:,\d+)*)$")


def parse_weight_spec(spec: str) -> tuple[int, tuple[int, ...]]:
    """Parse `slN:a1,...,a{N-1}` into (n, fundamental coefficients)."""
    m = _WEIGHT_RE.match(spec)
    if not m:
        raise UsageError(f"bad weight spec {spec!r}; expected slN:a1,...,a{{N-1}}")
    n = int(m.group(1))
    coeffs = tuple(int(x) for x in m.group(2).split(","))
    if n < 2:
        raise UsageError("weight spec needs N >= 2")
    if len(coeffs) != n - 1:
        raise UsageError(f"sl{n} takes {n - 1} coefficients, got {len(coeffs)}")
    return n, coeffs


def _linearize_spec(spec: str) -> typea.LinearizedPoly:
    n, coeffs = parse_weight_spec(spec)
    parts = typea.partition_from_dominant(coeffs)
    return typea.linearize_from_character(typea.weight_multiplicities(parts, n))


def cmd_linearize(args) -> int:
    print(_linearize_spec(args.weight).to_text())
    return 0


def cmd_resolve(args) -> int:
    f = _linearize_spec(args.left)
    g = _linearize_spec(args.right)
    if f.rank != g.rank:
        raise UsageError("resolve requires weights of the same sl_n")
    print(typea.resolution_product(f, g).to_text())
    return 0


def cmd_sl2(args) -> int:
    if args.m < 0:
        raise UsageError("highest weight must be non-negative")
    print(typea.sl2_closed_form(args.m).to_text())
    return 0


def cmd_verify_iso(args) -> int:
    path = Path(args.file)
    doc = load_document(path)
    if doc.iso is None:
        raise UsageError(f"{path} has no iso block")
    target_path = path.parent / doc.iso.target
    try:
        source = load_document(target_path).algebra
    except FileNotFoundError:
        raise UsageError(f"iso target {target_path} not found")
    if len(doc.iso.images) != source.dim:
        raise UsageError(
            f"iso block has {len(doc.iso.images)} images, reference algebra has dim {source.dim}"
        )
    images = doc.iso.images
    image_matrix = [[images[c][r] for c in range(source.dim)] for r in range(doc.algebra.dim)]
    if ratmat.rank(image_matrix) != source.dim or doc.algebra.dim != source.dim:
        print("isomorphism failed: images are not a basis")
        return 1
    for i in range(source.dim):
        for j in range(i + 1, source.dim):
            coords = source.pair_bracket(i, j)
            lhs = [Fraction(0)] * doc.algebra.dim
            for k, coeff in enumerate(coords):
                if coeff:
                    lhs = [x + coeff * y for x, y in zip(lhs, images[k])]
            rhs = liecore.bracket(doc.algebra, images[i], images[j])
            if lhs != rhs:
                names = source.basis_names
                print(f"isomorphism failed: bracket mismatch at ({names[i]},{names[j]})")
                return 1
    print("isomorphism verified")
    return 0


def algebra_record(name: str, L: LieAlgebra, timing: bool) -> dict:
    """The per-algebra report record, in fixed field order."""
    start = time.perf_counter()
    ad = cp.adjoint_rep(L)
    result = cp.char_poly(ad)
    summary = structure_checks(result.poly)
    codim = cp.codim_factor_check(L)
    verdicts = cp.nilpotency_tests(L)
    solv = cp.solvability_test(L, ad)
    record = {
        "algebra": name,
        "charpoly": result.poly.to_text(),
        "degree": summary.homogeneous_degree,
        "z0_multiplicity": summary.z0_multiplicity,
        "codim": codim.codim,
        "codim_holds": codim.holds,
        "nilpotent": verdicts.theorem_verdict,
        "corollary_agrees": verdicts.corollary_verdict == verdicts.theorem_verdict,
        "solvable_outcome": solv.outcome,
        "consistent": codim.holds and solv.consistent,
    }
    if timing:
        record["seconds"] = round(time.perf_counter() - start, 3)
    return record


def render_record_text(record: dict) -> str:
    width = _output_width()
    lines = []
    for key, value in record.items():
        line = f"{key}: {_json_scalar(value)}"
        if width and len(line) > width:
            wrapped = textwrap.wrap(
                line, width, subsequent_indent="  ",
                break_long_words=False, break_on_hyphens=False,
            )
            lines.extend(wrapped or [line])
        else:
            lines.append(line)
    return "\n".join(lines) + "\n"


def _output_width() -> int | None:
    """Optional soft-wrap width for text reports, from LIECHARPOLY_WIDTH."""
    raw = os.environ.get("LIECHARPOLY_WIDTH")
    if raw is None:
        return None
    try:
        width = int(raw)
    except ValueError:
        raise UsageError(f"LIECHARPOLY_WIDTH must be an integer, got {raw!r}")
    return width if width > 0 else None


def _json_scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def cmd_report(args) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        raise UsageError(f"{directory} is not a directory")
    files = sorted(directory.glob("*.alg"))
    records = []
    for path in files:
        try:
            doc = load_document(path)
        except AlgebraFormatError as exc:
            raise UsageError(f"{path}: {exc}")
        records.append(algebra_record(path.name, doc.algebra, args.timing))
    inconsistent = [r for r in records if not r["consistent"]]
    for i, record in enumerate(records):
        if args.format == "json":
            print(json.dumps(record))
        else:
            if i:
                print()
            print(render_record_text(record), end="")
    if inconsistent:
        print(
            f"error: {len(inconsistent)} record(s) violate verified identities",
            file=sys.stderr,
        )
        return 2
    return 0


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="liecharpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="characteristic polynomial of a representation")
    p.add_argument("file")
    p.add_argument("--rep", help="named representation from the file")
    p.add_argument("--adjoint", action="store_true", help="use the adjoint representation (default)")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("nilpotent", help="nilpotency test via p_ad = z0^n")
    p.add_argument("file")
    p.set_defaults(func=cmd_nilpotent)

    p = sub.add_parser("solvable", help="solvability test via complete reducibility")
    p.add_argument("file")
    p.add_argument("--rep", help="named representation from the file")
    p.add_argument("--adjoint", action="store_true", help="use the adjoint representation (default)")
    p.set_defaults(func=cmd_solvable)

    p = sub.add_parser("linearize", help="linearized charpoly of an sl_n irreducible")
    p.add_argument("weight", help="dominant weight spec, e.g. sl3:1,1")
    p.set_defaults(func=cmd_linearize)

    p = sub.add_parser("resolve", help="resolution product of two linearizations")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("sl2", help="closed-form sl2 irreducible charpoly")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_sl2)

    p = sub.add_parser("verify-iso", help="verify the document's isomorphism block")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_iso)

    p = sub.add_parser("report", help="batch report over a directory of .alg files")
    p.add_argument("dir")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timing", action="store_true", help="add per-record timing (non-deterministic)")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AlgebraFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except cp.ConsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
