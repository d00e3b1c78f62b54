"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (bad input data, failed
check), 2 on a usage error (argparse).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bases, classify, codes, geometry
from .gf2 import GF2Matrix, standard_form
from .hypergraph import PreHypergraph, is_hypergraph, parse_inline


class DomainError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None


def _load_hypergraph(args) -> PreHypergraph:
    if getattr(args, "hypergraph", None):
        return parse_inline(args.hypergraph)
    if getattr(args, "file", None):
        return PreHypergraph.from_json(_read(args.file))
    raise DomainError("give --hypergraph uniform:k,n or --file PATH")


def _hypergraph_arg(text: str) -> PreHypergraph:
    """Positional argument that is either ``uniform:k,n`` or a JSON file path."""
    if text.startswith("uniform:"):
        return parse_inline(text)
    return PreHypergraph.from_json(_read(text))


def _load_vertex_set(text: str) -> geometry.VertexSet01:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(stripped)
        if "sets" in obj:
            return geometry.parity_polytope(PreHypergraph.from_json(stripped))
        return geometry.vertex_set_from_json(stripped)
    return geometry.from_vrep(text)


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--hypergraph", metavar="SPEC", help="inline family, e.g. uniform:2,3")
    g.add_argument("--file", metavar="PATH", help='JSON hypergraph {"n": N, "sets": [[1], ...]}')


def cmd_vertices(args, out) -> int:
    a = _load_hypergraph(args)
    m = bases.statistic_matrix(a, args.basis)
    if args.format == "json":
        out.write(json.dumps(m.to_dict()) + "\n")
    else:
        out.write(m.to_tsv())
    return 0


def cmd_fvector(args, out) -> int:
    if args.vertices:
        v = _load_vertex_set(_read(args.vertices))
    else:
        v = geometry.parity_polytope(_load_hypergraph(args))
    lattice = geometry.face_lattice(v, force=args.force)
    if args.format == "json":
        out.write(lattice.to_json() + "\n")
        return 0
    for d, count in enumerate(lattice.f_vector):
        out.write(f"{d} {count}\n")
    out.write(f"sum {lattice.total}\n")
    out.write(f"simple {'y' if geometry.is_simple(lattice) else 'n'}\n")
    return 0


def cmd_code(args, out) -> int:
    if args.action == "from-hypergraph":
        c = codes.code_from_hypergraph(_hypergraph_arg(args.input))
        out.write("\n".join(c.generator.to_strings()) + "\n")
        return 0
    g = GF2Matrix.from_strings(_read(args.input).splitlines())
    if args.action == "distance":
        out.write(f"{codes.min_distance(codes.LinearCode(g))}\n")
        return 0
    if args.standardize:
        g, perm = standard_form(g)
        sys.stderr.write("column order: " + " ".join(str(p + 1) for p in perm) + "\n")
    a, report = codes.hypergraph_from_generator(g)
    for j in report.atom_copies:
        sys.stderr.write(f"dropped column {a.n + j + 1}: copy of an atom\n")
    for j in report.repeated:
        sys.stderr.write(f"dropped column {a.n + j + 1}: repeats an earlier column\n")
    out.write(a.to_json() + "\n")
    return 0


def cmd_classify(args, out) -> int:
    family = classify.enumerate_Pn(args.n, force=args.force)
    for k, count in enumerate(classify.counts_by_k(family, args.n), start=1):
        out.write(f"{k}\t{count}\n")
    out.write(f"total\t{len(family)}\n")
    if args.list:
        for p in family:
            out.write(",".join(p.strings()) + "\n")
    return 0


def _approx(x: int) -> str:
    s = str(x)
    if len(s) <= 3:
        return s
    return f"{s[0]}.{s[1:3]}e{len(s) - 1}"


def cmd_count(args, out) -> int:
    if args.n < 1:
        raise DomainError("--n must be at least 1")
    rows = classify.count_cnk(args.n)
    for n, row in enumerate(rows, start=1):
        total = sum(row)
        if args.approx:
            out.write(f"{n}\t{_approx(total)}\n")
        else:
            out.write("\t".join([str(n)] + [str(c) for c in row] + [str(total)]) + "\n")
    return 0


def cmd_convert(args, out) -> int:
    if args.input.startswith("uniform:"):
        v = geometry.parity_polytope(parse_inline(args.input))
        src = "json"
    else:
        text = _read(args.input)
        v = _load_vertex_set(text)
        src = "json" if text.lstrip().startswith("{") else "vrep"
    target = args.to or ("json" if src == "vrep" else "vrep")
    if target == "vrep":
        out.write(geometry.to_vrep(v))
    else:
        out.write(geometry.vertex_set_to_json(v) + "\n")
    return 0


def cmd_check(args, out) -> int:
    ok = True
    if args.prop4 is not None:
        n = args.prop4
        if not 1 <= n <= 5:
            raise DomainError("--prop4 supports 1 <= n <= 5")
        pairs = bad = 0
        for p in classify.enumerate_Pn(n):
            for u in p.index2_subgroups():
                pairs += 1
                if not classify.prop4_checks(p, u).all_equal():
                    bad += 1
        ok = bad == 0
        out.write(f"prop4 n={n} pairs={pairs} {'ok' if ok else f'FAILED ({bad})'}\n")
        return 0 if ok else 1
    a = _load_hypergraph(args)
    if is_hypergraph(a):
        dim = bases.interaction_space_dim(a)
        basis_ok = bases.verify_parity_basis(a) and dim == len(a) + 1
        ok &= basis_ok
        out.write(f"prop1 dim={dim} {'ok' if basis_ok else 'FAILED'}\n")
    else:
        out.write("prop1 skipped: not a hypergraph\n")
    if a.n <= 8:
        hom = codes.verify_homomorphism(a)
        ok &= hom
        out.write(f"prop2 {'ok' if hom else 'FAILED'}\n")
    else:
        out.write("prop2 skipped: N > 8\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paritypoly",
        description="Parity polytopes of hierarchical models, linear codes and group polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vertices", help="emit a statistic matrix (rows = configurations)")
    _add_source(p)
    p.add_argument("--basis", choices=bases.KINDS, default="parity")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("fvector", help="face counts by dimension")
    _add_source(p)
    p.add_argument("--vertices", metavar="PATH", help="vertex set as JSON or V-representation")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--force", action="store_true", help="ignore the size guard")
    p.add_argument("--threads", type=int, default=1, help="accepted; output never depends on it")
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("code", help="hypergraph <-> linear code")
    p.add_argument("action", choices=("from-hypergraph", "to-hypergraph", "distance"))
    p.add_argument("input", help="hypergraph JSON / uniform:k,n, or a 0/1 matrix file")
    p.add_argument("--standardize", action="store_true",
                   help="to-hypergraph: bring the matrix to standard form first")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("classify", help="enumerate full-dimensional group polytopes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print every vertex set")
    p.add_argument("--force", action="store_true", help="allow n beyond the default limit")
    p.add_argument("--threads", type=int, default=1, help="accepted; output never depends on it")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("count", help="c_n(k) triangle from the counting recursion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--approx", action="store_true", help="row totals in d.dde<exp> form")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("convert", help="JSON vertex set <-> cdd V-representation")
    p.add_argument("input", help="file (JSON, V-representation or hypergraph JSON) or uniform:k,n")
    p.add_argument("--to", choices=("json", "vrep"))
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("check", help="run the basis, homomorphism or lift-equivalence checks")
    _add_source(p)
    p.add_argument("--prop4", type=int, metavar="N", help="check all lift conditions on P_N")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (DomainError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


run = main

if __name__ == "__main__":
    sys.exit(main())
