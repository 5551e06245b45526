"""Command-line front end.

    transgress describe <spec> [--json]
    transgress tau <spec> [--mod P] [--json]
    transgress e3 <spec> [--coeff q|P] [--max-degree D] [--bidegrees]
                         [--jobs N] [--force] [--json]
    transgress fixtures [--corpus PATH] [--json]

Exit codes: 0 success, 1 computation refusal (size caps), 2 input error,
3 fixture failure.  JSON output is deterministic: identical invocations
produce byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fixtures as fixtures_mod
from . import lattices, spectral, transgression
from .exactlin import Matrix, det
from .groupspec import GroupSpecParseError, canonical_spec_string, parse_group_spec
from .spectral import WeylCapExceededError
from .transgression import format_combination

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_REFUSED = 1
EXIT_INPUT = 2
EXIT_FIXTURES = 3


def _document(kind: str, group: str | None, payload: dict, provenance=()) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "kind": kind}
    if group is not None:
        doc["group"] = group
    doc["payload"] = payload
    doc["provenance"] = list(provenance)
    return doc


def _matrix_payload(m: Matrix, row_labels, col_labels) -> dict:
    return {
        "rows": len(m),
        "cols": len(m[0]) if m else 0,
        "row_labels": list(row_labels),
        "col_labels": list(col_labels),
        "entries": [list(row) for row in m],
    }


def _render_matrix(payload: dict, out) -> None:
    labels = payload["row_labels"]
    cols = payload["col_labels"]
    widths = [
        max([len(cols[j])] + [len(str(row[j])) for row in payload["entries"]])
        for j in range(payload["cols"])
    ]
    left = max((len(l) for l in labels), default=0) + 2
    out.write(" " * left + "  ".join(f"{c:>{w}}" for c, w in zip(cols, widths)) + "\n")
    for label, row in zip(labels, payload["entries"]):
        cells = "  ".join(f"{x:>{w}d}" for x, w in zip(row, widths))
        out.write(f"{label:<{left}}" + cells + "\n")


def cmd_describe(args, out) -> int:
    g = parse_group_spec(args.spec)
    rs = g.root_system
    center = lattices.center_group(rs)
    theta = lattices.unit_lattice_basis(g).theta
    n = rs.rank
    payload = {
        "lie_type": str(rs.lie_type),
        "rank": n,
        "form": canonical_spec_string(g).split(":", 1)[1],
        "cartan": _matrix_payload(
            rs.cartan,
            [f"alpha_{i}" for i in range(1, n + 1)],
            [f"phi_{j}" for j in range(1, n + 1)],
        ),
        "simple_roots": [list(v) for v in rs.simple_roots],
        "center_invariant_factors": list(center.invariant_factors),
        "center_order": center.order,
        "pi1_order": lattices.pi1_order(g),
        "theta": _matrix_payload(
            theta,
            [f"theta_{i}" for i in range(1, n + 1)],
            [f"phi_{j}" for j in range(1, n + 1)],
        ),
    }
    doc = _document("describe", canonical_spec_string(g), payload)
    if args.json:
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"group: {doc['group']}\n")
        out.write(f"rank: {n}\n")
        out.write("cartan matrix (rows = simple roots in weight coordinates):\n")
        _render_matrix(payload["cartan"], out)
        out.write(
            "center: "
            + (
                " x ".join(f"Z{f}" for f in center.invariant_factors)
                if center.invariant_factors
                else "trivial"
            )
            + f" (order {center.order})\n"
        )
        out.write(f"fundamental group order: {payload['pi1_order']}\n")
        out.write("unit lattice basis (rows, weight coordinates):\n")
        _render_matrix(payload["theta"], out)
    return EXIT_OK


def cmd_tau(args, out) -> int:
    g = parse_group_spec(args.spec)
    tau = transgression.transgression_matrix(g)
    payload = {
        "matrix": _matrix_payload(tau.matrix, tau.domain_labels, tau.codomain_labels),
        "det": det(tau.matrix),
        "singular_primes": transgression.singular_primes(g),
    }
    if args.mod is not None:
        analysis = transgression.modp_analysis(g, args.mod)
        payload["mod"] = {
            "p": args.mod,
            "is_isomorphism": analysis.is_isomorphism,
            "kernel": [
                {"coeffs": list(v), "label": format_combination(v, "t")}
                for v in analysis.kernel.basis
            ],
            "cokernel": [
                {"coeffs": list(v), "label": format_combination(v, "omega")}
                for v in analysis.cokernel.basis
            ],
        }
    doc = _document("tau", canonical_spec_string(g), payload)
    if args.json:
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"group: {doc['group']}\n")
        out.write("transgression matrix (row i = tau(t_i) in the omega basis):\n")
        _render_matrix(payload["matrix"], out)
        out.write(f"det: {payload['det']}\n")
        out.write(
            "singular primes: "
            + (", ".join(map(str, payload["singular_primes"])) or "none")
            + "\n"
        )
        if "mod" in payload:
            mod = payload["mod"]
            out.write(f"mod {mod['p']}: ")
            if mod["is_isomorphism"]:
                out.write("isomorphism\n")
            else:
                out.write(
                    "kernel = <"
                    + ", ".join(e["label"] for e in mod["kernel"])
                    + ">, cokernel = <"
                    + ", ".join(e["label"] for e in mod["cokernel"])
                    + ">\n"
                )
    return EXIT_OK


def cmd_e3(args, out) -> int:
    g = parse_group_spec(args.spec)
    coeff = None if args.coeff == "q" else int(args.coeff)
    cap = sys.maxsize if args.force else spectral.DEFAULT_WEYL_CAP
    page = spectral.build_e2(
        g,
        coefficients=coeff,
        max_total_degree=args.max_degree,
        size_cap=cap,
        jobs=args.jobs,
    )
    ranks = spectral.e3_ranks(page)
    payload = {
        "coefficients": "rational" if coeff is None else coeff,
        "max_total_degree": page.max_total_degree,
        "ranks": [
            [d, ranks.ranks.get(d, 0)] for d in range(page.max_total_degree + 1)
        ],
        "poincare": " + ".join(
            (f"{r}q^{d}" if d else str(r)) if r != 1 or d == 0 else f"q^{d}"
            for d, r in sorted(ranks.ranks.items())
            if r
        ),
    }
    if args.bidegrees:
        payload["bidegrees"] = [
            [s, t, r] for (s, t), r in sorted(ranks.bidegree_ranks.items())
        ]
    doc = _document("e3", canonical_spec_string(g), payload)
    if args.json:
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(f"group: {doc['group']}\n")
        out.write(f"coefficients: {payload['coefficients']}\n")
        out.write(f"E3 ranks by total degree: {payload['poincare']}\n")
        if args.bidegrees:
            for s, t, r in payload["bidegrees"]:
                out.write(f"  E3^({s},{t}) rank {r}\n")
    return EXIT_OK


def cmd_fixtures(args, out) -> int:
    results = fixtures_mod.run_fixtures(path=args.corpus)
    failed = [r for r in results if not r.ok]
    payload = {
        "total": len(results),
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "results": [
            {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
        ],
    }
    doc = _document("fixtures", None, payload)
    if args.json:
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            out.write(f"{status} {r.name}" + (f": {r.detail}" if r.detail else "") + "\n")
        out.write(f"{payload['passed']}/{payload['total']} fixtures passed\n")
    return EXIT_OK if not failed else EXIT_FIXTURES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transgress",
        description="Transgression matrices and E2/E3 pages for compact "
        "semisimple Lie groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="root data, center and unit lattice")
    p.add_argument("spec", help="e.g. A2, C3:adj, D4:pi1=[0,0,1,1]")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("tau", help="transgression matrix and mod-p analysis")
    p.add_argument("spec")
    p.add_argument("--mod", type=int, metavar="P", help="prime modulus")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("e3", help="E3 graded ranks of the fibration G -> G/T")
    p.add_argument("spec")
    p.add_argument("--coeff", default="q", metavar="q|P",
                   help="q for rationals or a prime p")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--bidegrees", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true",
                   help="ignore the Weyl group size cap")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_e3)

    p = sub.add_parser("fixtures", help="run the frozen regression corpus")
    p.add_argument("--corpus", default=None, help="path to a corpus JSON file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "coeff", "q") != "q":
        try:
            p = int(args.coeff)
        except ValueError:
            print(f"error: --coeff must be 'q' or a prime, got {args.coeff!r}",
                  file=sys.stderr)
            return EXIT_INPUT
        if not _is_prime(p):
            print(f"error: --coeff modulus {p} is not prime", file=sys.stderr)
            return EXIT_INPUT
    if getattr(args, "mod", None) is not None and not _is_prime(args.mod):
        print(f"error: --mod modulus {args.mod} is not prime", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, sys.stdout)
    except GroupSpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except WeylCapExceededError as exc:
        print(f"refused: {exc} (use --force to override)", file=sys.stderr)
        return EXIT_REFUSED
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _is_prime(p: int) -> bool:
    from .exactlin import is_prime

    return is_prime(p)


if __name__ == "__main__":
    raise SystemExit(main())
