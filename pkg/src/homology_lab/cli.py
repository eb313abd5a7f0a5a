"""Command-line interface.

Commands: fixtures, betti, spectrum, specseq, reduce, decide, verify-gadget.
Exit codes: 0 success (including NO answers), 1 usage error, 2 computation
error.  Numeric text output is rounded to 10 significant digits so output
bytes are deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fixtures as fixtures_mod
from .complexes import clique_complex
from .errors import HomologyLabError, UsageError
from .gadgets import IntegerState, catalog, gadget, glue
from .graph import parse_graph, qubit_graph
from .homology import betti, betti_table, euler_characteristic
from .reduction import decide, parse_hamiltonian, reduce_hamiltonian, schedule
from .specseq import filtration, forman_compare, page_dims, stabilized_dims
from .spectra import DEFAULT_GRID, spectrum, sweep


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        raise UsageError(message)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str):
    return parse_graph(_read_text(path))


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _parse_grid(text: str) -> tuple[float, ...]:
    if text == "default":
        return DEFAULT_GRID
    try:
        return tuple(float(t) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}") from exc


def build_parser() -> _Parser:
    p = _Parser(prog="homology-lab")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fixtures", help="write fixture graph JSON files")
    f.add_argument("--out", required=True, help="output directory")
    f.add_argument("--which", nargs="*", help="subset of fixture names")

    b = sub.add_parser("betti", help="exact Betti numbers of a graph's clique complex")
    b.add_argument("graph", help="graph JSON file or - for stdin")
    b.add_argument("--k", default="all", help="dimension or 'all'")
    b.add_argument("--max-dim", type=int, default=None)
    b.add_argument("--cap", type=int, default=2_000_000)
    b.add_argument("--unreduced", action="store_true")
    b.add_argument("--format", choices=["text", "csv", "json"], default="text")

    s = sub.add_parser("spectrum", help="Laplacian spectrum or lambda-sweep branch table")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--lambda", dest="lam", type=float, default=None)
    s.add_argument("--grid", default=None, help="comma-separated decreasing lambdas")
    s.add_argument("--max-dim", type=int, default=None)
    s.add_argument("--cap", type=int, default=2_000_000)
    s.add_argument("--format", choices=["text", "csv"], default="text")

    q = sub.add_parser("specseq", help="spectral-sequence page tables")
    q.add_argument("graph")
    q.add_argument("--k", type=int, default=None, help="track one dimension")
    q.add_argument("--j-max", type=int, default=4)
    q.add_argument("--forman", action="store_true", help="compare with sweep exponents")
    q.add_argument("--grid", default=None)
    q.add_argument("--max-dim", type=int, default=None)
    q.add_argument("--cap", type=int, default=2_000_000)
    q.add_argument("--format", choices=["text", "csv"], default="text")

    r = sub.add_parser("reduce", help="compile a Hamiltonian to a weighted graph")
    r.add_argument("hamiltonian")
    r.add_argument("--c", type=float, default=0.1)
    r.add_argument("--g", type=float, default=1.0)
    r.add_argument("--out", default=None, help="write graph JSON here (default stdout)")

    d = sub.add_parser("decide", help="YES/NO/INCONCLUSIVE for a Hamiltonian")
    d.add_argument("hamiltonian")
    d.add_argument("--g", type=float, default=1.0)
    d.add_argument("--c", type=float, default=0.1)

    v = sub.add_parser("verify-gadget", help="gadget correctness checks for one state")
    v.add_argument("state", help="catalog name or inline JSON {bits: amp}")
    v.add_argument("--m", type=int, default=None, help="qubit count for inline JSON")
    return p


def _complex_for(graph, k_hint: int | None, max_dim: int | None, cap: int):
    if max_dim is None:
        # build one dimension above the largest needed so chi and pairing close
        max_dim = graph.n_vertices - 1 if k_hint is None else k_hint + 1
        max_dim = min(max_dim, graph.n_vertices)
    return clique_complex(graph, max_dim=max_dim, cap=cap)


def cmd_fixtures(args) -> int:
    written = fixtures_mod.write_fixtures(args.out, args.which)
    for path in written:
        print(path)
    return 0


def cmd_betti(args) -> int:
    g = _load_graph(args.graph)
    reduced = not args.unreduced
    if args.k == "all":
        K = _complex_for(g, None, args.max_dim, args.cap)
        table = betti_table(K, reduced=reduced)
        chi = euler_characteristic(K)
        if args.format == "json":
            print(json.dumps({
                "betti": {str(k): b for k, b in table.as_dict().items()},
                "euler_unreduced": chi.unreduced,
                "euler_reduced": chi.reduced,
            }, indent=2))
        elif args.format == "csv":
            print("k,dim,rank_d,betti")
            for k, d, r, b in zip(table.ks, table.chain_dims, table.coboundary_ranks, table.betti):
                print(f"{k},{d},{r},{b}")
        else:
            print("k    dim C^k  rank d^k  betti")
            for k, d, r, b in zip(table.ks, table.chain_dims, table.coboundary_ranks, table.betti):
                print(f"{k:>3}  {d:>7}  {r:>8}  {b:>5}")
            print(f"euler characteristic: {chi.unreduced} (reduced {chi.reduced})")
            print(f"witten index |reduced euler|: {abs(chi.reduced)}")
        return 0
    k = int(args.k)
    K = _complex_for(g, k, args.max_dim, args.cap)
    print(betti(K, k, reduced=reduced))
    return 0


def cmd_spectrum(args) -> int:
    g = _load_graph(args.graph)
    if (args.lam is None) == (args.grid is None):
        raise UsageError("give exactly one of --lambda or --grid (or --grid default)")
    if args.lam is not None and not 0 < args.lam <= 1:
        raise UsageError(f"lambda must be in (0, 1], got {args.lam}")
    K = _complex_for(g, args.k, args.max_dim, args.cap)
    if args.lam is not None:
        rep = spectrum(K, args.k, args.lam)
        if args.format == "csv":
            print("index,eigenvalue")
            for i, v in enumerate(rep.eigenvalues):
                print(f"{i},{_fmt(v)}")
        else:
            print(" ".join(_fmt(v) for v in rep.eigenvalues))
            print(f"lambda_min {_fmt(rep.lambda_min)}  near-zero multiplicity {rep.near_zero_multiplicity}")
        return 0
    grid = _parse_grid(args.grid) if args.grid else DEFAULT_GRID
    table = sweep(K, args.k, grid)
    for line in table.csv_lines():
        print(line)
    return 0


def cmd_specseq(args) -> int:
    g = _load_graph(args.graph)
    K = _complex_for(g, None, args.max_dim, args.cap)
    F = filtration(K)
    if args.forman:
        if args.k is None:
            raise UsageError("--forman needs --k")
        grid = _parse_grid(args.grid) if args.grid else DEFAULT_GRID
        rep = forman_compare(K, args.k, grid)
        print("j,algebraic_dim,branch_count,equal")
        for row in rep.rows:
            print(f"{row.j},{row.algebraic_dim},{row.branch_count},{row.equal}")
        print(f"forman comparison: {'PASS' if rep.ok else 'FAIL'}")
        return 0
    if args.format == "csv":
        print("j,k,l,dim")
        for j in range(0, args.j_max + 1):
            page = page_dims(F, j)
            for (k, l), d in sorted(page.dims.items()):
                print(f"{j},{k},{l},{d}")
    else:
        for j in range(0, args.j_max + 1):
            page = page_dims(F, j)
            for line in page.table_lines():
                print(line)
            print()
    if args.k is not None:
        rep = stabilized_dims(F, args.k)
        dims = " ".join(f"{j}:{v}" for j, v in sorted(rep.per_page.items()))
        print(f"dim e_j^{args.k}: {dims}")
        print(f"stabilizes to betti={rep.betti} at page {rep.stabilization_page}")
    return 0


def cmd_reduce(args) -> int:
    H = parse_hamiltonian(_read_text(args.hamiltonian))
    res = reduce_hamiltonian(H)
    sched = schedule(args.g, max(H.t, 1), H.max_locality, args.c)
    text = res.to_json(lam=sched.lam, threshold=sched.threshold)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
            fh.write("\n")
    else:
        print(text)
    print(
        f"k={res.k} lambda={_fmt(sched.lam)} E={_fmt(sched.threshold)} "
        f"vertices={res.graph.n_vertices} edges={res.graph.n_edges}",
        file=sys.stderr,
    )
    return 0


def cmd_decide(args) -> int:
    H = parse_hamiltonian(_read_text(args.hamiltonian))
    dec = decide(H, g=args.g, c=args.c)
    print(dec.answer)
    print(f"k={dec.k} betti={dec.betti} lambda={_fmt(dec.schedule.lam)} E={_fmt(dec.schedule.threshold)}")
    if dec.lam_min is not None:
        print(f"lambda_min={_fmt(dec.lam_min)}")
    if dec.harmonic_overlaps:
        for z, row in sorted(dec.harmonic_overlaps.items()):
            print(f"overlap |{z}>: " + " ".join(_fmt(v) for v in row))
    return 0


def cmd_verify_gadget(args) -> int:
    cat = catalog()
    if args.state in cat:
        state = cat[args.state]
    else:
        try:
            amps = json.loads(args.state)
        except json.JSONDecodeError as exc:
            raise UsageError(
                f"{args.state!r} is neither a catalog name ({', '.join(sorted(cat))}) nor JSON"
            ) from exc
        m = args.m if args.m is not None else len(next(iter(amps)))
        state = IntegerState.from_dict(m, {z: int(a) for z, a in amps.items()})
    print(f"state: {state.label()} on m={state.m} qubits")
    bp = gadget(state)  # raises on any internal verification failure
    print(f"gadget: {len(bp.added_vertex_names)} added vertices, "
          f"{len(bp.added_edges)} added edges [construction checks PASS]")
    glued = glue(qubit_graph(state.m), bp)
    K = clique_complex(glued, max_dim=2 * state.m + 2)
    want = 2 ** state.m - 1
    ok = True
    for k in range(-1, K.max_dim):
        b = betti(K, k)
        expect = want if k == 2 * state.m - 1 else 0
        status = "PASS" if b == expect else "FAIL"
        if b != expect:
            ok = False
        print(f"betti_{k} = {b} (expected {expect}) {status}")
    chi = euler_characteristic(K)
    status = "PASS" if abs(chi.reduced) == want else "FAIL"
    print(f"witten index |chi_reduced| = {abs(chi.reduced)} (expected {want}) {status}")
    if not ok or abs(chi.reduced) != want:
        raise HomologyLabError("gadget verification failed")
    print("PASS")
    return 0


_COMMANDS = {
    "fixtures": cmd_fixtures,
    "betti": cmd_betti,
    "spectrum": cmd_spectrum,
    "specseq": cmd_specseq,
    "reduce": cmd_reduce,
    "decide": cmd_decide,
    "verify-gadget": cmd_verify_gadget,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except HomologyLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
