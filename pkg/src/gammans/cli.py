"""Command line front end.

Exit status: 0 on success, 1 on a domain error or missing input file,
2 on a usage error (reported by argparse).
"""

from __future__ import annotations

import argparse
import sys

from .assembly import DEFAULT_BUDGET, assembly_verdict, load_pattern, validate_pattern
from .errors import GammaError
from .gamma import (
    cusp_pair_domain,
    gamma_cohomology,
    hairy_dim,
    schur_dim,
    symplectic_detection,
    theorem_2mn_summand,
    vcd,
    w_module,
)
from .modular_forms import modular_dims
from .partitions import dim_irreducible, format_partition, parse_partition
from .rep_ring import lr_coefficient, lr_product
from .selfcheck import run_selfcheck

# (rank, largest s, largest i) of each reference table; odd tables list modules, even ones dimensions
TABLES = {1: (1, 8, 7), 2: (1, 8, 7), 3: (2, 10, 10), 4: (2, 10, 10)}


def table_cells(which: int):
    """Yield (s, i, module) for every cell of a reference table, row by row."""
    n, max_s, max_i = TABLES[which]
    for s in range(max_s + 1):
        for i in range(min(vcd(n, s), max_i) + 1):
            yield s, i, gamma_cohomology(n, s, i)


def format_table(which: int, fmt: str = "text") -> str:
    n, _, max_i = TABLES[which]
    modules = which in (1, 3)
    cells = list(table_cells(which))
    if fmt == "tsv":
        lines = ["s\ti\tmodule\tdim"]
        lines += [f"{s}\t{i}\t{m}\t{m.dimension}" for s, i, m in cells]
        return "\n".join(lines) + "\n"
    if modules:
        lines = [f"H^i(Gamma_{n},s)"]
        lines += [f"s={s:<3} i={i:<3} {m}" for s, i, m in cells]
        return "\n".join(lines) + "\n"
    rows: dict[int, dict[int, int]] = {}
    for s, i, m in cells:
        rows.setdefault(s, {})[i] = m.dimension
    width = max(len(str(d)) for row in rows.values() for d in row.values())
    width = max(width, len(f"H^{max_i}"))
    header = "s".rjust(3) + " |" + "".join(f" {'H^' + str(i):>{width}}" for i in range(max_i + 1))
    lines = [f"dim H^i(Gamma_{n},s)", header.rstrip(), "-" * len(header)]
    for s, row in rows.items():
        body = "".join(f" {str(row[i]) if i in row else '':>{width}}" for i in range(max_i + 1))
        lines.append((f"{s:>3} |" + body).rstrip())
    return "\n".join(lines) + "\n"


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except GammaError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammans",
        description="Symmetric-group module structure of the cohomology of Gamma_{n,s} and assembly-map vanishing tests.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("gamma", help="H^i(Gamma_{n,s}) as an S_s-module (n <= 2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--i", type=int, required=True)

    p = sub.add_parser("tables", help="print a reference table of cohomology modules or dimensions")
    p.add_argument("--which", type=int, choices=sorted(TABLES), required=True)
    p.add_argument("--format", choices=("text", "tsv"), default="text")

    p = sub.add_parser("pieri", help="P_lam o P_(k) by the Pieri rule")
    p.add_argument("--lam", type=_partition_arg, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("lr", help="Littlewood-Richardson product or coefficient")
    p.add_argument("--lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, help="print only the coefficient of P_nu")

    p = sub.add_parser("dim", help="dimension of the irreducible P_lam")
    p.add_argument("--lam", type=_partition_arg, required=True)

    p = sub.add_parser("modular", help="dimensions of modular and cusp forms of weight k")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("wmod", help="layers of the module W_q")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("detect-2mn", help="multiplicity of P_(s-2mn,n^2m) in the invariant column")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    p = sub.add_parser("cusp-pairs", help="domain of the pairing of rank-two odd classes")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("hairy", help="dimension of hairy graph homology with hair labels in C^N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=int, required=True)

    p = sub.add_parser("schur-dim", help="dimension of S_lam(C^N)")
    p.add_argument("--lam", type=_partition_arg, required=True)
    p.add_argument("--N", type=int, required=True)

    p = sub.add_parser("sp-detect", help="degree and weight of a detected sp-module")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("assembly", help="assembly-map vanishing analysis")
    asub = p.add_subparsers(dest="action", required=True, metavar="ACTION")
    c = asub.add_parser("check", help="check a pattern file")
    c.add_argument("file")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of partial gluings examined")

    sub.add_parser("selfcheck", help="run the oracle-equivalence and invariant suites")
    return parser


def _run(args) -> int:
    verb = args.verb
    if verb == "gamma":
        m = gamma_cohomology(args.n, args.s, args.i)
        print(f"{m}  dim={m.dimension}")
    elif verb == "tables":
        sys.stdout.write(format_table(args.which, args.format))
    elif verb == "pieri":
        if args.k < 0:
            raise GammaError("k must be non-negative")
        print(lr_product(args.lam, (args.k,) if args.k else ()))
    elif verb == "lr":
        if args.nu is not None:
            print(lr_coefficient(args.lam, args.mu, args.nu))
        else:
            print(lr_product(args.lam, args.mu))
    elif verb == "dim":
        print(dim_irreducible(args.lam))
    elif verb == "modular":
        d = modular_dims(args.k)
        print(f"M={d.dim_full} S={d.dim_cusp}")
    elif verb == "wmod":
        w = w_module(args.q)
        for layer in w.layers:
            print(
                f"i={layer.i} {layer.kind} weight={layer.weight} dim={layer.form_dim} "
                f"{format_partition(layer.partition)}"
            )
        print(f"flattened: {w.flattened}")
    elif verb == "detect-2mn":
        print(theorem_2mn_summand(args.n, args.m, args.s))
    elif verb == "cusp-pairs":
        dom = cusp_pair_domain(args.m)
        for i, weight, kind, dim in dom.layers:
            print(f"i={i} {kind} weight={weight} wedge2={dim}")
        print(f"total={dom.total} target=H_{dom.target[0]}(Out(F_{dom.target[1]}))")
    elif verb == "hairy":
        h = hairy_dim(args.n, args.s, args.k, args.N)
        print(f"dim={h.dimension}")
        for weight, mult in h.terms:
            print(f"  {mult}*{weight}" if mult > 1 else f"  {weight}")
    elif verb == "schur-dim":
        print(schur_dim(args.lam, args.N))
    elif verb == "sp-detect":
        degree, weight = symplectic_detection(args.n, args.m, args.d)
        print(f"degree={degree} weight={weight}")
    elif verb == "assembly":
        pattern = load_pattern(args.file)
        sig = validate_pattern(pattern)
        print(f"signature: {sig}")
        print(assembly_verdict(pattern, budget=args.budget).report())
    elif verb == "selfcheck":
        results = run_selfcheck()
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name}" + (f": {r.detail}" if r.detail else ""))
        failed = sum(not r.passed for r in results)
        print(f"passed={len(results) - failed} failed={failed}")
        return 1 if failed else 0
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (GammaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
