"""Command-line entry point: ``kronmult <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .dixon import character_table
from .errors import KronmultError
from .families import embedding_from_spec, family_group, is_pair_spec, split_top
from .groups import DEFAULT_CAP, class_fusion, embed, group_stats
from .mult import (A_from_centralizers, induced_matrix, induced_max, induced_sum_squares,
                   kron_average, kron_max, kron_sum_squares, kronecker)
from .perm import Permutation
from .symmetric import SN_CAP, sn_degree_stats
from .tableio import format_table, parse_class_data, parse_table, write_table

FORMATS = ("text", "json", "csv")


@dataclass
class Config:
    element_cap: int = DEFAULT_CAP
    sn_cap: int = SN_CAP
    table_cap: int = 160
    seed: int = 0
    threads: int = 0  # 0 means one per CPU
    format: str = "text"

    def __post_init__(self):
        for name in ("element_cap", "sn_cap", "table_cap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {', '.join(FORMATS)}")
        env = os.environ.get("MBX_THREADS")
        if env:
            self.threads = int(env)
        if self.threads <= 0:
            self.threads = os.cpu_count() or 1


def _progress(msg: str) -> None:
    print(f"[kronmult] {msg}", file=sys.stderr, flush=True)


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{x} (~{float(x):.6g})" if x.denominator != 1 else str(x.numerator)
    return str(x)


def _table_for(spec: str, cfg: Config):
    """A character table from a descriptor or from a table file on disk."""
    if os.path.exists(spec):
        return parse_table(spec)
    return character_table(family_group(spec, cfg.element_cap), cfg.seed)


def _guard_k(t, cfg: Config):
    if t.k > cfg.table_cap:
        raise KronmultError(f"k = {t.k} exceeds table_cap {cfg.table_cap}; raise --table-cap")


# ---------------------------------------------------------------------------


def cmd_group(args, cfg: Config) -> int:
    G = family_group(args.spec, cfg.element_cap)
    if args.what == "classes":
        print(f"# {G.name}: order {G.order}, {G.k} classes")
        print("class  size  centralizer  order  representative")
        for i, c in enumerate(G.classes):
            print(f"{i:>5}  {c.size:>4}  {c.centralizer_order:>11}  {c.element_order:>5}  "
                  f"{c.representative.to_string()}")
        return 0
    stats = group_stats(G, character_table(G, cfg.seed)).as_dict()
    if cfg.format == "json":
        print(json.dumps({k: _jsonable(v) for k, v in stats.items()}, sort_keys=True))
    else:
        for k, v in stats.items():
            print(f"{k:<18} {_fmt(v)}")
    return 0


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


def cmd_table(args, cfg: Config) -> int:
    t = character_table(family_group(args.spec, cfg.element_cap), cfg.seed)
    if args.out:
        write_table(t, args.out)
        _progress(f"wrote {args.out}")
    else:
        sys.stdout.write(format_table(t))
    return 0


def cmd_kron(args, cfg: Config) -> int:
    t = _table_for(args.spec, cfg)
    if args.triple:
        i, j, k = args.triple
        print(kronecker(t, i, j, k))
        return 0
    _guard_k(t, cfg)
    if args.sum_squares:
        total = kron_sum_squares(t, check=False)
        A = A_from_centralizers(t.centralizers)
        print(total)
        if total == A:
            print("identity holds (sum of squared Kronecker multiplicities = sum of centralizer orders)")
            return 0
        print(f"identity FAILS: sum of centralizer orders is {A}")
        return 1
    if args.avg:
        print(_fmt(kron_average(t)))
        return 0
    K, arg = kron_max(t)
    print(f"K = {K} at (rho, phi, psi) = {arg}")
    return 0


def _read_generators(path: str) -> list[Permutation]:
    gens = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                gens.append(Permutation.parse(line))
    return gens


def cmd_induce(args, cfg: Config) -> int:
    if args.gens:
        parent = family_group(args.parent, cfg.element_cap)
        emb = embed(parent, _read_generators(args.gens), name=os.path.basename(args.gens),
                    cap=cfg.element_cap)
    elif args.sub:
        emb = embedding_from_spec(f"{args.parent}>{args.sub}", cfg.element_cap)
    elif is_pair_spec(args.parent):
        emb = embedding_from_spec(args.parent, cfg.element_cap)
    else:
        raise KronmultError("induce needs --sub or --gens")
    tG = character_table(emb.parent, cfg.seed)
    tH = character_table(emb.sub, cfg.seed)
    m = induced_matrix(tG, tH, class_fusion(emb))
    if args.matrix:
        for row in m.entries:
            print(" ".join(str(int(x)) for x in row))
        return 0
    if args.sum_squares:
        print(induced_sum_squares(m, check=True))
        print("identity holds (sum of squared induced multiplicities = sum of z_G/z_H)")
        return 0
    C, arg = induced_max(m)
    print(f"C = {C} at (rho, pi) = {arg}")
    return 0


def _range(text: str) -> range:
    lo, _, hi = text.partition("..")
    return range(int(lo), int(hi or lo) + 1)


def cmd_sn(args, cfg: Config) -> int:
    ns = _range(args.range) if args.range else [args.n]
    rows = []
    for n in ns:
        s = sn_degree_stats(n, cap=cfg.sn_cap)
        rows.append(s)
    if args.emit == "csv" or cfg.format == "csv":
        print("n,p,b,M,f,f_degrees,epsilon")
        for s in rows:
            degs = ";".join(str(d) for d in s.f_fibers)
            print(f"{s.n},{s.p},{s.b},{s.M},{s.f},{degs},{float(s.epsilon):.6g}")
    elif cfg.format == "json":
        for s in rows:
            print(json.dumps({"n": s.n, "p": s.p, "b": s.b, "M": s.M, "f": s.f,
                              "f_degrees": list(s.f_fibers), "epsilon": str(s.epsilon)}))
    else:
        for s in rows:
            degs = ", ".join(str(d) for d in s.f_fibers)
            print(f"n={s.n} p={s.p} b={s.b} M={s.M} f={s.f} at degree {degs} "
                  f"epsilon={float(s.epsilon):.6g}")
    return 0


def _emit(report, cfg: Config) -> None:
    if cfg.format == "json":
        sys.stdout.write(report.to_jsonl())
    elif cfg.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        sys.stdout.write(report.to_text())


def cmd_verify(args, cfg: Config) -> int:
    from .verify import REGISTRY, run_suite

    targets = []
    if args.battery:
        targets.append(args.battery)
    if args.targets:
        targets.extend(_split_list(args.targets))
    if not targets:
        raise KronmultError("verify needs --battery or --targets")
    checks = _split_list(args.checks) if args.checks else list(REGISTRY)
    report = run_suite(targets, checks, cap=cfg.element_cap, seed=cfg.seed, threads=cfg.threads,
                       progress=lambda s: _progress(f"checking {s}"))
    _emit(report, cfg)
    return 0 if report.ok else 1


def _split_list(items) -> list[str]:
    out = []
    for item in items:
        for word in item.split():
            out.extend(x for x in split_top(word, ",") if x)
    return out


def cmd_classdata(args, cfg: Config) -> int:
    from .verify import monster_report

    cd = parse_class_data(args.file)
    if not args.report:
        cd.validate()
        print(f"{cd.name}: order {cd.order}, {cd.k} classes, A = {A_from_centralizers(cd.centralizers)}")
        return 0
    report = monster_report(cd)
    _emit(report, cfg)
    return 0 if report.ok else 1


def cmd_scan(args, cfg: Config) -> int:
    from .verify import counterexample_scan

    report = counterexample_scan(args.check, args.sweep, cap=cfg.element_cap, seed=cfg.seed,
                                 threads=cfg.threads, progress=lambda s: _progress(f"scanning {s}"))
    _emit(report, cfg)
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kronmult", description=__doc__)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--element-cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--sn-cap", type=int, default=SN_CAP)
    p.add_argument("--table-cap", type=int, default=160)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=0)
    p.add_argument("--format", choices=FORMATS, default="text")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="classes or summary statistics of a group")
    g.add_argument("spec")
    g.add_argument("what", nargs="?", choices=("classes", "stats"), default="stats")
    g.set_defaults(func=cmd_group)

    t = sub.add_parser("table", help="compute a character table")
    t.add_argument("spec")
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)

    k = sub.add_parser("kron", help="Kronecker multiplicities")
    k.add_argument("spec", help="group descriptor or table file")
    mode = k.add_mutually_exclusive_group()
    mode.add_argument("--max", action="store_true")
    mode.add_argument("--triple", type=int, nargs=3, metavar=("I", "J", "K"))
    mode.add_argument("--sum-squares", action="store_true")
    mode.add_argument("--avg", action="store_true")
    k.set_defaults(func=cmd_kron)

    i = sub.add_parser("induce", help="induced multiplicities for H < G")
    i.add_argument("--parent", required=True)
    src = i.add_mutually_exclusive_group()
    src.add_argument("--sub")
    src.add_argument("--gens", metavar="FILE", help="subgroup generators, one per line")
    mode = i.add_mutually_exclusive_group()
    mode.add_argument("--max", action="store_true")
    mode.add_argument("--matrix", action="store_true")
    mode.add_argument("--sum-squares", action="store_true")
    i.set_defaults(func=cmd_induce)

    s = sub.add_parser("sn", help="symmetric group degree statistics")
    s.add_argument("what", choices=("stats",))
    s.add_argument("--n", type=int)
    s.add_argument("--range", metavar="A..B")
    s.add_argument("--emit", choices=("text", "csv"))
    s.set_defaults(func=cmd_sn)

    v = sub.add_parser("verify", help="run registered checks over targets")
    v.add_argument("--battery", choices=("core",))
    v.add_argument("--targets", nargs="+")
    v.add_argument("--checks", nargs="+")
    v.add_argument("--format", dest="sub_format", choices=FORMATS)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classdata", help="ingest a class-data file")
    c.add_argument("file")
    c.add_argument("--report", action="store_true")
    c.add_argument("--format", dest="sub_format", choices=FORMATS)
    c.set_defaults(func=cmd_classdata)

    sc = sub.add_parser("scan", help="counterexample scan over declared embeddings")
    sc.add_argument("--check", required=True)
    sc.add_argument("--sweep", required=True)
    sc.add_argument("--format", dest="sub_format", choices=FORMATS)
    sc.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "sn" and args.n is None and args.range is None:
        print("kronmult: error: sn stats needs --n or --range", file=sys.stderr)
        return 2
    try:
        cfg = Config(element_cap=args.element_cap, sn_cap=args.sn_cap, table_cap=args.table_cap,
                     seed=args.seed, threads=args.threads,
                     format=getattr(args, "sub_format", None) or args.format)
    except ValueError as exc:
        print(f"kronmult: error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args, cfg)
    except (KronmultError, ValueError, OSError) as exc:
        print(f"kronmult: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
