"""Command-line interface: ``hypertour <command> ...``.

Exit codes: 0 when every assertion held, 1 when one failed (a property
check came out false, a sweep trial failed, a search found nothing), 2 on
usage, parse or config errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import covers, degenerate, formats, lemmas, pancyclic
from .connectivity import is_strong, random_strong_tournament, two_kings
from .errors import BudgetExceeded, ConfigError, HypertourError, RangeUnsupported
from .experiment import parse_config, run_experiment
from .hamiltonian import find_hamiltonian_path, hamiltonian_cycle
from .hypercore import HyperDigraph, as_tournament, random_hyperdigraph, random_tournament

parse_kht = formats.parse_kht

CHECKS = ("strong", "ham-path", "ham-cycle", "pancyclic", "kings", "no-strong-member")


class UsageError(Exception):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str) -> HyperDigraph:
    return parse_kht(_read(path))


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="ascii", newline="\n")


def cmd_gen(args) -> int:
    if args.density is not None:
        H = random_hyperdigraph(args.k, args.n, args.density, args.seed)
    elif args.strong:
        H, _ = random_strong_tournament(args.k, args.n, args.seed)
    else:
        H = random_tournament(args.k, args.n, args.seed)
    _emit(formats.serialize_kht(H), args.output)
    return 0


def cmd_check(args) -> int:
    H = _load(args.file)
    what = args.property
    lines = [f"check={what}", f"k={H.k}", f"n={H.n}"]
    if what == "strong":
        ok = is_strong(H)
    elif what == "ham-path":
        P = find_hamiltonian_path(H)
        ok = P is not None
        lines.append(f"path={P}" if ok else "path=none")
    elif what == "ham-cycle":
        C = hamiltonian_cycle(H)
        ok = C is not None
        lines.append(f"cycle={C}" if ok else "cycle=none")
    elif what == "pancyclic":
        missing = pancyclic.non_pancyclic_vertices(H)
        ok = not missing and H.n >= 3
        lines.append("missing=" + (",".join(f"{v}@{l}" for v, l in missing) or "none"))
        C = hamiltonian_cycle(H) if H.is_tournament() else None
        if C is not None:
            arcs = pancyclic.pancyclic_hyperarcs_on_cycle(H, C)
            lines.append(f"cycle={C}")
            lines.append(f"pancyclic_arcs_on_cycle={len(arcs)}")
    elif what == "kings":
        kings = sorted(two_kings(H))
        lines.append("kings=" + ",".join(map(str, kings)))
        ok = len(kings) >= 3
    else:
        H = as_tournament(H)
        ok = is_strong(H) and degenerate.strong_member(H) is None
    lines.append(f"result={'true' if ok else 'false'}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_degenerate(args) -> int:
    H = as_tournament(_load(args.file))
    T, cert = degenerate.degenerate_tournament(H)
    _emit(formats.serialize_trn(T), args.output)
    if args.cert:
        _emit(formats.serialize_cert(cert, H.n), args.cert)
    return 0


def cmd_enumerate(args) -> int:
    H = as_tournament(_load(args.file))
    members = strong = 0
    exhausted = True
    try:
        for T, _ in degenerate.enumerate_TH(H, limit=args.limit):
            members += 1
            strong += is_strong(T)
            if args.list:
                sys.stdout.write(formats.serialize_trn(T))
    except BudgetExceeded:
        exhausted = False
    sys.stdout.write(f"members={members}\nstrong_members={strong}\ncomplete={int(exhausted)}\n")
    return 0 if exhausted else 1


def cmd_cover(args) -> int:
    H = _load(args.file)
    r = covers.gallai_milgram_chain(H, mode=args.mode, bound=args.bound)
    lines = [
        f"mode={r.mode}",
        f"pc_H={r.pc_H}",
        f"pc_D={r.pc_D}",
        f"alpha_D={r.alpha_D}",
        f"alpha_H={r.alpha_H}",
        "cover_H=" + " | ".join(" ".join(map(str, p)) for p in r.cover_H.vertex_lists()),
        "cover_D=" + " | ".join(" ".join(map(str, p)) for p in r.cover_D.vertex_lists()),
        "independent_D=" + ",".join(map(str, sorted(r.independent_D))),
        "independent_H=" + ",".join(map(str, sorted(r.independent_H))),
        "violations=" + ("; ".join(r.violations) or "none"),
        f"verdict={'pass' if r.chain_holds else 'fail'}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if r.chain_holds else 1


def cmd_lemmas(args) -> int:
    ok = True
    lines = []
    if args.file:
        H = as_tournament(_load(args.file))
        C = hamiltonian_cycle(H)
        if C is None:
            raise RangeUnsupported("no Hamiltonian cycle to check")
        v = lemmas.check_cycle_bounds(C)
        ok &= v.ok
        lines.append(f"cycle={C}")
        lines.append(f"cycle_bounds={'pass' if v.ok else 'fail'} max_count={v.max_count}")
        lines += [f"failure={f}" for f in v.failures]
        pairs = [(H.k, H.n)]
    else:
        pairs = [(k, n) for k in range(3, args.kmax + 1) for n in range(k, k + args.nspan + 1)]
    for k, n in pairs:
        holds, lhs, rhs = lemmas.check_matching_inequality(k, n)
        claimed = lemmas.inequality_expected(k, n)
        ok &= holds or not claimed
        lines.append(f"inequality k={k} n={n} lhs={lhs} rhs={rhs} holds={int(holds)} claimed={int(claimed)}")
    lines.append(f"verdict={'pass' if ok else 'fail'}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_experiment(args) -> int:
    cfg = parse_config(_read(args.config).decode("utf-8"))
    report = run_experiment(cfg)
    _emit(report.text(), args.output)
    return 0 if report.passed else 1


def cmd_search_witness(args) -> int:
    try:
        H = degenerate.search_no_strong_witness(args.k, args.n, args.budget, args.seed)
    except BudgetExceeded as exc:
        sys.stderr.write(f"no witness: {exc}\n")
        return 1
    _emit(formats.serialize_kht(H), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypertour", description="Hypertournament algorithms.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random k-tournament (.kht) or k-hyperdigraph (.khd)")
    g.add_argument("-k", type=int, required=True)
    g.add_argument("-n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--strong", action="store_true", help="redraw until the k-tournament is strong")
    g.add_argument("--density", type=float, help="emit a random k-hyperdigraph with this arc density")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="check a property of a .kht file")
    c.add_argument("property", choices=CHECKS)
    c.add_argument("file", help="path, or - for stdin")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("degenerate", help="emit a strong tournament generated by a strong k-tournament")
    d.add_argument("file")
    d.add_argument("-o", "--output", help="tournament (.trn) destination, default stdout")
    d.add_argument("--cert", help="write the generation certificate here")
    d.set_defaults(func=cmd_degenerate)

    e = sub.add_parser("enumerate-th", help="enumerate every tournament generated by H")
    e.add_argument("file")
    e.add_argument("--limit", type=int)
    e.add_argument("--list", action="store_true", help="print every member in trn format")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("cover", help="path covers and independence numbers (Gallai-Milgram chain)")
    v.add_argument("file")
    v.add_argument("--mode", choices=("closure", "leading"), default="closure")
    v.add_argument("--bound", type=int, default=covers.DEFAULT_BOUND)
    v.set_defaults(func=cmd_cover)

    m = sub.add_parser("lemmas", help="check the counting lemmas and the binomial inequality")
    m.add_argument("file", nargs="?", help="check the cycle bounds of this k-tournament's Hamiltonian cycle")
    m.add_argument("--kmax", type=int, default=15)
    m.add_argument("--nspan", type=int, default=40)
    m.set_defaults(func=cmd_lemmas)

    x = sub.add_parser("experiment", help="run a campaign from a key = value config file")
    x.add_argument("config")
    x.add_argument("-o", "--output")
    x.set_defaults(func=cmd_experiment)

    w = sub.add_parser("search-witness", help="look for a strong H with no strong member of T_H")
    w.add_argument("-k", type=int, default=3)
    w.add_argument("-n", type=int, default=5)
    w.add_argument("--budget", type=int, default=20000)
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("-o", "--output")
    w.set_defaults(func=cmd_search_witness)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ConfigError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except HypertourError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1 if isinstance(exc, AssertionError) else 2


if __name__ == "__main__":
    sys.exit(main())
