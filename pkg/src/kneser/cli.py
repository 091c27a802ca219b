"""Command-line front end: build, verify, partition, graycode, bench."""
from __future__ import annotations

import argparse
import hashlib
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .baranyai import baranyai_partition, compute_size_plan, custom_plan
from .graycode import gray_code, verify_graycode
from .hamilton import construct
from .model import HamCycle
from .subsets import (
    GroundParams,
    OutOfRangeError,
    UsageError,
    format_subset,
    parse_subset,
    rank_colex,
    rank_members,
    unrank_colex,
)
from .verify import verify_cycle, verify_partition

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

BENCH_GRID = (
    [(n, 1) for n in range(4, 21)]
    + [(n, 2) for n in range(8, 17)]
    + [(n, 3) for n in range(12, 17)]
    + [(19, 3), (16, 4), (17, 4), (20, 5), (21, 5)]
)


@dataclass
class RunConfig:
    command: str
    n: Optional[int] = None
    k: Optional[int] = None
    format: str = "sets"
    input: Optional[str] = None
    output: Optional[str] = None
    self_check: bool = True
    max_vertices: int = 25000
    jobs: int = 1
    timing: bool = True
    sizes: Optional[tuple[int, ...]] = None


def _vertex_line(s, fmt: str) -> str:
    return str(rank_colex(s)) if fmt == "ranks" else format_subset(s)


def _emit(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def cycle_text(cycle: HamCycle, fmt: str = "sets") -> str:
    return "".join(_vertex_line(s, fmt) + "\n" for s in cycle.order)


def read_cycle(text: str, g: GroundParams, fmt: str = "sets") -> HamCycle:
    order = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            if fmt == "ranks":
                order.append(unrank_colex(int(line), g))
            else:
                order.append(parse_subset(line, g))
        except (UsageError, ValueError) as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
    return HamCycle(g, tuple(order))


def _build(cfg: RunConfig) -> int:
    c = construct(cfg.n, cfg.k)
    if cfg.self_check:
        report = verify_cycle(c.cycle)
        if not report:
            print(report.render(), file=sys.stderr)
            return EXIT_FAILED
    _emit(cycle_text(c.cycle, cfg.format), cfg.output)
    return EXIT_OK


def _verify(cfg: RunConfig) -> int:
    g = GroundParams(cfg.n, cfg.k)
    if cfg.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(cfg.input, encoding="ascii") as fh:
            text = fh.read()
    report = verify_cycle(read_cycle(text, g, cfg.format))
    if report:
        _emit(f"OK K({g.n},{g.k}) {g.num_vertices} vertices\n", cfg.output)
        return EXIT_OK
    _emit("".join(line + "\n" for line in report.lines()), cfg.output)
    print(report.render(), file=sys.stderr)
    return EXIT_FAILED


def _partition(cfg: RunConfig) -> int:
    if cfg.sizes is not None:
        plan = custom_plan(cfg.n, cfg.k, cfg.sizes)
    else:
        plan = compute_size_plan(cfg.n, cfg.k)
    partition = baranyai_partition(plan)
    if cfg.self_check:
        report = verify_partition(partition)
        if not report:
            print(report.render(), file=sys.stderr)
            return EXIT_FAILED
    blocks = []
    for i, cls in enumerate(partition.classes, start=1):
        lines = [f"class {i} size {len(cls)}"] + [_vertex_line(s, cfg.format) for s in cls]
        blocks.append("\n".join(lines) + "\n")
    _emit("\n".join(blocks), cfg.output)
    return EXIT_OK


def _graycode(cfg: RunConfig) -> int:
    if not 0 <= cfg.k <= cfg.n:
        raise UsageError(f"need 0 <= k <= n, got n={cfg.n}, k={cfg.k}")
    seq = gray_code(range(1, cfg.n + 1), cfg.k)
    if cfg.self_check:
        report = verify_graycode(seq)
        if not report:
            print(report.render(), file=sys.stderr)
            return EXIT_FAILED
    if cfg.format == "ranks":
        lines = [str(rank_members(s)) for s in seq.order]
    else:
        lines = [" ".join(map(str, s)) for s in seq.order]
    _emit("".join(line + "\n" for line in lines), cfg.output)
    return EXIT_OK


def bench_row(nk: tuple[int, int]) -> tuple[int, int, int, str, float, str, bool]:
    n, k = nk
    start = time.perf_counter()
    c = construct(n, k)
    ok = verify_cycle(c.cycle).ok
    elapsed = time.perf_counter() - start
    digest = hashlib.sha256(cycle_text(c.cycle).encode("ascii")).hexdigest()[:16]
    return n, k, comb(n, k), c.plan.path.value, elapsed, digest, ok


def bench_table(cfg: RunConfig) -> tuple[str, bool]:
    grid = sorted(nk for nk in BENCH_GRID if comb(*nk) <= cfg.max_vertices)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(bench_row, grid))
    else:
        rows = [bench_row(nk) for nk in grid]
    rows.sort(key=lambda r: (r[0], r[1]))
    out = [f"{'n':>3} {'k':>2} {'C(n,k)':>7} {'path':<6} {'seconds':>8} {'sha256':<16} verified"]
    for n, k, c, path, secs, digest, ok in rows:
        t = f"{secs:8.3f}" if cfg.timing else f"{'-':>8}"
        out.append(f"{n:>3} {k:>2} {c:>7} {path:<6} {t} {digest} {'yes' if ok else 'NO'}")
    return "\n".join(out) + "\n", all(r[-1] for r in rows)


def _bench(cfg: RunConfig) -> int:
    text, ok = bench_table(cfg)
    _emit(text, cfg.output)
    return EXIT_OK if ok else EXIT_FAILED


COMMANDS = {"build": _build, "verify": _verify, "partition": _partition, "graycode": _graycode, "bench": _bench}


def run(cfg: RunConfig) -> int:
    if cfg.command in ("build", "partition", "graycode", "verify") and (cfg.n is None or cfg.k is None):
        print(f"error: {cfg.command} requires --n and --k", file=sys.stderr)
        return EXIT_USAGE
    if cfg.command == "verify" and cfg.input is None:
        print("error: verify requires --in", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[cfg.command](cfg)
    except (OutOfRangeError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _on_off(value: str) -> bool:
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return value == "on"


def _sizes(value: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in value.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {value!r}") from None


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kneser", description="Hamiltonian cycles in Kneser graphs K(n,k), n >= 4k.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_nk=True):
        if need_nk:
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--k", type=int, required=True)
        p.add_argument("--format", choices=("sets", "ranks"), default="sets")
        p.add_argument("--out", dest="output", metavar="PATH", help="default: standard output")
        p.add_argument("--self-check", type=_on_off, default=True, metavar="{on,off}")
        return p

    common(sub.add_parser("build", help="write a Hamiltonian cycle, one vertex per line"))
    p = common(sub.add_parser("verify", help="check a cycle file"))
    p.add_argument("--in", dest="input", metavar="PATH", required=True)
    p = common(sub.add_parser("partition", help="write the clique partition"))
    p.add_argument("--sizes", type=_sizes, help="custom class sizes, e.g. '2,2,1,1'")
    common(sub.add_parser("graycode", help="write the revolving-door order of k-subsets of [n]"))
    p = common(sub.add_parser("bench", help="time the construction over a grid"), need_nk=False)
    p.add_argument("--max-vertices", type=int, default=25000, metavar="V")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", type=_on_off, default=True, metavar="{on,off}")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
