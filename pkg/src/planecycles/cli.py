"""Command-line front end.

Every subcommand prints ``key: value`` lines.  Exit status is 0 when the
question was answered positively (or the command simply succeeded), 1 for
a definite negative answer and 2 for bad input.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Callable, Sequence

from . import fpt, nested, oracle
from .generate import KINDS, GenerationError, GenSpec, generate
from .model import (
    CycleViolation,
    InstanceError,
    PlaneCycle,
    color_profile,
    format_cycles,
    format_instance,
    parse_cycles,
    read_instance,
    validate_cycle,
)
from .monotonicity import ShorteningError, shorten_step, shorten_to_small
from .rainbow import find_configuration, witness_cycle

OK, NO, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class Report:
    def __init__(self, command: str, out=None, prefix: str = ""):
        self.out = out or sys.stdout
        self.prefix = prefix
        self.start = time.perf_counter()
        self.field("command", command)

    def field(self, key: str, value) -> None:
        print(f"{self.prefix}{key}: {value}", file=self.out)

    def cycle(self, key: str, cyc: Sequence[int]) -> None:
        self.field(key, " ".join(map(str, cyc)))

    def finish(self) -> None:
        self.field("time_s", f"{time.perf_counter() - self.start:.4f}")


def _load(path: str):
    try:
        return read_instance(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except InstanceError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_cycles(path: str) -> list[list[int]]:
    try:
        with open(path) as fh:
            cycles = parse_cycles(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except InstanceError as exc:
        raise InputError(f"{path}: {exc}") from None
    if not cycles:
        raise InputError(f"{path}: no cycle found")
    return cycles


def _write_cycles(path: str | None, cycles: list[Sequence[int]]) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(format_cycles(cycles))


def _figure(path: str | None, ps, cycle=None, title: str = "") -> None:
    if path:
        from .plotting import render_svg  # matplotlib is slow to import; only pay for it when drawing

        render_svg(path, ps, cycle, title=title)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_detect(args, rep: Report) -> int:
    ps = _load(args.instance)
    rep.field("instance", ps.digest())
    wit = find_configuration(ps)
    rep.field("nonrainbow_cycle", "yes" if wit else "no")
    if wit is None:
        return NO
    roles = f"u={wit.u} u'={wit.u2} v={wit.v} v'={wit.v2}" + (f" w={wit.w}" if wit.w is not None else "")
    rep.field("witness", f"{wit.kind} {roles}")
    cyc = witness_cycle(ps, wit)
    rep.cycle("cycle", cyc.vertices)
    _write_cycles(args.output, [cyc.vertices])
    _figure(args.figure, ps, cyc.vertices, f"{wit.kind} witness")
    return OK


def _require_valid(ps, seq) -> PlaneCycle:
    res = validate_cycle(ps, seq)
    if isinstance(res, CycleViolation):
        raise InputError(f"cycle {' '.join(map(str, seq))} is invalid: {res.condition}: {res.message}")
    return res


def cmd_shorten(args, rep: Report) -> int:
    ps = _load(args.instance)
    rep.field("instance", ps.digest())
    cyc = _require_valid(ps, _load_cycles(args.cycle)[0])
    try:
        steps = shorten_to_small(ps, cyc) if args.repeat else [shorten_step(ps, cyc)]
    except ShorteningError as exc:
        raise InputError(str(exc)) from None
    rep.field("input_length", len(cyc))
    for j, step in enumerate(steps, 1):
        rep.field(f"step{j}", f"{step.move} length={len(step.cycle)}")
    out = steps[-1].cycle
    rep.field("length", len(out))
    rep.cycle("cycle", out.vertices)
    _write_cycles(args.output, [out.vertices])
    _figure(args.figure, ps, out.vertices, f"shortened to {len(out)}")
    return OK


def cmd_nested(args, rep: Report) -> int:
    ps = _load(args.instance)
    rep.field("instance", ps.digest())
    try:
        if args.blues == "auto":
            dec = nested.suggest_B(ps)
        else:
            try:
                ids = [int(v) for v in args.blues.replace(",", " ").split()]
            except ValueError:
                raise InputError(f"--blues expects 'auto' or point ids, got {args.blues!r}") from None
            dec = nested.validate_nested(ps, ids)
    except nested.NestedError as exc:
        raise InputError(f"nested precondition fails ({exc.clause}): {exc}") from None
    rep.field("B", " ".join(map(str, dec.B)))
    n = len(ps) // 2
    ts = range(2, n + 1) if args.t == "all" else [_int(args.t, "--t")]
    cycles = []
    for t in ts:
        if not 2 <= t <= n:
            raise InputError(f"--t must lie in 2..{n}")
        cyc = nested.cycle_of_length(ps, dec.B, t)
        rep.cycle(f"cycle_{2 * t}", cyc.vertices)
        cycles.append(cyc.vertices)
    _write_cycles(args.output, cycles)
    _figure(args.figure, ps, cycles[-1], f"length {len(cycles[-1])}")
    return OK


def _int(value: str, flag: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise InputError(f"{flag} expects an integer, got {value!r}") from None


def cmd_hamilton(args, rep: Report) -> int:
    ps = _load(args.instance)
    rep.field("instance", ps.digest())
    try:
        res = fpt.decide_hamiltonian(ps, construct=args.construct or bool(args.output or args.figure),
                                     workers=args.workers)
    except fpt.FPTError as exc:
        raise InputError(str(exc)) from None
    _, interior = fpt.boundary_and_interior(ps)
    rep.field("k", len(interior))
    rep.field("method", res.method)
    rep.field("hamiltonian", "yes" if res.hamiltonian else "no")
    if res.cycle is not None:
        rep.cycle("cycle", res.cycle.vertices)
        _write_cycles(args.output, [res.cycle.vertices])
        _figure(args.figure, ps, res.cycle.vertices, "plane Hamiltonian cycle")
    return OK if res.hamiltonian else NO


def cmd_enumerate(args, rep: Report) -> int:
    ps = _load(args.instance)
    rep.field("instance", ps.digest())
    try:
        inv = oracle.enumerate_plane_cycles(ps, args.max_len)
    except (oracle.OracleSizeError, ValueError) as exc:
        raise InputError(str(exc)) from None
    rep.field("total", inv.total)
    rep.field("rainbow", inv.rainbow_count)
    rep.field("nonrainbow", inv.nonrainbow_count)
    for t, c in inv.counts.items():
        rep.field(f"length_{t}", c)
    _write_cycles(args.output, inv.all_cycles())
    return OK


def cmd_gen(args, rep: Report) -> int:
    spec = GenSpec(kind=args.kind, n=args.n, seed=args.seed, color_count=args.colors, coord_range=args.range,
                   balanced=args.balanced, extra=args.extra, k=args.k)
    try:
        ps = generate(spec)
    except GenerationError as exc:
        raise InputError(str(exc)) from None
    text = format_instance(ps)
    rep.field("instance", ps.digest())
    rep.field("points", len(ps))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        rep.field("written", args.output)
    else:
        rep.out.write(text)
    return OK


def cmd_validate(args, rep: Report) -> int:
    ps = _load(args.instance)
    rep.field("instance", ps.digest())
    status = OK
    for j, seq in enumerate(_load_cycles(args.cycle)):
        res = validate_cycle(ps, seq)
        if isinstance(res, CycleViolation):
            rep.field(f"cycle{j}", f"invalid {res.condition}: {res.message}")
            status = NO
        else:
            prof = color_profile(ps, seq)
            rep.field(f"cycle{j}", f"valid length={len(seq)} rainbow={'yes' if prof.rainbow else 'no'}")
    return status


def cmd_render(args, rep: Report) -> int:
    ps = _load(args.instance)
    rep.field("instance", ps.digest())
    cyc = None
    if args.cycle:
        cyc = _require_valid(ps, _load_cycles(args.cycle)[0]).vertices
    _figure(args.output, ps, cyc)
    rep.field("written", args.output)
    return OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planecycles", description="Plane cycles in colored point sets.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help_: str, instance: bool = True, figure: bool = True):
        sp = sub.add_parser(name, help=help_)
        if instance:
            sp.add_argument("instance", help="instance file: one 'x y color' per line")
        if figure:
            sp.add_argument("--figure", metavar="SVG", help="also draw the result")
        sp.set_defaults(func=fn)
        return sp

    sp = add("detect", cmd_detect, "find a non-rainbow plane cycle via forbidden configurations")
    sp.add_argument("-o", "--output", help="write the witness cycle here")

    sp = add("shorten", cmd_shorten, "shorten a non-rainbow plane cycle")
    sp.add_argument("--cycle", required=True, help="cycle file (first line is used)")
    sp.add_argument("--repeat", action="store_true", help="shorten until length 4 or 5")
    sp.add_argument("-o", "--output", help="write the shortened cycle here")

    sp = add("nested", cmd_nested, "plane cycle of length 2t in a nested instance")
    sp.add_argument("--blues", default="auto", help="'auto' or comma/space separated blue ids")
    sp.add_argument("--t", required=True, help="half the cycle length, or 'all'")
    sp.add_argument("-o", "--output", help="write the cycle(s) here")

    sp = add("hamilton", cmd_hamilton, "decide plane Hamiltonicity (two balanced colors)")
    sp.add_argument("--construct", action="store_true", help="print a cycle when one exists")
    sp.add_argument("--workers", type=int, default=None,
                    help=f"search processes (default: ${fpt.WORKERS_ENV} or 1)")
    sp.add_argument("-o", "--output", help="write the cycle here")

    sp = add("enumerate", cmd_enumerate, "brute-force list of all plane cycles", figure=False)
    sp.add_argument("--max-len", type=int, default=None)
    sp.add_argument("-o", "--output", help="write all cycles here")

    sp = add("gen", cmd_gen, "generate an instance", instance=False, figure=False)
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("--n", type=int, default=4, help="points per color (total for 'random')")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--colors", type=int, default=2)
    sp.add_argument("--range", type=int, default=1000, help="coordinate range for 'random'")
    sp.add_argument("--balanced", action="store_true", help="'random' with equal red and blue counts")
    sp.add_argument("--extra", type=int, default=0, help="blues outside the ring for 'nested'")
    sp.add_argument("--k", type=int, default=0, help="interior points for 'near_convex'")
    sp.add_argument("-o", "--output")

    sp = add("validate", cmd_validate, "check cycles against an instance", figure=False)
    sp.add_argument("--cycle", required=True)

    sp = add("render", cmd_render, "draw an instance (and a cycle) as SVG", figure=False)
    sp.add_argument("--cycle")
    sp.add_argument("-o", "--output", required=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # instances printed by gen stay parseable: report lines become comments
    piped = args.command == "gen" and not args.output
    rep = Report(args.command, prefix="# " if piped else "")
    try:
        code = args.func(args, rep)
    except InputError as exc:
        rep.field("error", exc)
        print(f"planecycles {args.command}: {exc}", file=sys.stderr)
        return BAD_INPUT
    rep.finish()
    return code


if __name__ == "__main__":
    sys.exit(main())
