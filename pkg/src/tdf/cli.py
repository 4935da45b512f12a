"""PACE-style command line: ``.gr`` in, ``.tree`` out.

    tdf [solve] [INPUT] [-o OUTPUT] [--time-limit S] [--mode MODE] ...
    tdf verify --graph G.gr --tree T.tree

On SIGTERM or SIGINT the best decomposition found so far is written and the
process exits 0.  Every written decomposition is verified first.

Exit codes: 0 success, 1 verification failed (``verify``), 2 bad input,
3 the solver produced an invalid decomposition.
"""

import argparse
import logging
import os
import signal
import sys
from dataclasses import dataclass
from fractions import Fraction

from .decomposition import ROOT, Decomposition, verify_decomposition
from .graph import ParseError, read_gr
from .greedy import DEFAULT_PARAMS, greedy_build, greedy_build_lookahead, greedy_eliminate, greedy_superfast
from .solver import Budget, Incumbent, SolverConfig, Solver, _degree_order, trivial_decomposition

log = logging.getLogger("tdf")

MODES = ("full", "superfast", "build", "build-lookahead", "eliminate")
EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_BUG = 0, 1, 2, 3


class TreeParseError(ValueError):
    pass


def format_tree(d):
    """PACE ``.tree`` text: depth, then each vertex's 1-based parent (0 for roots)."""
    lines = [str(d.depth)]
    lines.extend(str(p + 1) for p in d.parent)
    return "\n".join(lines) + "\n"


def write_tree(d, sink):
    """Write ``d`` in one call so an interrupted process never leaves half a file."""
    data = format_tree(d)
    if hasattr(sink, "buffer"):
        sink = sink.buffer
    try:
        sink.write(data.encode())
    except TypeError:
        sink.write(data)
    sink.flush()


def parse_tree(data, n=None):
    """Decomposition with the depth claimed on the first line."""
    if isinstance(data, bytes):
        data = data.decode()
    rows = []
    for lineno, line in enumerate(data.splitlines(), 1):
        line = line.strip()
        if not line or line[0] == "c":
            continue
        try:
            rows.append((lineno, int(line)))
        except ValueError:
            raise TreeParseError(f"not an integer, line {lineno}") from None
    if not rows:
        raise TreeParseError("empty tree file")
    depth = rows[0][1]
    parents = rows[1:]
    if n is not None and len(parents) != n:
        raise TreeParseError(f"expected {n} parent lines, got {len(parents)}")
    size = len(parents)
    parent = []
    for lineno, p in parents:
        if not 0 <= p <= size:
            raise TreeParseError(f"parent out of range, line {lineno}")
        parent.append(ROOT if p == 0 else p - 1)
    return Decomposition(tuple(parent), depth)


@dataclass
class RunConfig:
    input: str = "-"
    output: str = "-"
    time_limit: float = 0
    seed: int = 0
    mode: str = "full"
    balance_goal: Fraction = Fraction(1, 5)
    ell: int = None
    graph: str = None
    tree: str = None
    command: str = "solve"


class _Terminate(Exception):
    pass


class _SignalGate:
    """Raises :class:`_Terminate` on a signal once armed; until then only remembers it."""

    def __init__(self):
        self.armed = False
        self.pending = False

    def __call__(self, signum, frame):
        if self.armed:
            raise _Terminate(signum)
        self.pending = True

    def arm(self):
        self.armed = True
        if self.pending:
            raise _Terminate(None)


def _open_out(path):
    return sys.stdout if path in (None, "-") else open(path, "wb")


def _run_heuristic(g, cfg, incumbent):
    if cfg.mode == "superfast":
        res = greedy_superfast(g, cfg.ell or 64, _degree_order(g))
    elif cfg.mode == "build":
        res = greedy_build(g, DEFAULT_PARAMS)
    elif cfg.mode == "build-lookahead":
        res = greedy_build_lookahead(g, DEFAULT_PARAMS, ell=cfg.ell or 1024)
    elif cfg.mode == "eliminate":
        res = greedy_eliminate(g, DEFAULT_PARAMS)
    else:
        budget = Budget(cfg.time_limit or None, cfg.seed)
        scfg = SolverConfig(balance_goals=(cfg.balance_goal, Fraction(1, 4), Fraction(1, 3)))
        if cfg.ell:
            scfg.lookahead_ell = cfg.ell
        if not cfg.time_limit:
            scfg.max_rounds = 10**9
        Solver(g, budget, scfg, incumbent).run()
        return
    incumbent.offer(res.decomposition)


def run_main(cfg):
    if cfg.command == "verify":
        return _verify(cfg)

    incumbent = Incumbent()
    g = None
    gate = _SignalGate()
    old = {s: signal.signal(s, gate) for s in (signal.SIGTERM, signal.SIGINT)}
    try:
        try:
            g = read_gr(sys.stdin.buffer if cfg.input in (None, "-") else cfg.input)
        except (ParseError, OSError) as e:
            print(f"tdf: {e}", file=sys.stderr)
            return EXIT_INPUT
        log.info("read graph n=%d m=%d", g.n, g.m)
        gate.arm()
        _run_heuristic(g, cfg, incumbent)
    except _Terminate:
        log.info("termination requested")
    finally:
        # nothing may interrupt the final write
        for signum in old:
            signal.signal(signum, signal.SIG_IGN)

    if g is None:
        return EXIT_INPUT
    d = incumbent.decomposition
    if d is None:
        d = trivial_decomposition(g)
    bad = verify_decomposition(g, d)
    if bad is not None:
        print(f"tdf: internal error, invalid decomposition: {bad}", file=sys.stderr)
        return EXIT_BUG
    out = _open_out(cfg.output)
    try:
        write_tree(d, out)
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"c depth {d.depth}", file=sys.stderr)
    return EXIT_OK


def _verify(cfg):
    try:
        g = read_gr(cfg.graph)
        with open(cfg.tree, "rb") as f:
            d = parse_tree(f.read(), g.n)
    except (ParseError, TreeParseError, OSError) as e:
        print(f"tdf: {e}", file=sys.stderr)
        return EXIT_INPUT
    bad = verify_decomposition(g, d)
    if bad is not None:
        print(f"invalid: {bad}", file=sys.stderr)
        return EXIT_INVALID
    print(f"ok depth {d.depth}")
    return EXIT_OK


def _fraction(text):
    try:
        f = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text}") from None
    if not 0 < f <= Fraction(1, 2):
        raise argparse.ArgumentTypeError("balance goal must be in (0, 1/2]")
    return f


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _non_negative(text):
    v = float(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser():
    ap = argparse.ArgumentParser(prog="tdf", description="Heuristic treedepth decompositions (PACE .gr -> .tree).")
    sub = ap.add_subparsers(dest="command")

    sp = sub.add_parser("solve", help="compute a decomposition (default command)")
    sp.add_argument("input", nargs="?", default="-", help="input .gr file (default: stdin)")
    sp.add_argument("-o", "--output", default="-", help="output .tree file (default: stdout)")
    sp.add_argument("-t", "--time-limit", type=_non_negative, default=0,
                    help="seconds to run; 0 runs until interrupted (full mode)")
    sp.add_argument("-s", "--seed", type=int, default=0, help="random seed; TDF_SEED overrides")
    sp.add_argument("-m", "--mode", choices=MODES, default="full")
    sp.add_argument("--balance-goal", type=_fraction, default=Fraction(1, 5),
                    help="first balance goal for cuts, e.g. 1/5")
    sp.add_argument("--ell", type=_positive, default=None,
                    help="lookahead window (superfast: 64, build-lookahead: 1024)")
    sp.add_argument("-v", "--verbose", action="store_true")

    vp = sub.add_parser("verify", help="check a .tree file against a .gr file")
    vp.add_argument("--graph", required=True)
    vp.add_argument("--tree", required=True)
    vp.add_argument("-v", "--verbose", action="store_true")
    return ap


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] not in ("solve", "verify", "-h", "--help"):
        argv = ["solve"] + argv
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="c %(message)s", stream=sys.stderr)
    if args.command == "verify":
        cfg = RunConfig(command="verify", graph=args.graph, tree=args.tree)
    else:
        seed = args.seed
        env = os.environ.get("TDF_SEED")
        if env:
            try:
                seed = int(env)
            except ValueError:
                print(f"tdf: TDF_SEED is not an integer: {env!r}", file=sys.stderr)
                return EXIT_INPUT
        cfg = RunConfig(input=args.input, output=args.output, time_limit=args.time_limit, seed=seed,
                        mode=args.mode, balance_goal=args.balance_goal, ell=args.ell)
    return run_main(cfg)


if __name__ == "__main__":
    sys.exit(main())
