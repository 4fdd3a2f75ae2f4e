#!/usr/bin/env python3
"""
Foam drainage series solvers - command line

    python run_drainage.py table --preset table2
    python run_drainage.py table --problem tanh --c 3 --t 0.1 --terms 10 --xs -10:0:2 --methods rdtm,adm,ldm
    python run_drainage.py solve --problem tanh --c 1 --t 0 --xs 0
    python run_drainage.py figure --preset figure1 --out figure1.csv
    python run_drainage.py bench --steps 5,10,15,20,25 --reps 5
"""

import argparse
import contextlib
import json
import math
import re
import sys
import time
from dataclasses import dataclass

import numpy as np

from drainage.bench_harness import (METHODS, FrontError, bench, bench_summary, error_table, figure_series,
                                    print_bench_comparison, write_error_csv, write_figure_csv,
                                    write_timing_csv)
from drainage.fde_model import Problem, ProblemError, ProblemKind
from drainage.reference_tables import TABLE_PRESETS
from drainage.series_core import DerivativeBudgetError, NonFiniteError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_OUTPUT = 4

COMMANDS = ('solve', 'table', 'figure', 'bench')
MAX_GRID_POINTS = 1_000_000

# flags whose values may legitimately start with '-'
_VALUE_FLAGS = ('--xs', '--c', '--t', '--steps')
_NEGATIVE_VALUE = re.compile(r'^-[\d.]')


@dataclass(frozen=True)
class RunConfig:
    command: str
    problem: str = 'tanh'
    c: float = 1.0
    t: float = None
    terms: int = 10
    guard: int = 4
    xs: tuple = ()
    methods: tuple = METHODS
    out: str = '-'
    past_front: bool = False
    steps: tuple = (5, 10, 15, 20, 25)
    reps: int = 5
    max_workers: int = 1
    summary: str = None


# ==================== PARSE ARGUMENTS ====================

class ListPresetsAction(argparse.Action):

    def __init__(self, option_strings, dest, **kwargs):
        super().__init__(option_strings, dest, nargs=0, default=argparse.SUPPRESS, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        print("🎯 AVAILABLE TABLE PRESETS")
        print("=" * 50)
        for name, preset in TABLE_PRESETS.items():
            print(f"\n'{name}' ({preset['command']}):")
            print(f"  {preset['description']}")
        parser.exit(EXIT_OK)


def parse_xs(text):
    """'a,b,c' list or inclusive 'start:stop:step' range"""
    if ':' not in text:
        values = tuple(float(v) for v in text.split(',') if v.strip())
        if not all(math.isfinite(v) for v in values):
            raise ValueError(f"x values must be finite, got {text!r}")
        return values

    parts = text.split(':')
    if len(parts) != 3:
        raise ValueError(f"range must be start:stop:step, got {text!r}")
    start, stop, step = (float(v) for v in parts)
    if not all(math.isfinite(v) for v in (start, stop, step)):
        raise ValueError(f"range bounds and step must be finite, got {text!r}")
    if step == 0:
        raise ValueError("range step must be non-zero")
    span = (stop - start) / step + 0.5
    if not math.isfinite(span) or span >= MAX_GRID_POINTS:
        raise ValueError(f"range {text!r} has more than {MAX_GRID_POINTS} points")
    count = math.floor(span)
    if count < 0:
        raise ValueError(f"range {text!r} is empty (step points away from stop)")
    return tuple(float(v) for v in start + step * np.arange(count + 1))


def _glue_negative_values(argv):
    glued = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            glued.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        glued.append(token)
        i += 1
    return glued


def build_parser():
    parser = argparse.ArgumentParser(description="Foam drainage series solvers (RDTM, ADM, LDM) and benchmark harness")
    parser.add_argument('--list_presets', action=ListPresetsAction, help='List table presets and exit')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--preset', type=str, choices=list(TABLE_PRESETS.keys()), help='Fill unset flags from a table preset')
    common.add_argument('--problem', type=str, choices=[k.value for k in ProblemKind], help='Initial-value problem (default: tanh)')
    common.add_argument('--c', type=float, help='Wave speed of the tanh wave (default: 1)')
    common.add_argument('--terms', type=int, help='Number of series terms K (default: 10)')
    common.add_argument('--guard', type=int, help='Extra x-order margin (default: 4)')
    common.add_argument('--methods', type=str, help='Comma-separated subset of rdtm,adm,ldm (default: all)')
    common.add_argument('--out', type=str, help="Output CSV path, '-' for standard output (default: -)")

    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    for name, help_text in (('solve', 'Method values at (x, t)'),
                            ('table', 'Error table (tanh) or value table (logistic)'),
                            ('figure', 'RDTM absolute error curve')):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument('--t', type=float, help='Time')
        sub.add_argument('--xs', type=str, help='x values: list a,b,c or range start:stop:step')
        sub.add_argument('--past_front', action='store_true', default=None, help='Allow error rows past x = ct')
        sub.add_argument('--max_workers', type=int, help='Rows computed concurrently (default: 1)')

    bench_parser = subparsers.add_parser('bench', parents=[common], help='Timing and multiplication counts')
    bench_parser.add_argument('--steps', type=str, help='Comma-separated step counts (default: 5,10,15,20,25)')
    bench_parser.add_argument('--reps', type=int, help='Repetitions per timing, best-of (default: 5)')
    bench_parser.add_argument('--summary', type=str, help='Optional JSON summary path')

    return parser


def parse_args(argv=None):
    parser = build_parser()
    args = parser.parse_args(_glue_negative_values(list(sys.argv[1:] if argv is None else argv)))

    if args.command is None:
        parser.error('a command is required: ' + ', '.join(COMMANDS))

    values = {k: v for k, v in vars(args).items() if v is not None}
    if args.preset:
        preset = TABLE_PRESETS[args.preset]
        if preset['command'] != args.command:
            parser.error(f"--preset {args.preset} is for the '{preset['command']}' command")
        for key, value in preset.items():
            if key not in ('command', 'description'):
                values.setdefault(key, value)

    try:
        config = RunConfig(
            command=args.command,
            problem=values.get('problem', 'tanh'),
            c=float(values.get('c', 1.0)),
            t=values.get('t'),
            terms=int(values.get('terms', 10)),
            guard=int(values.get('guard', 4)),
            xs=parse_xs(values['xs']) if 'xs' in values else (),
            methods=tuple(m.strip() for m in values.get('methods', ','.join(METHODS)).split(',') if m.strip()),
            out=values.get('out', '-'),
            past_front=bool(values.get('past_front', False)),
            steps=tuple(int(s) for s in str(values.get('steps', '5,10,15,20,25')).split(',') if s.strip()),
            reps=int(values.get('reps', 5)),
            max_workers=int(values.get('max_workers', 1)),
            summary=values.get('summary'),
        )
    except ValueError as e:
        parser.error(str(e))

    _validate(parser, config)
    return config


def _validate(parser, config):
    if config.terms < 1:
        parser.error(f"--terms must be >= 1, got {config.terms}")
    if config.guard < 0:
        parser.error(f"--guard must be >= 0, got {config.guard}")
    if config.problem == 'tanh' and not (math.isfinite(config.c) and config.c > 0):
        parser.error(f"--c must be > 0 for the tanh problem, got {config.c}")
    if not config.methods:
        parser.error('--methods must name at least one method')
    unknown = [m for m in config.methods if m not in METHODS]
    if unknown:
        parser.error(f"--methods: unknown method(s) {', '.join(unknown)}")
    if config.command == 'bench':
        if config.reps < 3:
            parser.error(f"--reps must be >= 3, got {config.reps}")
        if not config.steps or min(config.steps) < 0:
            parser.error('--steps must be a non-empty list of counts >= 0')
        return
    if config.t is None or not math.isfinite(config.t) or config.t < 0:
        parser.error('--t is required and must be >= 0')
    if not config.xs:
        parser.error('--xs is required')
    if config.max_workers < 1:
        parser.error(f"--max_workers must be >= 1, got {config.max_workers}")


# ==================== RUN ====================

def make_problem(config):
    if config.problem == 'logistic':
        return Problem.logistic_front(terms=config.terms, guard=config.guard)
    return Problem.tanh_wave(config.c, terms=config.terms, guard=config.guard)


def _open_output(path):
    if path == '-':
        return contextlib.nullcontext(sys.stdout)
    return open(path, 'w', newline='')


def run(config):
    tS = time.time()
    print(f"🚀 {config.command}: problem={config.problem}, terms={config.terms}, methods={','.join(config.methods)}",
          file=sys.stderr)

    try:
        problem = make_problem(config)

        if config.command == 'bench':
            records = bench(problem, config.methods, config.steps, config.reps)
            summary = bench_summary(records, 'table5' if problem.kind is ProblemKind.TANH_WAVE else 'table7')
            print_bench_comparison(summary)
            write = lambda stream: write_timing_csv(records, stream)

        elif config.command == 'figure':
            points = figure_series(problem, config.t, config.xs)
            write = lambda stream: write_figure_csv(points, stream)

        else:
            mode = 'values' if config.command == 'solve' else None
            rows = error_table(problem, config.methods, config.xs, config.t, mode=mode,
                               past_front=config.past_front, max_workers=config.max_workers)
            write = lambda stream: write_error_csv(rows, config.methods, stream)

    except (NonFiniteError, DerivativeBudgetError) as e:
        print(f"❌ Numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (FrontError, ProblemError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE

    print('Compute time %.3f sec.' % (time.time() - tS), file=sys.stderr)

    try:
        with _open_output(config.out) as stream:
            write(stream)
        if config.command == 'bench' and config.summary:
            with open(config.summary, 'w') as f:
                json.dump(summary, f, indent=2)
    except OSError as e:
        print(f"❌ Could not write output: {e}", file=sys.stderr)
        return EXIT_OUTPUT

    if config.out != '-':
        print(f"✅ Results saved to {config.out}", file=sys.stderr)
    return EXIT_OK


def main(argv=None):
    return run(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
