#!/usr/bin/env python3
"""
Benchmark harness for the foam drainage solvers
Reproduces the error tables, figure curves and cost comparisons as CSV
"""

import csv
import math
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .decomposition_engines import assemble_partial_sum, build_components
from .fde_model import ProblemError, ProblemKind, exact_u
from .reference_tables import PUBLISHED_VALUES
from .rdtm_engine import build_spectra, partial_sum_at
from .series_core import MulCounter

METHODS = ('rdtm', 'adm', 'ldm')

ERROR_COLUMNS = ('x', 'method', 'approx', 'exact', 'abs_error')
FIGURE_COLUMNS = ('x', 'abs_error')
TIMING_COLUMNS = ('method', 'steps', 'wall_seconds', 'mul_count', 'reps')


class FrontError(ValueError):
    pass


@dataclass(frozen=True)
class ErrorRow:
    x: float
    approx: dict          # method -> value
    exact: float = None   # None in values mode

    def abs_error(self, method):
        if self.exact is None:
            return None
        return abs(self.approx[method] - self.exact)


@dataclass(frozen=True)
class TimingRecord:
    method: str
    steps: int
    wall_seconds: float
    mul_count: int
    reps: int


# ==================== EVALUATION ====================

def method_value(p, method, x, t, counter=None, terms=None):
    """Partial sum of one method at (x, t), expanded about x"""
    if method == 'rdtm':
        return partial_sum_at(build_spectra(p, x, counter, terms), t)
    if method in ('adm', 'ldm'):
        return assemble_partial_sum(build_components(p, x, method, counter, terms), t)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def _check_methods(methods):
    methods = tuple(methods)
    if not methods:
        raise ValueError("at least one method is required")
    unknown = [m for m in methods if m not in METHODS]
    if unknown:
        raise ValueError(f"unknown method(s): {', '.join(unknown)}")
    return methods


def _check_front(p, xs, t, past_front):
    if p.kind is not ProblemKind.TANH_WAVE or past_front:
        return
    beyond = [x for x in xs if x > p.c * t]
    if beyond:
        raise FrontError(
            f"x = {beyond[0]} lies past the wave front x = ct = {p.c * t}; "
            f"pass the front override to report errors there")


def error_table(p, methods, xs, t, mode=None, past_front=False, max_workers=1):
    """
    Rows of method values (and exact errors) over an x grid

    Args:
        p: Problem
        methods: subset of METHODS
        xs: evaluation points, each gets its own expansion center
        t: time
        mode: 'error' (with exact column) or 'values'; defaults to 'error'
              for the tanh wave and 'values' for the logistic front
        past_front: allow error mode at x > ct
        max_workers: rows computed concurrently when > 1

    Returns:
        list of ErrorRow in xs order
    """
    methods = _check_methods(methods)
    if mode is None:
        mode = 'error' if p.kind is ProblemKind.TANH_WAVE else 'values'
    if mode not in ('error', 'values'):
        raise ValueError(f"mode must be 'error' or 'values', got {mode!r}")
    if mode == 'error':
        _check_front(p, xs, t, past_front)

    def compute_row(x):
        approx = {m: method_value(p, m, x, t) for m in methods}
        exact = exact_u(p, x, t) if mode == 'error' else None
        return ErrorRow(float(x), approx, exact)

    if max_workers <= 1:
        return [compute_row(x) for x in xs]
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(compute_row, xs))


def figure_series(p, t, xs, K=None):
    if p.kind is not ProblemKind.TANH_WAVE:
        raise ProblemError("figure curves are defined for the tanh wave only")
    if K is not None:
        p = p.with_terms(K)
    rows = error_table(p, ['rdtm'], xs, t, mode='error')
    return [(row.x, row.abs_error('rdtm')) for row in rows]


def convergence_sweep(p, x, t, Ks):
    """RDTM absolute error at one point for each term count in Ks"""
    _check_front(p, [x], t, past_front=False)
    exact = exact_u(p, x, t)
    return [(K, abs(method_value(p, 'rdtm', x, t, terms=K) - exact)) for K in Ks]


# ==================== TIMING ====================

def timing_run(p, method, steps, reps=5, center=0.0):
    """
    Best-of-reps wall time for building a method's representation to `steps`
    terms at one center, plus its deterministic multiplication count
    """
    _check_methods([method])
    if reps < 3:
        raise ValueError(f"reps must be >= 3, got {reps}")
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")

    best = math.inf
    counts = set()
    for _ in range(reps):
        counter = MulCounter()
        tS = time.perf_counter()
        if method == 'rdtm':
            build_spectra(p, center, counter, terms=steps)
        else:
            build_components(p, center, method, counter, terms=steps)
        best = min(best, time.perf_counter() - tS)
        counts.add(counter.total)

    if len(counts) != 1:
        raise RuntimeError(f"multiplication count varied across repetitions: {sorted(counts)}")
    return TimingRecord(method, steps, best, counts.pop(), reps)


def bench(p, methods, steps_list, reps=5):
    records = []
    for method in _check_methods(methods):
        for steps in steps_list:
            record = timing_run(p, method, steps, reps)
            print(f"⏱️  {method.upper():<5} {steps:>3} steps: {record.wall_seconds:.4f} sec, "
                  f"{record.mul_count} multiplications", file=sys.stderr)
            records.append(record)
    return records


def published_timings(reference_key):
    table = PUBLISHED_VALUES.get(reference_key, {})
    return {steps: {m: parse_published_number(v) for m, v in row.items()} for steps, row in table.items()}


def bench_summary(records, reference_key=None):
    published = published_timings(reference_key) if reference_key else {}
    return {
        'reference_table': reference_key,
        'records': [
            {
                'method': r.method,
                'steps': r.steps,
                'wall_seconds': r.wall_seconds,
                'mul_count': r.mul_count,
                'reps': r.reps,
                'published_seconds': published.get(r.steps, {}).get(r.method),
            }
            for r in records
        ],
    }


def print_bench_comparison(summary):
    print(f"\n📊 COST COMPARISON ({summary['reference_table'] or 'no published reference'})", file=sys.stderr)
    print("=" * 60, file=sys.stderr)
    print(f"{'Method':<8} {'Steps':<6} {'Wall (s)':<12} {'Mults':<10} {'Published (s)':<10}", file=sys.stderr)
    print("-" * 60, file=sys.stderr)
    for r in summary['records']:
        published = '-' if r['published_seconds'] is None else f"{r['published_seconds']:.3f}"
        print(f"{r['method']:<8} {r['steps']:<6} {r['wall_seconds']:<12.5f} {r['mul_count']:<10} {published:<10}",
              file=sys.stderr)


# ==================== CSV ====================

def format_real(value):
    return '' if value is None else repr(float(value))


def _parse_real(text):
    return None if text == '' else float(text)


def write_error_csv(rows, methods, stream):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(ERROR_COLUMNS)
    for row in rows:
        for m in methods:
            writer.writerow([format_real(row.x), m, format_real(row.approx[m]),
                             format_real(row.exact), format_real(row.abs_error(m))])


def read_error_csv(stream):
    reader = csv.DictReader(stream)
    if tuple(reader.fieldnames or ()) != ERROR_COLUMNS:
        raise ValueError(f"unexpected columns {reader.fieldnames}")
    return [
        {
            'x': float(r['x']),
            'method': r['method'],
            'approx': float(r['approx']),
            'exact': _parse_real(r['exact']),
            'abs_error': _parse_real(r['abs_error']),
        }
        for r in reader
    ]


def write_figure_csv(points, stream):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(FIGURE_COLUMNS)
    for x, err in points:
        writer.writerow([format_real(x), format_real(err)])


def read_figure_csv(stream):
    reader = csv.DictReader(stream)
    if tuple(reader.fieldnames or ()) != FIGURE_COLUMNS:
        raise ValueError(f"unexpected columns {reader.fieldnames}")
    return [(float(r['x']), float(r['abs_error'])) for r in reader]


def write_timing_csv(records, stream):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(TIMING_COLUMNS)
    for r in records:
        writer.writerow([r.method, r.steps, format_real(r.wall_seconds), r.mul_count, r.reps])


def read_timing_csv(stream):
    reader = csv.DictReader(stream)
    if tuple(reader.fieldnames or ()) != TIMING_COLUMNS:
        raise ValueError(f"unexpected columns {reader.fieldnames}")
    return [TimingRecord(r['method'], int(r['steps']), float(r['wall_seconds']),
                         int(r['mul_count']), int(r['reps'])) for r in reader]


# ==================== PUBLISHED NUMBER FORMAT ====================

_PUBLISHED_NUMBER = re.compile(r'^\s*([+-]?\d+(?:,\d*)?(?:[eE][+-]?\d+)?)\s*(?:s|se|sec)?\s*$')


def parse_published_number(text):
    """Read '0,10317037658E-4' or '1,025sec' style numbers"""
    match = _PUBLISHED_NUMBER.match(text)
    if not match:
        raise ValueError(f"not a number in the published format: {text!r}")
    return float(match.group(1).replace(',', '.'))
