#!/usr/bin/env python3
"""
Tests for the command-line front end
"""

import json

import pytest

import run_drainage
from drainage.bench_harness import read_error_csv, read_figure_csv, read_timing_csv
from run_drainage import EXIT_NUMERICAL, EXIT_OK, EXIT_OUTPUT, EXIT_USAGE, main, parse_args, parse_xs

ERROR_TABLE_ARGV = ['table', '--problem', 'tanh', '--c', '3', '--t', '0.1', '--terms', '10',
               '--xs', '-10:0:2', '--methods', 'rdtm,adm,ldm']


# ==================== PARSING ====================

def test_parse_error_table():
    config = parse_args(ERROR_TABLE_ARGV)
    assert config.command == 'table'
    assert (config.problem, config.c, config.t, config.terms) == ('tanh', 3.0, 0.1, 10)
    assert config.xs == (-10.0, -8.0, -6.0, -4.0, -2.0, 0.0)
    assert config.methods == ('rdtm', 'adm', 'ldm')
    assert config.out == '-'


def test_parse_logistic_table_with_negative_start():
    config = parse_args(['table', '--problem', 'logistic', '--t', '0.1', '--xs', '-10:0:1'])
    assert config.problem == 'logistic'
    assert len(config.xs) == 11
    assert config.xs[0] == -10.0 and config.xs[-1] == 0.0


def test_preset_fills_unset_flags():
    config = parse_args(['table', '--preset', 'table2'])
    assert config == parse_args(ERROR_TABLE_ARGV)
    override = parse_args(['table', '--preset', 'table2', '--t', '0.01'])
    assert override.t == 0.01 and override.c == 3.0


def test_preset_for_other_command():
    with pytest.raises(SystemExit) as info:
        parse_args(['table', '--preset', 'figure1'])
    assert info.value.code == EXIT_USAGE


@pytest.mark.parametrize('argv', [
    ['table', '--c', '3', '--t', '0.1', '--terms', '0', '--xs', '0'],
    ['table', '--c', '3', '--t', '0.1', '--guard', '-1', '--xs', '0'],
    ['table', '--c', '0', '--t', '0.1', '--xs', '0'],
    ['table', '--c', '-1', '--t', '0.1', '--xs', '0'],
    ['table', '--c', '1', '--t', '-0.1', '--xs', '0'],
    ['table', '--c', '1', '--xs', '0'],
    ['table', '--c', '1', '--t', '0.1'],
    ['table', '--c', '1', '--t', '0.1', '--xs', '0', '--methods', 'rdtm,vim'],
    ['table', '--c', '1', '--t', '0.1', '--xs', '0:1:0'],
    ['table', '--c', '1', '--t', '0.1', '--xs', 'a,b'],
    ['table', '--c', '1', '--t', '0.1', '--xs', '0:inf:1'],
    ['table', '--c', '1', '--t', '0.1', '--xs', '-1e12:0:1'],
    ['solve', '--c', '1', '--t', '0.1', '--xs', '0,nan'],
    ['bench', '--reps', '2'],
    ['bench', '--steps', '5,x'],
    ['table', '--problem', 'burgers', '--t', '0.1', '--xs', '0'],
    [],
])
def test_usage_errors_exit_two(argv):
    with pytest.raises(SystemExit) as info:
        parse_args(argv)
    assert info.value.code == EXIT_USAGE


def test_list_presets(capsys):
    with pytest.raises(SystemExit) as info:
        parse_args(['--list_presets'])
    assert info.value.code == EXIT_OK
    out = capsys.readouterr().out
    assert 'table2' in out and 'table7' in out


def test_parse_xs():
    assert parse_xs('0') == (0.0,)
    assert parse_xs('-1,0.5, 2') == (-1.0, 0.5, 2.0)
    assert parse_xs('0:1:0.25') == (0.0, 0.25, 0.5, 0.75, 1.0)
    grid = parse_xs('-10:0:0.1')
    assert len(grid) == 101
    assert grid[0] == -10.0 and grid[-1] == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        parse_xs('0:1')
    with pytest.raises(ValueError):
        parse_xs('0:1:-1')
    for text in ('0:inf:1', 'nan:1:0.5', '0:1e12:1', '1,inf'):
        with pytest.raises(ValueError):
            parse_xs(text)


# ==================== RUNNING ====================

def test_error_table_csv(tmp_path):
    out = tmp_path / 'errors.csv'
    assert main(ERROR_TABLE_ARGV + ['--out', str(out)]) == EXIT_OK
    with open(out, newline='') as f:
        records = read_error_csv(f)
    assert len(records) == 18
    origin = [r for r in records if r['x'] == 0.0]
    assert {r['method'] for r in origin} == {'rdtm', 'adm', 'ldm'}
    for r in origin:
        assert r['abs_error'] == pytest.approx(1.0317037658e-5, abs=1e-9)


def test_solve_at_zero_time(capsys):
    assert main(['solve', '--problem', 'tanh', '--c', '1', '--t', '0', '--xs', '0']) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'x,method,approx,exact,abs_error'
    assert len(lines) == 4
    for line in lines[1:]:
        x, method, approx, exact, abs_error = line.split(',')
        assert float(approx) == 0.0
        assert exact == '' and abs_error == ''


def test_identical_runs_give_identical_bytes(tmp_path):
    paths = [tmp_path / 'a.csv', tmp_path / 'b.csv']
    for path in paths:
        assert main(['table', '--preset', 'table6', '--out', str(path)]) == EXIT_OK
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_concurrent_table_matches_serial(tmp_path):
    serial, threaded = tmp_path / 'serial.csv', tmp_path / 'threaded.csv'
    argv = ['table', '--c', '2', '--t', '0.05', '--xs', '-3:0:1', '--terms', '6']
    assert main(argv + ['--out', str(serial)]) == EXIT_OK
    assert main(argv + ['--max_workers', '4', '--out', str(threaded)]) == EXIT_OK
    assert serial.read_bytes() == threaded.read_bytes()


def test_figure_csv(tmp_path):
    out = tmp_path / 'figure.csv'
    assert main(['figure', '--preset', 'figure1', '--xs', '-5,-1', '--out', str(out)]) == EXIT_OK
    with open(out, newline='') as f:
        points = read_figure_csv(f)
    assert [x for x, _ in points] == [-5.0, -1.0]
    assert all(err <= 1e-8 for _, err in points)


def test_bench_rows(tmp_path):
    out, summary = tmp_path / 'bench.csv', tmp_path / 'summary.json'
    argv = ['bench', '--steps', '5,10', '--reps', '3', '--out', str(out), '--summary', str(summary)]
    assert main(argv) == EXIT_OK
    with open(out, newline='') as f:
        records = read_timing_csv(f)
    assert [(r.method, r.steps) for r in records] == [(m, s) for m in ('rdtm', 'adm', 'ldm') for s in (5, 10)]
    counts = {(r.method, r.steps): r.mul_count for r in records}
    for steps in (5, 10):
        assert counts[('rdtm', steps)] <= counts[('adm', steps)] <= counts[('ldm', steps)]
    data = json.loads(summary.read_text())
    assert data['reference_table'] == 'table5'
    assert data['records'][0]['published_seconds'] == pytest.approx(0.488)


def test_front_refusal_exits_two(capsys):
    assert main(['table', '--c', '1', '--t', '0.1', '--xs', '0,1']) == EXIT_USAGE
    assert 'front' in capsys.readouterr().err


def test_past_front_override(capsys):
    assert main(['table', '--c', '1', '--t', '0.1', '--xs', '1', '--past_front', '--methods', 'rdtm']) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[1].split(',')[3] == '0.0'


def test_figure_of_logistic_exits_two():
    assert main(['figure', '--problem', 'logistic', '--t', '0.01', '--xs', '0']) == EXIT_USAGE


def test_derivative_budget_exits_three(monkeypatch):
    def exhausted(*args, **kwargs):
        raise run_drainage.DerivativeBudgetError("derivative budget exhausted at k=3", k=3)

    monkeypatch.setattr(run_drainage, 'error_table', exhausted)
    assert main(['table', '--c', '1', '--t', '0.1', '--xs', '0']) == EXIT_NUMERICAL


@pytest.mark.parametrize('method', ['rdtm', 'adm', 'ldm'])
def test_overflowing_partial_sum_exits_three(method, capsys):
    argv = ['solve', '--c', '3', '--t', '1e40', '--xs', '-1', '--methods', method]
    assert main(argv) == EXIT_NUMERICAL
    captured = capsys.readouterr()
    assert captured.out == ''
    assert 'Numerical failure' in captured.err


def test_unwritable_output_exits_four(tmp_path):
    out = tmp_path / 'missing' / 'table.csv'
    assert main(['solve', '--c', '1', '--t', '0', '--xs', '0', '--out', str(out)]) == EXIT_OUTPUT
