r"""
Command line interface

Usage::

    eym-exterior <command> [--config PATH] [--out DIR] [--seed SEED] [-v]

The commands are ``run``, ``check-identities``, ``hardy``,
``conservation``, ``decay-report``, ``gronwall``, ``bootstrap`` and
``energy-estimate``. Commands that evolve the system write
``manifest.json`` and ``series.csv`` to the output directory; every
command writes its report to ``reports/<command>.json``. The last line on
stdout is a JSON status record.

Exit codes are ``0`` on success, ``2`` for configuration errors, ``3`` for
numerical failures and ``4`` for failed verifications. In the three error
cases ``failure.json`` records the error type, message and, for numerical
failures, the last good time.

EXAMPLES::

    sage: import json, os, tempfile
    sage: from eym_exterior.cli import main
    sage: d = tempfile.mkdtemp()
    sage: config = os.path.join(d, 'zero.json')
    sage: with open(config, 'w') as f:
    ....:     _ = f.write('{"r_max": 16, "dr": 0.25, "t_end": 1, "N": 0, "initial": {"eps": 0}}')
    sage: main(['run', '--config', config, '--out', d])
    {"command": "run", "exit_code": 0, "out": "...", "status": "completed"}
    0
    sage: sorted(os.listdir(d))
    ['manifest.json', 'reports', 'series.csv', 'zero.json']
    sage: lines = open(os.path.join(d, 'series.csv')).read().splitlines()
    sage: lines[0], set(lines[1].split(',')[1:])
    ('t,E_0,T_tan,residual,flux,H_sum', {'0'})
    sage: json.load(open(os.path.join(d, 'manifest.json')))['status']
    'completed'

A configuration error::

    sage: with open(config, 'w') as f:
    ....:     _ = f.write('{"delta": 0.1}')
    sage: main(['run', '--config', config, '--out', d])
    {"command": "run", "exit_code": 2, "out": "...", "status": "ConfigError"}
    2
    sage: json.load(open(os.path.join(d, 'failure.json')))['message']
    'delta: delta is pinned to 0'

AUTHORS:

- eym_exterior developers (2026-10-19): initial version
"""

# *****************************************************************************
#       Copyright (C) 2026 eym_exterior developers
#
#  Distributed under the terms of the GNU General Public License (GPL)
#
#  The full text of the GPL is available at:
#
#                  http://www.gnu.org/licenses/
# *****************************************************************************

import argparse
import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from sage.misc.verbose import set_verbose, verbose
from eym_exterior.exceptions import (ConfigError, DomainExhausted, MetricDegenerate,
                                     NonFiniteState, NumericalFailure, VerificationFailure)
from eym_exterior.run_config import RunConfig, load_config

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_VERIFICATION = 4

IDENTITY_TOLERANCE = 1e-12
HARDY_DRIFT = 0.01


def _jsonable(value):
    """
    Return ``value`` with numpy and Sage numbers turned into JSON types;
    non-finite floats become ``None``.
    """
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    try:
        x = float(value)
    except (TypeError, ValueError):
        return str(value)
    return x if math.isfinite(x) else None


def _write_json_atomic(path: Path, payload: dict[str, Any]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n",
                   encoding="utf-8")
    tmp.replace(path)


def _write_report(out: Path, name: str, report: dict[str, Any], config: RunConfig) -> None:
    report = dict(report)
    report.setdefault('labels', config.solver_config().labels())
    report['config_hash'] = config.content_hash()
    _write_json_atomic(out / "reports" / ("%s.json" % name), report)


def _evolve(config: RunConfig, out: Path, seed: int):
    """
    Evolve ``config``, write the manifest and the series, and return the
    run. A failed run raises its ``NumericalFailure`` after the files are
    written.
    """
    from eym_exterior.solver import evolve
    run = evolve(config.solver_config(), seed=seed)
    manifest = run.manifest()
    manifest['run_config'] = config.as_dict()
    manifest['run_config_hash'] = config.content_hash()
    _write_json_atomic(out / "manifest.json", manifest)
    run.ledger.to_csv(str(out / "series.csv"))
    if run.status != 'completed':
        kinds = {cls.__name__: cls for cls in (DomainExhausted, MetricDegenerate, NonFiniteState)}
        failure = run.failure
        raise kinds.get(failure['type'], NumericalFailure)(failure['message'],
                                                           time=failure['time'])
    return run


def _window(config: RunConfig, run):
    section = config['conservation']
    t = run.ledger.times()
    t1 = float(t[0]) if section['t1'] is None else section['t1']
    t2 = float(t[-1]) if section['t2'] is None else section['t2']
    return t1, t2


def cmd_run(config, out, seed):
    from eym_exterior.diagnostics import tangential_integral
    run = _evolve(config, out, seed)
    ledger = run.ledger
    t = ledger.times()
    report = {'t_end': float(t[-1]), 'samples': len(ledger),
              'E_N_initial': float(ledger.energies()[0]),
              'E_N_final': float(ledger.energies()[-1]),
              'E_N_max': float(np.max(ledger.energies())),
              'initial_norm': ledger.initial_norm,
              'smallness_ok': ledger.smallness_ok(),
              'T_tan': tangential_integral(run, t[0], t[-1]) if len(t) > 1 else 0.0,
              'labels': run.labels()}
    return 'completed', report


def cmd_check_identities(config, out, seed):
    from eym_exterior.stress import identity_suite
    from eym_exterior.vector_fields import commutator_table_check
    from eym_exterior.weights import check_weight_equivalences
    section = config['identities']
    stress = identity_suite(section['n_values'], section['samples'], seed=seed)
    algebra = commutator_table_check(n=config['n'], degree=4)
    rng = np.random.Generator(np.random.Philox(key=seed))
    q = np.concatenate([[0.0], rng.uniform(-50, 50, 999)])
    weights = check_weight_equivalences(config.weights(), q)
    report = {'stress': stress, 'vector_fields': algebra, 'weights': weights,
              'tolerance': IDENTITY_TOLERANCE, 'seed': seed}
    if not stress['max_residual'] < IDENTITY_TOLERANCE:
        _write_report(out, 'check-identities', report, config)
        raise VerificationFailure("stress identity residual %r exceeds %r"
                                  % (stress['max_residual'], IDENTITY_TOLERANCE),
                                  sample=stress['max_residual'])
    if not algebra['ok']:
        _write_report(out, 'check-identities', report, config)
        raise VerificationFailure("commutator table has %s failures" % len(algebra['failures']),
                                  sample=algebra['failures'][0])
    return 'verified', report


def cmd_hardy(config, out, seed):
    from eym_exterior.diagnostics import hardy_sweep
    section = config['hardy']
    report = hardy_sweep(n=section['n'], ks=section['ks'], a_values=section['a'],
                         params=config.weights(), r_max=section['r_max'], dr=section['dr'])
    finite = all(math.isfinite(rec['ratio']) for rec in report['records'])
    report['refinement_stable'] = report['max_drift'] <= HARDY_DRIFT
    if not (finite and report['refinement_stable']):
        _write_report(out, 'hardy', report, config)
        raise VerificationFailure("Hardy ratios drift by %r under refinement"
                                  % report['max_drift'], sample=report['max_drift'])
    return 'verified', report


def cmd_conservation(config, out, seed):
    from eym_exterior.diagnostics import conservation_residual
    run = _evolve(config, out, seed)
    t1, t2 = _window(config, run)
    report = {'t1': t1, 't2': t2, 'dr': config['dr'],
              'weighted': conservation_residual(run, t1, t2, weighted=True),
              'unweighted': conservation_residual(run, t1, t2, weighted=False),
              'labels': run.labels()}
    return 'completed', report


def cmd_decay_report(config, out, seed):
    from eym_exterior.diagnostics import apriori_check, decay_fit, ks_check
    run = _evolve(config, out, seed)
    section = config['decay']
    report = decay_fit(run, section['observable'], window=tuple(section['window']))
    t_end = float(run.ledger.times()[-1])
    report['apriori'] = apriori_check(run, t_end)
    report['klainerman_sobolev_ratio'] = ks_check(run, t_end)
    report['labels'] = run.labels()
    return 'completed', report


def cmd_gronwall(config, out, seed):
    from eym_exterior.diagnostics import gronwall_monitor
    run = _evolve(config, out, seed)
    section = config['gronwall']
    report = gronwall_monitor(run, windows=section['windows'], C_budget=section['C_budget'])
    return report['verdict'], report


def cmd_bootstrap(config, out, seed):
    from eym_exterior.diagnostics import bootstrap_report, gronwall_monitor, tangential_integral
    run = _evolve(config, out, seed)
    ledger = run.ledger
    section = config['bootstrap']
    E0 = float(ledger.energies()[0])
    target = section['E_target']
    if target is None:
        target = section['target_factor'] * E0
    report = bootstrap_report(run, target)
    t = ledger.times()
    T_tan = tangential_integral(run, t[0], t[-1])
    report['smallness_ok'] = ledger.smallness_ok()
    report['T_tan'] = T_tan
    report['T_tan_constant'] = T_tan / E0 ** 2 if E0 > 0 else 0.0
    report['gronwall'] = gronwall_monitor(run, windows=config['gronwall']['windows'],
                                          C_budget=config['gronwall']['C_budget'])
    return report['verdict'], report


def cmd_energy_estimate(config, out, seed):
    from eym_exterior.diagnostics import energy_estimate_check
    run = _evolve(config, out, seed)
    t1, t2 = _window(config, run)
    lhs, rhs, ratio = energy_estimate_check(run, t1, t2)
    report = {'t1': t1, 't2': t2, 'lhs': lhs, 'rhs': rhs, 'ratio': ratio,
              'labels': run.labels()}
    return 'completed', report


COMMANDS = {
    'run': (cmd_run, "evolve the system and write the energy series"),
    'check-identities': (cmd_check_identities,
                         "verify the stress, commutator and weight identities"),
    'hardy': (cmd_hardy, "sweep the Hardy inequality over a decay family"),
    'conservation': (cmd_conservation, "residual of the weighted balance law"),
    'decay-report': (cmd_decay_report, "fit decay exponents on the cone band"),
    'gronwall': (cmd_gronwall, "fit the Grönwall constant of the energy"),
    'bootstrap': (cmd_bootstrap, "verdict of the energy bootstrap"),
    'energy-estimate': (cmd_energy_estimate, "both sides of the weighted energy estimate"),
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="eym-exterior",
        description="Weighted exterior energy estimates for Einstein-Yang-Mills in wave gauge.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", type=str, default="",
                       help="JSON run configuration (default: built-in defaults).")
        p.add_argument("--out", type=str, default="",
                       help="Output directory (default: the 'out' key of the configuration).")
        p.add_argument("--seed", type=int, default=None,
                       help="Seed (default: the 'seed' key of the configuration).")
        p.add_argument("-v", "--verbose", action="count", default=0)
    return ap


def run_all(config, command='run', out=None, seed=None):
    r"""
    Execute ``command`` on ``config`` and return the exit code.

    INPUT:

    - ``config`` -- a :class:`~eym_exterior.run_config.RunConfig`, the path
      of a JSON configuration, or ``None`` for the defaults
    - ``command`` -- (default: ``'run'``) one of the keys of
      :data:`COMMANDS`
    - ``out`` -- (default: the ``'out'`` key of the configuration) the
      output directory
    - ``seed`` -- (default: the ``'seed'`` key of the configuration)

    The JSON status line is printed to stdout.

    EXAMPLES::

        sage: import json, os, tempfile
        sage: from eym_exterior.cli import run_all
        sage: from eym_exterior.run_config import RunConfig
        sage: d = tempfile.mkdtemp()
        sage: run_all(RunConfig({'identities': {'n_values': [2, 4], 'samples': 200}}),
        ....:         'check-identities', out=d, seed=5)
        {"command": "check-identities", "exit_code": 0, "out": "...", "status": "verified"}
        0
        sage: R = json.load(open(os.path.join(d, 'reports', 'check-identities.json')))
        sage: R['stress']['max_residual'] < 1e-12, R['vector_fields']['ok'], R['seed']
        (True, True, 5)
        sage: R['labels']
        ['truncated reduced system', 'Z-subfamily energy', 'flat-D̄ initial norm']
        sage: run_all(RunConfig({'hardy': {'ks': [3.0], 'a': [0.0], 'r_max': 512.0}}), 'hardy', out=d)
        {"command": "hardy", "exit_code": 0, "out": "...", "status": "verified"}
        0

    A failed evolution::

        sage: bad = RunConfig({'mode': 'coupled', 'background': 'evolved', 'r_max': 16.0,
        ....:                  'dr': 0.25, 't_end': 2.0, 'N': 0,
        ....:                  'initial': {'eps': 1.0, 'components': ['h_tt']}})
        sage: run_all(bad, 'gronwall', out=d)
        {"command": "gronwall", "exit_code": 3, "out": "...", "status": "MetricDegenerate"}
        3
        sage: F = json.load(open(os.path.join(d, 'failure.json')))
        sage: F['type'], F['time'] <= 2
        ('MetricDegenerate', True)
    """
    status = 'error'
    code = EXIT_OK
    failure = None
    out = Path(out) if out is not None and str(out).strip() else None
    try:
        if command not in COMMANDS:
            raise ConfigError("unknown command %r" % (command,))
        if config is None or not str(config).strip():
            config = RunConfig()
        elif not isinstance(config, RunConfig):
            config = load_config(config)
        if out is None:
            out = Path(config['out'])
        seed = config['seed'] if seed is None else int(seed)
        verbose("%s: %s -> %s" % (command, config, out), level=1)
        status, report = COMMANDS[command][0](config, out, seed)
        report['seed'] = seed
        _write_report(out, command, report, config)
    except ConfigError as err:
        code, status = EXIT_CONFIG, 'ConfigError'
        failure = {'type': 'ConfigError', 'message': str(err), 'path': err.path}
    except NumericalFailure as err:
        code, status = EXIT_NUMERICAL, type(err).__name__
        failure = {'type': type(err).__name__, 'message': str(err), 'time': err.time}
    except VerificationFailure as err:
        code, status = EXIT_VERIFICATION, 'VerificationFailure'
        failure = {'type': 'VerificationFailure', 'message': str(err),
                   'sample': _jsonable(err.sample)}
    except ValueError as err:
        code, status = EXIT_CONFIG, 'ValueError'
        failure = {'type': 'ValueError', 'message': str(err)}
    if out is None:
        out = Path(RunConfig.defaults['out'])
    if failure is not None:
        failure['command'] = command
        _write_json_atomic(out / "failure.json", failure)
        verbose("%s failed: %s" % (command, failure['message']), level=1)
    print(json.dumps({'command': command, 'exit_code': code, 'out': str(out),
                      'status': status}, sort_keys=True))
    return code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    set_verbose(int(args.verbose))
    return run_all(args.config, args.command, args.out, args.seed)
