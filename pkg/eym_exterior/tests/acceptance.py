r"""
Acceptance runs

The properties below exercise the whole pipeline on the standard runs of
:mod:`eym_exterior.standard_runs`. The longer ones are tagged
``# long time``.

Algebraic identities: the stress identities over `10^4` seeded jets for
every `n \in \{2, \dots, 6\}`, the commutator table on all monomials of
degree at most `4`, and the weight relations on `10^3` points for twenty
pairs `(\gamma, \mu)`::

    sage: import numpy as np
    sage: from eym_exterior.stress import identity_suite
    sage: from eym_exterior.vector_fields import commutator_table_check
    sage: from eym_exterior.weights import WeightParams, check_weight_equivalences, eval_weights
    sage: identity_suite(samples=10000, seed=0)['max_residual'] < 1e-12  # long time
    True
    sage: commutator_table_check(n=4, degree=4)['failures']
    []
    sage: rng = np.random.Generator(np.random.Philox(key=7))
    sage: qs = rng.uniform(-100, 100, 1000)
    sage: ok = []
    sage: for gamma in (0.1, 0.25, 0.5, 1.0, 2.0):
    ....:     for mu in (-0.05, -0.25, -0.5, -1.5):
    ....:         P = WeightParams(gamma=gamma, mu=mu)
    ....:         R = check_weight_equivalences(P, qs)
    ....:         exact = all(abs(eval_weights(q, P).w_tilde - eval_weights(q, P).w_hat
    ....:                         - eval_weights(q, P).w) == 0 for q in qs[:50])
    ....:         ok.append(exact and R['samples'] == 1000)
    sage: len(ok), all(ok)
    (20, True)

Balance law: a flat linear radial wave in `n = 4`; halving the step
divides the normalized residual by about `4`::

    sage: from eym_exterior.solver import evolve
    sage: from eym_exterior.diagnostics import conservation_residual
    sage: from eym_exterior import standard_runs
    sage: coarse, fine = standard_runs.conservation_pair()
    sage: res = [conservation_residual(evolve(c.solver_config()), 0, 4)  # long time
    ....:        for c in (coarse, fine)]
    sage: 3 <= res[0] / res[1] <= 5, res[1] < 1e-4  # long time
    (True, True)

Decay: the gradient of a compact bump in `n = 4` decays like
`(1+t)^{-3/2}` on the band `0 \leq q \leq 4`::

    sage: from eym_exterior.diagnostics import decay_fit
    sage: run = evolve(standard_runs.decay_run().solver_config())  # long time
    sage: fit = decay_fit(run, 'dA', window=(4, 64))  # long time
    sage: abs(fit['p_t'] - 1.5) <= 0.15, fit['regime']  # long time
    (True, 'pre-asymptotic')

Hardy inequality: the ratios over the family `(1+r)^{-k}` are finite,
stable under refinement and bounded by a single constant::

    sage: from eym_exterior.diagnostics import hardy_sweep
    sage: S = hardy_sweep(n=4, ks=(2.5, 3.0, 4.0), a_values=(0.0, 1.0, 3.0),  # long time
    ....:                 params=WeightParams(gamma=0.5))
    sage: S['max_drift'] <= 0.01, 0 < S['max_ratio'] < 1  # long time
    (True, True)

Bootstrap: the coupled `su(2)` run with small data keeps
`\mathcal{E}_N \leq 2 \mathcal{E}_N(0)`, stays in the smallness regime and
its Grönwall constant closes; the contrast run with `\varepsilon = 1`
either aborts or does not close::

    sage: from eym_exterior.diagnostics import (bootstrap_report, gronwall_monitor,
    ....:                                       tangential_integral)
    sage: small, large = standard_runs.bootstrap_pair()
    sage: run = evolve(small.solver_config())  # long time
    sage: E = run.ledger.energies()  # long time
    sage: run.status, bool(np.all(E <= 2 * E[0])), run.ledger.smallness_ok()  # long time
    ('completed', True, True)
    sage: gronwall_monitor(run)['verdict'], bootstrap_report(run, 4 * E[0])['verdict']  # long time
    ('closes', 'closed')
    sage: contrast = evolve(large.solver_config())  # long time
    sage: (contrast.status == 'failed'  # long time
    ....:  or gronwall_monitor(contrast)['verdict'] == 'does not close'
    ....:  or bootstrap_report(contrast, 4 * contrast.ledger.energies()[0])['verdict']
    ....:     == 'not closed')
    True

Tangential integral: `T_{tan} \leq K \mathcal{E}_N(0)^2` with `K` stable
under halving the step, on a shortened horizon::

    sage: K = []
    sage: for dr in (0.25, 0.125):  # long time
    ....:     r = evolve(small.replace(t_end=16.0, dr=dr).solver_config())
    ....:     E0 = r.ledger.energies()[0]
    ....:     K.append(tangential_integral(r, 0, 16) / E0 ** 2)
    sage: 0 < K[0] and max(K) <= 2 * min(K)  # long time
    True

Determinism: the same configuration and seed give identical series::

    sage: import json, os, tempfile
    sage: from eym_exterior.cli import main
    sage: config = small.replace(t_end=4.0)
    sage: series = []
    sage: for _ in range(2):  # long time
    ....:     d = tempfile.mkdtemp()
    ....:     path = os.path.join(d, 'run.json')
    ....:     with open(path, 'w') as f:
    ....:         _ = f.write(json.dumps(config.as_dict()))
    ....:     code = main(['run', '--config', path, '--out', d, '--seed', '11'])
    ....:     series.append(open(os.path.join(d, 'series.csv'), 'rb').read())
    {"command": "run", "exit_code": 0, "out": "...", "status": "completed"}
    {"command": "run", "exit_code": 0, "out": "...", "status": "completed"}
    sage: series[0] == series[1]  # long time
    True
"""
