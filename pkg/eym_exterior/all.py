from eym_exterior.weights import WeightParams, eval_weights, check_weight_equivalences
from eym_exterior.gauge_algebra import GaugeAlgebra
from eym_exterior.abstract_gauge_algebra import AbstractGaugeAlgebra
from eym_exterior.geometry import build_metric, smallness_check
from eym_exterior.stress import identity_suite
from eym_exterior.radial_grid import RadialGrid
from eym_exterior.vector_fields import VectorFieldId, commutator_table_check
from eym_exterior.lie_hierarchy import lie_hierarchy
from eym_exterior.sources import SourceConfig
from eym_exterior.initial_data import InitialDataSpec
from eym_exterior.solver import SolverConfig, evolve
from eym_exterior.diagnostics import (energy_ext, conservation_residual, hardy_check,
                                      decay_fit, gronwall_monitor, bootstrap_report)
from eym_exterior.run_config import RunConfig, load_config
from eym_exterior.cli import run_all

from sage.misc.lazy_import import lazy_import
lazy_import('eym_exterior', 'catalog', 'eym_runs')
