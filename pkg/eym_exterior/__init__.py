from .weights import WeightParams
from .gauge_algebra import GaugeAlgebra
from .solver import SolverConfig, evolve
from .run_config import RunConfig, load_config
