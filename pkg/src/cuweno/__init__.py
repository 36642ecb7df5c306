"""Central-upwind WENO schemes and benchmarks for hyperbolic conservation laws."""

from .boundary import BoundarySet, GhostPolicy, StepRegion, fill_ghosts
from .equations import Euler1D, Euler2D, LinearAdvection, NonphysicalStateError
from .flux import (BlowupError, CharBasis, SplitFluxPair, interface_flux,
                   lax_friedrichs_split, rhs_1d, rhs_2d, rhs_divergence,
                   roe_eigenbasis_1d, roe_eigenbasis_2d, sweep_interface_fluxes)
from .grid import Field, Grid1D, Grid2D
from .harness import (ErrorReport, RunResult, convergence_study, error_norms,
                      reference_solution, run_problem, snapshot_csv,
                      solution_error)
from .kernels import (SchemeConfig, SmoothnessSet, StencilWindow, make_scheme,
                      nonlinear_weights, reconstruct_interface, smoothness_set)
from .problems import REGISTRY, Problem
from .riemann import RiemannSolution, VacuumError, exact_riemann
from .stepper import TimeControls, compute_dt, rk3_step

__version__ = "0.1.0"
