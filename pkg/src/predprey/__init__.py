"""Predator-prey dynamics with logistic prey growth.

One model, four ways to advance it: a fixed-step RK4 reference, explicit
Euler, the positivity-preserving Mickens nonstandard scheme, and a
Caputo-order predictor-corrector.  Stability classification and
theorem-backed positivity/conservation checks come along for the ride.
"""

from .model import (E1, E2, E3, EULER, FRACTIONAL, MICKENS, REFERENCE, SCHEMES,
                    Equilibrium, ModelParams, State, Trajectory, equilibria,
                    lipschitz_growth_bound, rates, vector_field)
from .special import (ML_MAX_ABS_Z, MLSeriesConfig, beta, gamma, mittag_leffler)
from .schemes import (DivergenceError, MickensAux, SchemeConfig, StepSizeWarning,
                      euler_step, iterate, mickens_phi, mickens_step,
                      reference_solve, rk4_step)
from .fractional import (ConservationBound, FractionalConfig, QuadratureWeights,
                         caputo_solve, fractional_conservation_bound,
                         quadrature_weights, scalar_caputo_solve)
from .stability import (NON_HYPERBOLIC, OUT_OF_CRITERION, SADDLE, SINK, SOURCE,
                        Quadratic, SchurCohnResult, StabilityReport,
                        characteristic_quadratic, classify, euler_step_bound,
                        jacobian_continuous, jacobian_euler, jacobian_mickens,
                        routh_hurwitz_quadratic, schur_cohn_quadratic)
from .regions import (CONTINUOUS_OMEGA, EULER_OMEGA, FRACTIONAL_OMEGA,
                      MICKENS_OMEGA, NEGATIVITY_TOL, RegionSpec,
                      ViolationReport, check_trajectory, continuous_region,
                      euler_region, fractional_region, mickens_region)
from .runner import (CSV_HEADER, DEFAULT_INITIAL, DEFAULT_PARAMS, PRESETS,
                     CompareResult, ConfigError, Scenario, compare,
                     load_scenarios, parse_config, preset_scenarios,
                     run_figures, run_scenario, run_scenarios, scheme_region,
                     solve_scenario, trajectory_from_csv, trajectory_to_csv,
                     write_gnuplot_script)

__version__ = "0.1.0"

__all__ = [
    "E1", "E2", "E3", "EULER", "FRACTIONAL", "MICKENS", "REFERENCE", "SCHEMES",
    "Equilibrium", "ModelParams", "State", "Trajectory", "equilibria",
    "lipschitz_growth_bound", "rates", "vector_field",
    "ML_MAX_ABS_Z", "MLSeriesConfig", "beta", "gamma", "mittag_leffler",
    "DivergenceError", "MickensAux", "SchemeConfig", "StepSizeWarning",
    "euler_step", "iterate", "mickens_phi", "mickens_step", "reference_solve",
    "rk4_step",
    "ConservationBound", "FractionalConfig", "QuadratureWeights",
    "caputo_solve", "fractional_conservation_bound", "quadrature_weights",
    "scalar_caputo_solve",
    "NON_HYPERBOLIC", "OUT_OF_CRITERION", "SADDLE", "SINK", "SOURCE",
    "Quadratic", "SchurCohnResult", "StabilityReport",
    "characteristic_quadratic", "classify", "euler_step_bound",
    "jacobian_continuous", "jacobian_euler", "jacobian_mickens",
    "routh_hurwitz_quadratic", "schur_cohn_quadratic",
    "CONTINUOUS_OMEGA", "EULER_OMEGA", "FRACTIONAL_OMEGA", "MICKENS_OMEGA",
    "NEGATIVITY_TOL", "RegionSpec", "ViolationReport", "check_trajectory",
    "continuous_region", "euler_region", "fractional_region", "mickens_region",
    "CSV_HEADER", "DEFAULT_INITIAL", "DEFAULT_PARAMS", "PRESETS",
    "CompareResult", "ConfigError", "Scenario", "compare", "load_scenarios",
    "parse_config", "preset_scenarios", "run_figures", "run_scenario",
    "run_scenarios", "scheme_region", "solve_scenario", "trajectory_from_csv",
    "trajectory_to_csv", "write_gnuplot_script",
]
