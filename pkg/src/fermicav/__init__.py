import logging
import os

from .bogoliubov import (LEFT, RIGHT, INERTIAL, PerturbativeMatrix, Segment,
                         TravelScenario, VMatrix, flip_direction, graft,
                         inertial_phase_matrix, scenario_fk,
                         segment_matrix_accel, unitarity_residuals,
                         vacuum_v_matrix)
from .config import config, set_config
from .errors import ConfigError, FermicavError, QuadratureError, ToleranceError
from .geometry import (CavityGeometry, ModeSpec, cancelling_coast_duration,
                       degradation_period, mode_components_at_t0)
from .measures import (DegradationInputs, EntanglementReport,
                       chsh_max_two_mode, fk_closed,
                       fk_series, interference_term, negativity_charge,
                       negativity_two_mode, oneway_fk)
from .oracle import density_matrix_oracle
from .polylog import UnitPhase, q_function, re_polylog
from .quadrature import exact_coefficient
from .scenario import ScenarioConfig, load_scenario_config
from .sweep import SweepResult, evaluate_report

log_level = os.environ.get('LOG_LEVEL')
if log_level:
    logging.basicConfig(level=getattr(logging, log_level.upper(), None))

__all__ = ["LEFT", "RIGHT", "INERTIAL", "PerturbativeMatrix", "Segment",
           "TravelScenario", "VMatrix", "flip_direction", "graft",
           "inertial_phase_matrix", "scenario_fk", "segment_matrix_accel",
           "unitarity_residuals", "vacuum_v_matrix", "config", "set_config",
           "ConfigError", "FermicavError", "QuadratureError",
           "ToleranceError", "CavityGeometry", "ModeSpec",
           "cancelling_coast_duration", "degradation_period",
           "mode_components_at_t0", "DegradationInputs", "EntanglementReport",
           "chsh_max_two_mode",
           "fk_closed", "fk_series", "interference_term", "negativity_charge",
           "negativity_two_mode", "oneway_fk", "density_matrix_oracle",
           "UnitPhase", "q_function", "re_polylog", "exact_coefficient",
           "ScenarioConfig", "load_scenario_config", "SweepResult",
           "evaluate_report"]
