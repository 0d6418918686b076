from .config import (ScenarioConfig, ALGORITHMS, POWER_MODES, parse_config, load_config,
                     dump_config, save_config)
from .runner import (drop_seed, build_drop, check_allocations, simulate_drop, run_scenario,
                     emit_results)
from .verify import (CheckResult, VerifyReport, check_toy_example, check_approximation_bound,
                     check_power_round_trip, check_feasibility, check_dpra_convergence,
                     run_verification)

__all__ = ['ScenarioConfig', 'ALGORITHMS', 'POWER_MODES', 'parse_config', 'load_config',
           'dump_config', 'save_config', 'drop_seed', 'build_drop', 'check_allocations',
           'simulate_drop', 'run_scenario', 'emit_results', 'CheckResult', 'VerifyReport',
           'check_toy_example', 'check_approximation_bound', 'check_power_round_trip',
           'check_feasibility', 'check_dpra_convergence', 'run_verification']
