"""
Configuration Loader for the Gorenstein Algebra Verifier
Reads config.yaml, merges it over the built-in defaults and validates run settings
"""

import copy
import logging
import re
from dataclasses import dataclass, field as dataclass_field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import yaml

from errors import ConfigError, FieldError
from poly import Field

logger = logging.getLogger(__name__)

MIN_N = 2
MAX_N = 64

DEFAULTS: Dict[str, Any] = {
    'field': 'q',
    'verify': {
        'n_range': '2..6',
    },
    'derivations': {
        'oracle_max_dimension': 80,
    },
    'proof_steps': {
        'max_n': 3,
        'budget_seconds': 300,
    },
    'hypersurface': {
        'n': 2,
        'functional': 'z_06',
    },
    'random': {
        'seed': 20240229,
        'numerator_bound': 9,
        'denominators': [1, 2, 3],
    },
    'output': {
        'format': 'text',
        'reports_dir': 'outputs/reports',
    },
    'logging': {
        'level': 'WARNING',
        'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    },
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load a YAML config file over the defaults

    Args:
        path: Path to config.yaml; None gives the defaults

    Returns:
        Merged configuration dict
    """
    if path is None:
        return copy.deepcopy(DEFAULTS)
    config_path = Path(path)
    if not config_path.exists():
        raise ConfigError(f"Config file not found: {path}")
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"Top level of {path} must be a mapping")
    logger.info(f"Loaded configuration from {path}")
    return _merge(DEFAULTS, data)


def parse_n_range(text) -> Tuple[int, ...]:
    """
    Parse '3' or '2..6' into the list of n values

    Returns:
        Ascending tuple of n
    """
    if isinstance(text, int) and not isinstance(text, bool):
        return (text,)
    match = re.fullmatch(r'\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?', str(text))
    if not match:
        raise ConfigError(f"Bad n or n-range '{text}' (use N or A..B)")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) else low
    if low > high:
        raise ConfigError(f"Empty n-range '{text}'")
    return tuple(range(low, high + 1))


@dataclass
class RunConfig:
    """Validated settings for one CLI invocation"""
    command: str = 'verify'
    n_values: Tuple[int, ...] = (2, 3, 4, 5, 6)
    field_selector: str = 'q'
    output_format: str = 'text'
    seed: int = 20240229
    steps: bool = False
    budget_seconds: float = 300.0
    verbose: bool = False
    oracle_max_dimension: int = 80
    proof_steps_max_n: int = 3
    functional: str = 'z_06'
    save_report: bool = False
    reports_dir: str = 'outputs/reports'
    ideal_file: Optional[str] = None
    numerator_bound: int = 9
    denominators: List[int] = dataclass_field(default_factory=lambda: [1, 2, 3])

    def __post_init__(self):
        self.validate()

    def validate(self):
        if not self.n_values:
            raise ConfigError("No n values selected")
        for n in self.n_values:
            if not MIN_N <= n <= MAX_N:
                raise ConfigError(f"n={n} outside [{MIN_N}, {MAX_N}]")
        try:
            self.field = Field.from_selector(self.field_selector)
        except FieldError as e:
            raise ConfigError(str(e))
        if self.output_format not in ('text', 'json'):
            raise ConfigError(f"Unknown output format '{self.output_format}' (use text or json)")
        if not self.budget_seconds > 0:
            raise ConfigError(f"Budget must be positive, got {self.budget_seconds}")
        if self.seed < 0:
            raise ConfigError(f"Seed must be non-negative, got {self.seed}")
        if self.oracle_max_dimension < 0:
            raise ConfigError("derivations.oracle_max_dimension must be non-negative")
        if self.numerator_bound < 1 or not self.denominators or any(d < 1 for d in self.denominators):
            raise ConfigError("random.numerator_bound and random.denominators must be positive")


def build_run_config(command: str, settings: Dict[str, Any], **overrides) -> RunConfig:
    """
    Combine file settings with command-line overrides

    Args:
        command: Subcommand name
        settings: Merged dict from load_config
        overrides: Non-None command-line values keyed by RunConfig field

    Returns:
        Validated RunConfig
    """
    try:
        n_text = settings['hypersurface']['n'] if command == 'hypersurface' else settings['verify']['n_range']
        values = {
            'command': command,
            'n_values': parse_n_range(n_text),
            'field_selector': str(settings['field']),
            'output_format': settings['output']['format'],
            'seed': int(settings['random']['seed']),
            'budget_seconds': float(settings['proof_steps']['budget_seconds']),
            'oracle_max_dimension': int(settings['derivations']['oracle_max_dimension']),
            'proof_steps_max_n': int(settings['proof_steps']['max_n']),
            'functional': str(settings['hypersurface']['functional']),
            'reports_dir': str(settings['output']['reports_dir']),
            'numerator_bound': int(settings['random']['numerator_bound']),
            'denominators': [int(d) for d in settings['random']['denominators']],
        }
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"Malformed configuration value: {e}")
    for key, value in overrides.items():
        if value is None:
            continue
        if key == 'n_values':
            value = parse_n_range(value)
        values[key] = value
    return RunConfig(**values)


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    settings = load_config('config.yaml' if Path('config.yaml').exists() else None)
    print(build_run_config('verify', settings))
