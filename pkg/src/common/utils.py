"""
Utility functions.
This module provides configuration parsing (main.cfg and the YAML files it points to),
the CLI defaults and the worker-count resolution shared by the scripts.
"""
import os
import re
import sys
import yaml

from common.errors import UsageError

BUILTIN_DEFAULTS = {"jobs": 1, "method": "enumeration", "format": "json"}
LIST_KEYS = ['suites']
_VARIABLE = re.compile(r"\$\{([^}]+)\}")


def parse_main_config(path: str = './main.cfg') -> dict:
    """
    Parses the main.cfg file and returns a dictionary with the key-value pairs

    Returns:
        :return main_config_dict:
            A dictionary with the key-value pairs from the main.cfg file; ${key}
            references to previously defined keys are expanded
    """
    with open(path, encoding='utf-8') as main_config:
        main_config_dict = {}
        for line in main_config:
            # Skip comments and empty lines
            if line.startswith('#') or not line.strip():
                continue

            config_key, value = line.split('=', 1)
            config_key = config_key.strip()
            value = _VARIABLE.sub(lambda match: str(main_config_dict.get(match.group(1), '')),
                                  value.strip())

            if config_key in LIST_KEYS:
                main_config_dict[config_key] = [item.strip() for item in value.split(',')
                                                if item.strip()]
            else:
                main_config_dict[config_key] = value
        return main_config_dict


def load_yaml(path: str) -> dict:
    """Load a YAML file; an empty file gives an empty dictionary."""
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def load_defaults(fw_config: dict = None, warn: bool = True) -> dict:
    """
    CLI defaults from the defaults_config file named in main.cfg.

    Args:
        :param fw_config: parsed main.cfg, read from the working directory when omitted
        :param warn: print a warning when falling back to the built-in values
        :return: defaults dictionary, the built-in values filling anything missing
    """
    defaults = dict(BUILTIN_DEFAULTS)
    try:
        fw_config = parse_main_config() if fw_config is None else fw_config
        defaults.update(load_yaml(fw_config["defaults_config"]).get("defaults", {}))
    except (FileNotFoundError, KeyError) as e:
        if warn:
            print(f"Warning: defaults configuration not available ({e}), using built-in defaults.",
                  file=sys.stderr)
    return defaults


def resolve_jobs(cli_value, defaults: dict = None) -> int:
    """
    Worker count: --jobs, then the GAC_JOBS environment variable, then the
    defaults file, then 1.
    """
    for source, value in (("--jobs", cli_value),
                          ("GAC_JOBS", os.environ.get("GAC_JOBS")),
                          ("defaults", (defaults or {}).get("jobs"))):
        if value is None or value == "":
            continue
        try:
            jobs = int(value)
        except (TypeError, ValueError) as e:
            raise UsageError(f"{source} must be an integer, got {value!r}") from e
        if jobs < 1:
            raise UsageError(f"{source} must be at least 1, got {jobs}")
        return jobs
    return 1


def status_path(status_dir: str, suite: str, m) -> str:
    """Status file of one verification command."""
    tag = f"{suite}_m{m}" if m is not None else suite
    return os.path.join(status_dir, f"{tag}_status.out")
