# faht/config.py

import logging
import os
from pathlib import Path
from typing import Dict, Optional

import dotenv

logger = logging.getLogger("faht_config")

# Load environment variables from .env file if it exists
dotenv.load_dotenv()


class ExperimentDefaults:
    """Experiment defaults, each overridable by an environment variable.

    The values feed the argparse defaults; explicit flags still win.
    """

    # ENV_VAR -> option name
    ENV_MAPPINGS = {
        "FAHT_GRACE_PERIOD": "grace_period",
        "FAHT_DELTA": "delta",
        "FAHT_TAU": "tau",
        "FAHT_NUMERIC_BINS": "numeric_bins",
        "FAHT_FG_NOISE_Z": "fg_noise_z",
        "FAHT_SNAPSHOT_EVERY": "snapshot_every",
        "FAHT_EVAL_WINDOW": "eval_window",
        "FAHT_WINDOW": "window",
        "FAHT_CAPACITY": "capacity",
        "FAHT_OUTPUT_DIR": "output_dir",
        "FAHT_LOG_LEVEL": "log_level",
        "FAHT_WORKERS": "workers",
    }

    @staticmethod
    def get_grace_period() -> int:
        """Instances a leaf accumulates between split attempts (default: 200)."""
        return int(os.getenv("FAHT_GRACE_PERIOD", "200"))

    @staticmethod
    def get_delta() -> float:
        """Hoeffding confidence parameter (default: 1e-7)."""
        return float(os.getenv("FAHT_DELTA", "1e-7"))

    @staticmethod
    def get_tau() -> float:
        """Tie threshold (default: 0.05)."""
        return float(os.getenv("FAHT_TAU", "0.05"))

    @staticmethod
    def get_numeric_bins() -> int:
        return int(os.getenv("FAHT_NUMERIC_BINS", "10"))

    @staticmethod
    def get_fg_noise_z() -> float:
        """Standard errors of parity noise within which FG counts as zero (default: 3.0)."""
        return float(os.getenv("FAHT_FG_NOISE_Z", "3.0"))

    @staticmethod
    def get_snapshot_every() -> int:
        return int(os.getenv("FAHT_SNAPSHOT_EVERY", "1000"))

    @staticmethod
    def get_eval_window() -> int:
        """Records in the sliding evaluation window (default: 1000)."""
        return int(os.getenv("FAHT_EVAL_WINDOW", "1000"))

    @staticmethod
    def get_window() -> int:
        """Ensemble window size W (default: 1000)."""
        return int(os.getenv("FAHT_WINDOW", "1000"))

    @staticmethod
    def get_capacity() -> int:
        """Ensemble queue capacity K (default: 5)."""
        return int(os.getenv("FAHT_CAPACITY", "5"))

    @staticmethod
    def get_output_dir() -> Path:
        return Path(os.getenv("FAHT_OUTPUT_DIR", "results"))

    @staticmethod
    def get_log_level() -> str:
        return os.getenv("FAHT_LOG_LEVEL", "INFO").upper()

    @staticmethod
    def get_workers() -> int:
        """Worker processes for multi-seed runs (default: 1, i.e. in-process)."""
        return int(os.getenv("FAHT_WORKERS", "1"))

    @classmethod
    def overrides(cls) -> Dict[str, str]:
        """Options currently set through the environment."""
        found = {}
        for env_key, option in cls.ENV_MAPPINGS.items():
            value = os.environ.get(env_key, "").strip()
            if value:
                found[option] = value
        if found:
            logger.debug(f"Environment overrides: {found}")
        return found


def dataset_conf_from_env(name: str) -> Optional[Path]:
    """Path in FAHT_<NAME>_CONF, if set."""
    value = os.getenv(f"FAHT_{name.upper()}_CONF", "").strip()
    return Path(value) if value else None
