import json
import os.path
from fractions import Fraction

from .env import log_level, solver_config_fpath


# If the solver config file path is set but does not exist, stop the program
if os.path.exists(solver_config_fpath) is False:
    raise Exception("solver config file not found in specified path.")

# Read configuration from object
with open(solver_config_fpath) as f:
    config_contents = json.load(f)

# Expose objects
document_format = config_contents["format"]
root_rel_tol = Fraction(config_contents["root_rel_tol"])
root_rel_tol_per_degree = Fraction(config_contents["root_rel_tol_per_degree"])
oracle_rel_tol = float(config_contents["oracle_rel_tol"])
oracle_cluster_gap = float(config_contents["oracle_cluster_gap"])
roundtrip_rel_tol = Fraction(config_contents["roundtrip_rel_tol"])
identity_rel_tol = Fraction(config_contents["identity_rel_tol"])
probe_hat_centres = [Fraction(c) for c in config_contents["probe_hat_centres"]]
probe_hat_half_width = Fraction(config_contents["probe_hat_half_width"])
random_measure = config_contents["random_measure"]

# We can delete config_contents from memory
del config_contents

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {"console": {"level": "DEBUG", "class": "logging.StreamHandler", "formatter": "standard"}},
    "formatters": {
        "standard": {
            "format": "{levelname} - {asctime} - {module} - {message}",
            "style": "{",
        },
    },
    "loggers": {
        "root": {"handlers": ["console"], "level": log_level, "propagate": False},
    },
}
