import os.path

from decouple import config


default_config_fpath = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "solver.config.json")

serialization_digits = config("KREIN_STAR_DIGITS", cast=int, default=30)
log_level = config("KREIN_STAR_LOG_LEVEL", default="WARNING")
jobs = config("KREIN_STAR_JOBS", cast=int, default=1)
solver_config_fpath = config("KREIN_STAR_CONFIG_FPATH", default=default_config_fpath)
