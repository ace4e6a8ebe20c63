import os.path
from dataclasses import dataclass
from fractions import Fraction

from .. import config, env
from ..exceptions import DomainError


@dataclass(frozen=True)
class RunConfig:
    """
    Resolved settings of one CLI run. Flags win over environment variables, which win over the config file.
    """

    command: str
    inputs: tuple[str, ...] = ()
    out: str | None = None
    report: str | None = None
    digits: int = env.serialization_digits
    match_tol: Fraction | None = None
    oracle_tol: float = config.oracle_rel_tol
    jobs: int = env.jobs

    def __post_init__(self) -> None:
        if self.digits < 1:
            raise DomainError(f"Digits must be at least 1, got {self.digits}", code="invalid_digits")
        if self.jobs < 1:
            raise DomainError(f"Jobs must be at least 1, got {self.jobs}", code="invalid_jobs")
        if self.match_tol is not None and self.match_tol < 0:
            raise DomainError(f"Match tolerance must be non-negative, got {self.match_tol}", code="invalid_match_tol")
        for fpath in self.inputs:
            if not os.path.isfile(fpath):
                raise DomainError(f"File {fpath} not found", code="file_not_found")
        for fpath in (self.out, self.report):
            if fpath is not None and not os.path.isdir(os.path.dirname(os.path.abspath(fpath))):
                raise DomainError(f"Directory of {fpath} does not exist", code="unwritable_path")

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        def pick(name, default):
            value = getattr(args, name, None)
            return default if value is None else value

        match_tol = getattr(args, "match_tol", None)
        if match_tol is not None:
            try:
                match_tol = Fraction(match_tol)
            except ValueError as err:
                raise DomainError(f"Invalid match tolerance {match_tol!r}", code="invalid_match_tol") from err
        inputs = tuple(p for p in (getattr(args, "measure", None), getattr(args, "spectral", None)) if p)
        return cls(
            command=args.command,
            inputs=inputs,
            out=getattr(args, "out", None),
            report=getattr(args, "report", None),
            digits=pick("digits", env.serialization_digits),
            match_tol=match_tol,
            oracle_tol=pick("tol", config.oracle_rel_tol),
            jobs=pick("jobs", env.jobs),
        )
