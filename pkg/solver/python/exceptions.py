from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Violation:
    """
    One failed hypothesis of a measure or of a spectral data set.

    `code` is a stable machine-readable reason code, `hypothesis` names the violated
    assumption and `detail` holds a human-readable explanation.
    """

    code: str
    hypothesis: str
    detail: str

    def as_dict(self) -> dict[str, str]:
        return {"code": self.code, "hypothesis": self.hypothesis, "detail": self.detail}


class KreinStarError(Exception):
    default_detail: str = "Unexpected solver error"
    default_code: str = "error"
    exit_code: int = 2

    def __init__(
        self,
        detail: dict[str, Any] | str | None = None,
        code: str | None = None,
    ) -> None:
        """
        Builds a detail dictionary for the error to give more information to CLI users.
        """
        detail_dict = {"detail": self.default_detail, "code": self.default_code}

        if isinstance(detail, dict):
            detail_dict.update(detail)
        elif detail is not None:
            detail_dict["detail"] = detail

        if code is not None:
            detail_dict["code"] = code

        self.detail = detail_dict
        super().__init__(detail_dict["detail"])

    @property
    def code(self) -> str:
        return self.detail["code"]


class SchemaError(KreinStarError):
    default_detail = "Input document does not conform to the schema"
    default_code = "schema_violation"
    exit_code = 1

    def __init__(self, detail: str, path: str = "$", code: str | None = None) -> None:
        super().__init__({"detail": detail, "path": path}, code=code)
        self.path = path


class DomainError(KreinStarError):
    default_detail = "Argument outside of the admissible domain"
    default_code = "domain_error"
    exit_code = 1


class ValidationFailed(KreinStarError):
    default_detail = "Input data violates the hypotheses of the solver"
    default_code = "invalid_spectral_data"
    exit_code = 1

    def __init__(self, violations: list[Violation], code: str | None = None) -> None:
        detail = "; ".join(f"{v.code}: {v.detail}" for v in violations) or self.default_detail
        super().__init__({"detail": detail, "violations": [v.as_dict() for v in violations]}, code=code)
        self.violations = violations


class InvariantViolation(KreinStarError):
    default_detail = "Internal invariant violated"
    default_code = "invariant_violation"
    exit_code = 2


class RoundTripMismatch(InvariantViolation):
    default_detail = "Reconstructed measure differs from the original beyond tolerance"
    default_code = "roundtrip_mismatch"
