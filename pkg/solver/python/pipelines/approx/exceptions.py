from ...exceptions import InvariantViolation, ValidationFailed


class TruncationInvalid(ValidationFailed):
    default_detail = "Truncated spectral data fail validation"
    default_code = "invalid_truncation"


class StabilizationFailed(InvariantViolation):
    default_detail = "Reconstruction above the largest eigenvalue differs from the measure"
    default_code = "stabilization"


class TruncatedTraceMismatch(InvariantViolation):
    default_detail = "Trace of the truncated reconstruction differs from the partial eigenvalue sum"
    default_code = "truncated_trace"
