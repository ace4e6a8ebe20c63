from ...exceptions import InvariantViolation


class OracleMismatch(InvariantViolation):
    default_detail = "Matrix eigenvalues disagree with the polynomial spectra"
    default_code = "oracle_mismatch"
