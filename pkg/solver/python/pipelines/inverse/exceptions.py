from ...exceptions import InvariantViolation, KreinStarError


class ContinuedFractionError(KreinStarError):
    default_detail = "Weyl function does not expand into a Stieltjes continued fraction"
    default_code = "continued_fraction"
    exit_code = 1


class ReconstructionMismatch(InvariantViolation):
    default_detail = "Reconstructed Weyl functions do not reproduce the spectral data"
    default_code = "reconstruction_mismatch"
