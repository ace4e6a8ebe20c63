from ...exceptions import InvariantViolation


class MultiplicityMismatch(InvariantViolation):
    default_detail = "Root multiplicity of W disagrees with the shared edge count"
    default_code = "multiplicity_mismatch"


class HerglotzAssertionError(InvariantViolation):
    default_detail = "Green's function is not a Herglotz-Nevanlinna function"
    default_code = "herglotz_assertion"


class TraceMismatch(InvariantViolation):
    default_detail = "Trace integral disagrees with the eigenvalue sum"
    default_code = "trace_mismatch"


class CouplingAssertionError(InvariantViolation):
    default_detail = "Coupling matrix violates the class R conditions"
    default_code = "coupling_assertion"
