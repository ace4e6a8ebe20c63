import logging
from fractions import Fraction

from ...exceptions import DomainError
from ...models.spectral import SpectralData
from ..inverse.validate import validate_spectral_data
from .exceptions import TruncationInvalid


logger = logging.getLogger(__name__)


def truncate(data: SpectralData, cutoff: Fraction) -> SpectralData:
    """
    Keeps the eigenvalues in the open interval (0, cutoff) and the coupling matrices of the kept shared
    eigenvalues. An eigenvalue equal to the cutoff is dropped.
    """
    cutoff = Fraction(cutoff)
    if not cutoff > 0:
        raise DomainError(f"Cutoff must be positive, got {cutoff}", code="invalid_cutoff")
    truncated = SpectralData(
        graph=data.graph,
        sigma=tuple(lam for lam in data.sigma if lam < cutoff),
        sigma_e={eid: tuple(mu for mu in values if mu < cutoff) for eid, values in data.sigma_e.items()},
        coupling={lam: matrix for lam, matrix in data.coupling.items() if lam < cutoff},
        exact=data.exact,
    )
    violations = validate_spectral_data(truncated)
    if violations:
        raise TruncationInvalid(violations)
    logger.debug("Cutoff %s keeps %d of %d eigenvalues", cutoff, len(truncated.sigma), len(data.sigma))
    return truncated
