"""Exception hierarchy shared by every multishare module."""


class SharingError(Exception):
    """Base class for all multishare errors."""


class NotPrime(SharingError, ValueError):
    pass


class ModulusMismatch(SharingError, ValueError):
    pass


class ZeroInverse(SharingError, ZeroDivisionError):
    pass


class EmptyInput(SharingError, ValueError):
    pass


class DuplicateX(SharingError, ValueError):
    pass


class KTooLargeForField(SharingError, ValueError):
    pass


class InvalidParams(SharingError, ValueError):
    pass


class QuorumTooSmall(InvalidParams):
    """Fewer shares were supplied than the threshold requires."""


class MixedShares(SharingError, ValueError):
    """Shares disagree on scheme, modulus or threshold."""


class DegenerateSecretSet(SharingError):
    """The points scheme interpolated the secrets to a polynomial of too low a degree.

    Shares cut from such a polynomial could be combined by fewer than ``k``
    holders, so splitting refuses instead of silently weakening the threshold.
    """

    def __init__(self, degree, k):
        self.degree = degree
        self.k = k
        super().__init__(
            f"secret set interpolates to degree {degree}, need degree {k - 1} "
            f"for a ({k}, n) scheme"
        )


class LeadingSecretZero(SharingError, ValueError):
    pass


class AllZeroSecrets(SharingError, ValueError):
    pass


class ChunkExceedsModulus(SharingError, ValueError):
    pass


class TooLarge(SharingError, ValueError):
    pass


class WraparoundRisk(SharingError, ValueError):
    """Evaluating the share polynomial could wrap modulo p, so divisibility is not preserved."""


class ShareFormatError(SharingError, ValueError):
    pass
