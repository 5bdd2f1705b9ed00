"""Exception types shared across the package."""


class DiracLabError(Exception):
    """Base class for every error raised by this package."""


class InvalidDimension(DiracLabError):
    """Array shape incompatible with a 2**n qubit register."""


class NotHermitian(DiracLabError):
    """Matrix expected to be Hermitian deviates beyond tolerance."""


class ZeroNorm(DiracLabError):
    """Vector norm too small to normalize."""


class SuperluminalInput(DiracLabError):
    """Speed parameter at or beyond the speed of light."""


class DegenerateHelicity(DiracLabError):
    """Helicity direction undefined for vanishing momentum."""


class DegenerateMomenta(DiracLabError):
    """Momentum labels coincide; the dichotomic encoding needs two."""


class PartitionError(DiracLabError):
    """Bipartition inconsistent with the register it is applied to."""


class ProjectionAnnihilated(DiracLabError):
    """Projection weight vanishes; the conditional state is undefined."""


class UnreachableAngle(DiracLabError):
    """Requested Wigner angle outside the attainable range."""


class ConfigError(DiracLabError):
    """Invalid scenario configuration."""
