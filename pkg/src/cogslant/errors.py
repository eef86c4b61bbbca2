"""Exception hierarchy shared by every module."""


class SlantError(Exception):
    """Base class for all errors raised by cogslant."""


class PnmFormatError(SlantError, ValueError):
    """Malformed, truncated or unsupported PNM data."""


class GlyphTooSmallError(SlantError, ValueError):
    """The glyph is too short to hold two bands of at least two rows."""


class EmptyBandError(SlantError, ValueError):
    """A band holds no foreground pixels."""


class NotDetectableError(SlantError):
    """Skew cannot be estimated because one of the bands is blank."""


class InvalidCentroidsError(SlantError, ValueError):
    """The upper centroid does not lie strictly above the lower one."""


class InvalidShearError(SlantError, ValueError):
    """Shear angle outside the open interval (-45, 45) degrees."""


class UnknownFixtureError(SlantError, KeyError):
    """Requested fixture name is not in the bundled manifest."""
