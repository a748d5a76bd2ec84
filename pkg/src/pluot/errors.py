"""Exception types shared across the engine."""


class PluotError(Exception):
    """Base class for engine errors."""


class NotFoundError(PluotError):
    """A store key (metadata or chunk) does not exist."""

    def __init__(self, message, *, store_name=None, key=None):
        super().__init__(message)
        self.store_name = store_name
        self.key = key


class UnsupportedFormatError(PluotError):
    """Array metadata uses a codec/dtype/layout outside the supported subset."""


class CorruptChunkError(PluotError):
    """A chunk payload is shorter than its declared full-chunk size."""


class CapacityError(PluotError):
    """A vector render exceeded the configured point cap."""


class NoExtentError(PluotError):
    """Extent was requested for an empty or all-NaN buffer."""


class GpuUnavailableError(PluotError):
    """No GPU device can be acquired; callers should fall back to CPU."""


class SpecError(PluotError):
    """A plot spec failed validation.

    ``field`` holds a JSON-path-ish address of the offending node, e.g.
    ``layers[2].x.store``.
    """

    def __init__(self, message, *, field=None):
        super().__init__(message)
        self.field = field


class LayerError(PluotError):
    """A layer's prepare/draw failed; carries layer attribution.

    ``store_key`` is set when the underlying failure was a store access.
    """

    def __init__(self, message, *, layer_id, store_key=None):
        super().__init__(message)
        self.layer_id = layer_id
        self.store_key = store_key
