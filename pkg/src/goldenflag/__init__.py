"""goldenflag: exact-arithmetic reconstruction of golden-ratio flag
designs, with a declarative flag-spec language and deterministic
SVG/JSON rendering."""

__version__ = "0.1.0"

from . import exactnum  # noqa: F401
