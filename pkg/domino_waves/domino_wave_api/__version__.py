"""Version."""

__title__ = "domino-waves"
__description__ = "Propagation speed of the falling-domino wave on an idealized rod chain."
__version__ = "0.1.0"
__license__ = "Apache License 2"
