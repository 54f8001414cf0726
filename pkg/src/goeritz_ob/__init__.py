"""goeritz-ob - Goeritz groups of Heegaard splittings induced by open books."""

__version__ = "0.1.0"
