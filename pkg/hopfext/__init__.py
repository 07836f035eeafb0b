"""Hopf algebras over finite fields: Nichols algebras, extensions, twists and Betti numbers."""

__version__ = "0.4.0"
