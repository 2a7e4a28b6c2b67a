"""Executable finite bicategory theory: coherence validation, lax slices,
mates, inc-lax terminal objects, the reverse lax functor of Quillen's Theorem A,
and certified biequivalences via the Whitehead theorem."""

__version__ = "0.1.0"
