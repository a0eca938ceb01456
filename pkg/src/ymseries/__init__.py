"""Exact computation of equivariant Poincare series for Yang-Mills strata.

The package computes, over the rationals and without any floating point,
the equivariant Poincare series attached to the Morse/Harder-Narasimhan
stratification of the space of connections on a classical-group bundle over
a closed surface: gauge-group classifying space series, closed-form
semistable series, stratum enumerations with codimensions, the recursion
identity tying them together, and the combinatorics of the nonorientable
counterparts.
"""

__version__ = "0.1.0"
