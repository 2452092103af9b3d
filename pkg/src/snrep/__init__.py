"""Exact integer construction of the standard representation of S_n."""
from .basis import diagonalized_casimir, p_inverse_scaled, p_matrix
from .checks import Check, VerificationReport
from .exactmat import IntMatrix, ScaledMatrix
from .oracle import conjugate_direct, run_suite
from .perm import Permutation, compose, identity, inverse, unrank
from .permrep import casimir, perm_matrix
from .standard import RepKind, character, rep_matrix, standard_matrix

__version__ = "0.1.0"
