"""Quantum Grothendieck rings of quantum loop algebras through Q-data.

Submodules:

- ``liealg``: Cartan data, the inverse quantum Cartan matrix ``c~``
- ``weyl``: roots, reduced words, compatible pairs, braid moves
- ``qdata``: unfoldings, Q-data, ``tau_Q``, ``phi_Q`` and the twisted AR quiver
- ``qtorus``: monomials, the quantum torus ``Y_t``, bar involution
- ``qchar``: ``F_t``, ``E_t``, ``L_t``, KL polynomials, T-systems
- ``rmatrix``: R-matrix denominators and ``dd``
- ``qcluster``: quantum seeds, mutation, the map ``X_alpha -> m``
- ``isom``: window factorization, relations R1-R3, the bijection ``psi``
"""
from .liealg import LieType, lie_type, star, tilde_c
from .qchar import classical_fm, et, ft, kl_table, lt
from .qdata import QDatum, canonical_height, random_qdatum
from .qtorus import Monomial, QTElement, TCoeff, Y, quantum_torus

__version__ = "0.1.0"

__all__ = [
    "LieType",
    "lie_type",
    "star",
    "tilde_c",
    "QDatum",
    "canonical_height",
    "random_qdatum",
    "Monomial",
    "TCoeff",
    "QTElement",
    "Y",
    "quantum_torus",
    "classical_fm",
    "ft",
    "et",
    "lt",
    "kl_table",
]
