"""Exact K-theoretic and representation-theoretic invariants of small
hereditary categories: quiver representations, tubes and curves."""

from hercat.errors import HercatError, InputError, ParseError
from hercat.kernels import BACKEND
from hercat.klattice import EulerLattice, coxeter, curve_lattice, radical_quotient, serre_check
from hercat.quiver import Quiver, Rep, hom_ext, hom_ext_dims

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EulerLattice",
    "HercatError",
    "InputError",
    "ParseError",
    "Quiver",
    "Rep",
    "coxeter",
    "curve_lattice",
    "hom_ext",
    "hom_ext_dims",
    "radical_quotient",
    "serre_check",
]
