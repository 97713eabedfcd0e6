"""Concrete groups with exact word metrics."""

from .abelian import AbelianGroup, make_abelian
from .dihedral import InfiniteDihedral, make_dihedral_inf
from .free import FreeGroup, make_free
from .freeproduct import FreeProductWithFree, make_free_product_free
from .heisenberg import HeisenbergGroup, MalcevTriple, Unsupported, heisenberg_star_length, make_heisenberg
from .product import ProductGroup, make_product
from .raag import RAAG, RaagGraph, make_raag
from .semidirect import Z2RtimesZ6, make_z2_rtimes_z6
from .symmetric import SymmetricGroup, make_symmetric
from .vagenset import OrbitNotFinite, VAGeneratingSet, va_genset

__all__ = [
    "AbelianGroup", "FreeGroup", "FreeProductWithFree", "HeisenbergGroup", "InfiniteDihedral",
    "MalcevTriple", "OrbitNotFinite", "ProductGroup", "RAAG", "RaagGraph", "SymmetricGroup",
    "Unsupported", "VAGeneratingSet", "Z2RtimesZ6", "heisenberg_star_length", "make_abelian",
    "make_dihedral_inf", "make_free", "make_free_product_free", "make_heisenberg", "make_product",
    "make_raag", "make_symmetric", "make_z2_rtimes_z6", "va_genset",
]
