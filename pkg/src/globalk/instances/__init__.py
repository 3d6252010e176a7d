"""Concrete parsummable categories and their brute-force oracles."""

from .finsets import FinSets
from .gfinsets import GFinSets, GObj
from .free import FreeParsummable
from .trivial import DiscreteMonoid, OneObjectGroup
from .phi import DiscretePermutative, PhiCategory, SigmaCategory
from .modules import MatrixModule, ProjModules, module_iso_test

__all__ = ["FinSets", "GFinSets", "GObj", "FreeParsummable", "DiscreteMonoid", "OneObjectGroup",
           "DiscretePermutative", "PhiCategory", "SigmaCategory", "MatrixModule", "ProjModules",
           "module_iso_test"]
