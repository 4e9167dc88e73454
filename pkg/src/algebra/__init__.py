#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Noyau algébrique : algèbre linéaire exacte, algèbres de Lie munies d'un
opérateur de Reynolds et d'une dérivation, représentations.
"""

from .exceptions import PostconditionError, PreconditionError, ShapeError
from .lie_core import (
    LieAlgebra,
    ReynoldsLieAlgebra,
    ReynoldsLieDerPair,
    bowtie,
    induced_bracket,
    is_derivation,
    is_reylieder,
    is_reynolds,
    jacobi_check,
)
from .rep import Representation, ReynoldsRep, RLDRep, adjoint_rep, induced_rep
from .validation import ValidationReport

__version__ = '0.1.0'
