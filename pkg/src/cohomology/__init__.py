#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Cochaînes, cobords et cohomologie des paires LieDer de Reynolds.
"""

from .cochain import Cochain, PairCochain, QuadCochain
from .complexes import CochainComplex, ComplexKind, cohomology, is_coboundary, quad_residual_report
from .audit import CHAIN_MAP_IDENTITIES, chain_map_audit, square_audit
