#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Commandes de la ligne de commande (voir main.py).
"""

from .commands import (
    COMMANDS,
    CommandResult,
    cmd_cohomology,
    cmd_deform,
    cmd_extend,
    cmd_obstruction,
    cmd_survey,
    cmd_validate,
)
