#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Fichiers de définitions JSON et rendu des rapports de la ligne de commande.
"""

from .extraction import Entry, InputError, Workspace
from .reporting import dump_json, encode_matrix, render_table, summarize, write_report
