# -*- coding: utf-8 -*-
# pylint: disable=wildcard-import
"""Frequency sets, lattices, the rounding map, Beatty-Fraenkel sequences and
density estimation"""
from .exceptions import *
from .freqset import *
from .rounding import *
from .beatty import *
from .density import *
from .rules import *
