# -*- coding: utf-8 -*-
# pylint: disable=wildcard-import
"""Frequency set constructions and admissibility conditions"""
from .exceptions import *
from .sequences import *
from .constructions import *
from .rules import *
