# -*- coding: utf-8 -*-
# pylint: disable=wildcard-import
"""Explicit Riesz bound formulas"""
from .exceptions import *
from .formulas import *
