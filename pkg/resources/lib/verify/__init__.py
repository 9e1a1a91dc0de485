# -*- coding: utf-8 -*-
# pylint: disable=wildcard-import
"""Numerical certification: Gram matrices, truncation ladders and
equidistribution"""
from .exceptions import *
from .gram import *
from .ladder import *
from .equidistribution import *
