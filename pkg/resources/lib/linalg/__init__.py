# -*- coding: utf-8 -*-
# pylint: disable=wildcard-import
"""Small dense linear algebra on d x d real matrices (1 <= d <= 8)"""
from .exceptions import *
from .matrix import *
