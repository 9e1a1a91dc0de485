# -*- coding: utf-8 -*-
# pylint: disable=wildcard-import
"""Run configurations, reports and point files"""
from .exceptions import *
from .expressions import *
from .config import *
from .report import *
from .points import *
