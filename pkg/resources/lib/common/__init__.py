# -*- coding: utf-8 -*-
# pylint: disable=wildcard-import, wrong-import-position
"""Common operations and utilities"""
from .logging import *
from .fileops import *
from .pathops import *
from .misc_utils import *
