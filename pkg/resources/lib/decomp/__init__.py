# -*- coding: utf-8 -*-
# pylint: disable=wildcard-import
"""Witnesses of parallelepiped decompositions A[0,1]^d = B^-T R^-1 H[0,1]^d"""
from .witness import *
