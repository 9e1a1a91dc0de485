# -*- coding: utf-8 -*-
"""Helper functions for addressing fields of nested configuration dicts"""

__all__ = ['format_path']


def format_path(path):
    """Dotted representation of a path, list indices in brackets
    (e.g. construction.diagonals[1])"""
    text = ''
    for key in path if isinstance(path, (tuple, list)) else [path]:
        if isinstance(key, int):
            text += '[{}]'.format(key)
        else:
            text += ('.' if text else '') + str(key)
    return text
