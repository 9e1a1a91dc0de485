# -*- coding: utf-8 -*-
"""Helper functions for file operations"""
import io
import os

from .logging import debug

__all__ = ['save_file', 'load_file']


def save_file(filename, content, mode='w'):
    """
    Saves the given content under given filename.
    Missing parent folders are created.
    :param filename: The filename
    :param content: The content of the file
    """
    folder = os.path.dirname(filename)
    if folder and not os.path.isdir(folder):
        os.makedirs(folder)
    with io.open(filename, mode, encoding='utf-8', newline='') as file_handle:
        file_handle.write(content)
    debug('Saved {} characters to {}'.format(len(content), filename))


def load_file(filename, mode='r'):
    """
    Loads the content of a given filename
    :param filename: The file to load
    :return: The content of the file
    """
    with io.open(filename, mode, encoding='utf-8') as file_handle:
        return file_handle.read()
