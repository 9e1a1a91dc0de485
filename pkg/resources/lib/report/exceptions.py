# -*- coding: utf-8 -*-
"""Common exception types for run configurations and reports"""
from resources.lib.common import format_path


class ConfigError(Exception):
    """The run configuration is invalid. Carries the path of the offending
    field"""
    def __init__(self, path, message):
        self.path = format_path(path) if path else ''
        super(ConfigError, self).__init__(
            '{}: {}'.format(self.path, message) if self.path else message)
        self.reason = message
