# -*- coding: utf-8 -*-
# Module: setup
# License: MIT

"""Setup"""

import os
import re
import sys
from setuptools import find_packages, setup

REQUIRED_PYTHON_VERSION = (3, 8)
PACKAGES = find_packages(exclude=['examples', 'examples.*'])
INSTALL_DEPENDENCIES = [
    'numpy',
    'scipy',
    'mpmath',
]
SETUP_DEPENDENCIES = []
TEST_DEPENDENCIES = [
    'nose2',
    'mock',
]
EXTRA_DEPENDENCIES = {
    'dev': [
        'nose2',
        'flake8',
        'pylint',
        'mccabe',
        'pycodestyle',
        'pyflakes',
        'mock',
        'radon',
        'Sphinx',
        'sphinx_rtd_theme',
        'm2r',
        'restructuredtext_lint',
    ]
}


def get_project_data():
    """Loads the project metadata from resources/lib/globals.py"""
    root_dir = os.path.dirname(os.path.abspath(__file__))
    pathname = os.path.join(root_dir, 'resources', 'lib', 'globals.py')
    with open(pathname, 'r') as globals_py:
        globals_contents = globals_py.read()
        _id = re.search(
            r"PROJECT_ID = '(.+?)'",
            globals_contents).group(1)
        version = re.search(
            r"VERSION = '(.+?)'",
            globals_contents).group(1)
        return {
            'id': _id,
            'name': _id,
            'version': version,
            'desc': 'Exponential Riesz bases on parallelepipeds: '
                    'constructions, explicit bounds and numerical '
                    'certification',
        }


if sys.version_info < REQUIRED_PYTHON_VERSION:
    sys.exit('Python >= 3.8 is required. Your version:\n' + sys.version)

if __name__ == '__main__':
    PROJECT_DATA = get_project_data()
    setup(
        name=PROJECT_DATA.get('name'),
        version=PROJECT_DATA.get('version'),
        description=PROJECT_DATA.get('desc'),
        license='MIT',
        packages=PACKAGES,
        py_modules=['paralattice'],
        include_package_data=True,
        install_requires=INSTALL_DEPENDENCIES,
        setup_requires=SETUP_DEPENDENCIES,
        tests_require=TEST_DEPENDENCIES,
        extras_require=EXTRA_DEPENDENCIES,
        entry_points={
            'console_scripts': ['paralattice = paralattice:main'],
        },
    )
