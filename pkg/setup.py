#!/usr/bin/env python

from setuptools import setup, find_packages

setup(
    name='orbita',
    version='0.0.1',
    packages=find_packages('src'),
    package_dir={'': 'src'},
    package_data={'orbita': ['data/*.cfg']},
    python_requires=">=3.7",
    install_requires=[
        'attrs>=20.1.0',
        'sortedcontainers',
        'sympy',
        'pplpy',
        'PyYAML>=5.1',
    ],
    setup_requires=[
        'pytest-runner'
    ],
    tests_require=[
        'pytest',
        'pytest-mock',
    ],
)
