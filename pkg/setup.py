#! /usr/bin/env python3

from setuptools import setup, find_packages

PROJECT_NAME = "g2theta"
VERSION = "0.1.0"


with open('README.md', encoding='utf-8') as f:
    readme = f.read()


setup(
    name=PROJECT_NAME,
    version=VERSION,
    description='symbolic tables for the exceptional theta correspondences of G2',
    long_description=readme,
    long_description_content_type='text/markdown',
    license='MIT',
    keywords=['representation theory', 'theta correspondence', 'G2',
              'Langlands', 'p-adic groups'],
    packages=find_packages('src'),
    package_dir={'': 'src'},
    package_data={PROJECT_NAME: ['data/*.yml', 'data/*.json']},
    python_requires='>=3.9',
    install_requires=[
        'PyYAML>=5.1',
        'pyparsing>=3.0',
        'jsonschema>=3.2',
    ],
    extras_require={'test': ['hypothesis>=6.0']},
    tests_require=['hypothesis>=6.0'],
    entry_points={
        'console_scripts': ['g2theta=g2theta.cli:main'],
    },
    zip_safe=False,
    test_suite='tests'
)
