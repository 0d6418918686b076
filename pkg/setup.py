#!/usr/bin/env python
# -*- coding: utf-8 -*-


try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup


with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = [
    'numpy',
    'scipy',
    'pandas',
    'networkx',
    'PyYAML',
]

test_requirements = [
    'pytest',
]

setup(
    name='ofdmatools',
    version='0.1.0',
    description="Load-minimizing PRB and power allocation for multi-cell OFDMA networks, "
                "with a Monte-Carlo simulator to compare allocators.",
    long_description=readme + '\n\n' + history,
    author="ofdmatools developers",
    url='https://github.com/ofdmatools/ofdmatools',
    packages=[
        'ofdmatools',
        'ofdmatools.allocators',
        'ofdmatools.graphs',
        'ofdmatools.harness',
        'ofdmatools.network',
        'ofdmatools.power',
        'ofdmatools.scenarios',
    ],
    package_dir={'ofdmatools':
                 'ofdmatools'},
    include_package_data=True,
    install_requires=requirements,
    entry_points={
        'console_scripts': [
            'ofdmatools=ofdmatools.harness.cli:main',
        ],
    },
    license="MIT",
    zip_safe=False,
    keywords='ofdma resource-allocation independent-set power-control',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering',
    ],
    python_requires='>=3.8',
    test_suite='tests',
    tests_require=test_requirements
)
