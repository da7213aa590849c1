"""A setuptools based setup module.

See:
https://packaging.python.org/en/latest/distributing.html
https://github.com/pypa/sampleproject
"""

# To use a consistent encoding
from os import path

# Always prefer setuptools over distutils
from setuptools import setup, find_packages

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
try:
    with open(path.join(here, 'README.md'), encoding='utf-8') as f:
        long_description = f.read()
except Exception as e:
    long_description = "symscale: a desk-scale lab for scaling laws of transformer symbolic regression."

setup(
    name='symscale',

    # Versions should comply with PEP440.
    version='0.1.0',

    description='Scaling laws for transformer symbolic regression',
    long_description=long_description,
    long_description_content_type='text/markdown',

    # Author details
    author='Symscale Developers',

    license='MIT',

    python_requires='>=3.9',

    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',
        'Intended Audience :: Developers',

        'License :: OSI Approved :: MIT License',

        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',

        'Topic :: Scientific/Engineering :: Artificial Intelligence',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],

    keywords='symbolic regression transformer scaling laws pareto power law ml',

    packages=find_packages(exclude=['*tests*']),

    install_requires=[
        'joblib==1.5.2',
        'matplotlib==3.9.2',
        'numpy==1.26.4',
        'pandas==2.3.3',
        'psutil==7.1.0',
        'regex==2025.9.18',
        'scikit-learn==1.3.2',
        'scipy==1.13.1',
        'torch==2.2.2',
        'tqdm==4.67.1',
    ],

    include_package_data=True,
    package_data={
        'symscale': ['config/data/*.json', 'scaling/data/*.csv'],
    },

    # $ pip install -e .[dev,test]
    extras_require={
        'dev': ['pytest>=8.4.2', 'pytest-xdist>=3.8.0', 'pylint>=3.3.8'],
        'test': ['pytest>=8.4.2'],
    },

    entry_points={
        'console_scripts': [
            'symscale=symscale.cli:main',
        ],
    },
)
