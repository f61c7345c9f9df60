import os
from setuptools import setup, find_packages

# Get the version from __init__.py
with open(os.path.join('FuzzyIDPy', '__init__.py'), 'r') as f:
    for line in f:
        if line.startswith('__version__'):
            version = line.split('=')[1].strip().strip('"\'')
            break

with open('README.md', 'r', encoding='utf-8') as f:
    readme = f.read()

setup(
    name='FuzzyIDPy',
    version=version,
    description='Fuzzy influence diagrams: inference, decisions and sensitivity with fuzzy probabilities',
    long_description=readme,
    long_description_content_type='text/markdown',
    author='FuzzyIDPy Team',
    author_email='info@FuzzyIDPy.example.com',
    packages=find_packages(),
    package_data={'FuzzyIDPy': ['fixtures/*.fid.json']},
    keywords=['influence diagram', 'fuzzy', 'decision analysis', 'bayesian network', 'sensitivity'],
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.22',
        'networkx>=2.8',
        'matplotlib>=3.5',
    ],
    extras_require={
        'test': [
            'pytest>=7.0',
            'hypothesis>=6.50',
        ],
    },
    entry_points={
        'console_scripts': [
            'fuzzyid=FuzzyIDPy.cli:run',
        ],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries :: Python Modules',
    ],
)
