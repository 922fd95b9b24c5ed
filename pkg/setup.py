import re
from codecs import open

import setuptools


with open('hurwitzlab/__init__.py', 'r') as f:
    version = re.search(r'^__version__\s*=\s*[\'"]([^\'"]*)[\'"]', f.read(), re.MULTILINE).group(1)
if not version:
    raise RuntimeError('Cannot find version information')

with open('README.rst', 'r') as f:
    readme = f.read()

setuptools.setup(
    name='hurwitz-lab',
    version=version,
    description='Exact computations with tubular elliptic Weyl groups and Hurwitz orbits.',
    long_description=readme,
    long_description_content_type='text/x-rst',
    packages=['hurwitzlab'],
    package_data={'hurwitzlab': ['data/*.json']},
    license='MIT',
    python_requires='>=3.8',
    install_requires=[
        'sympy>=1.11',
        'networkx>=2.5',
    ],
    entry_points={
        'console_scripts': ['hurwitz-lab = hurwitzlab.cli:main'],
    },
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    keywords=('weyl group', 'root system', 'hurwitz action', 'braid group', 'noncrossing'),
)
