"""
    MagicChart

    exact sextonion / octonion algebra, Jordan structures and magic chart dimension formulas.

    :copyright: (c) 2022 by the MagicChart developers.
    :license: GNU LGPLv3, see LICENSE for more details.
"""

import os
import setuptools

# get current directory
path = os.path.realpath(os.path.abspath(__file__))
current_directory = os.path.dirname(path)

# get version
version = {}
with open(f"{current_directory}/magicchart/version.py") as f:
    exec(f.read(), version)  # then we can use it as: version['__version__']

# get long description from readme
with open(f"{current_directory}/README.md", "r") as fh:
    long_description = fh.read()

try:
    with open(f"{current_directory}/requirements.txt", "r") as fh:
        requirements = fh.readlines()
except:
    requirements = ['sympy >= 1.7', 'packaging', 'distro; platform_system == "Linux"']

setuptools.setup(
    name="MagicChart",
    version=version['__version__'],
    scripts=[],  # entry_points below
    author="MagicChart developers",
    description="exact arithmetic for the sextonions, their Jordan algebras and the magic chart",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
    package_data={'magicchart': ['data/*.json']},
    keywords="octonions sextonions jordan algebra magic chart lie algebra weyl dimension formula",
    install_requires=requirements,
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={
        # our executable: "exe file on windows for example"
        'console_scripts': [
            'magicchart = magicchart.MagicChart:main',
        ]},
    classifiers=[
        "Programming Language :: Python :: 3",
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        "License :: OSI Approved :: GNU Lesser General Public License v3 or later (LGPLv3+)",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires='>=3.8',
)
