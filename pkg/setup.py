from setuptools import setup

with open('VERSION', 'r') as f:
    VERSION = f.read().strip()

with open('README.md', 'r') as f:
    LONG_DESCRIPTION = f.read()

setup(
    name='pyfermicav',
    version=VERSION,
    description='Bogoliubov transformations and entanglement degradation of '
    'Dirac fields in rigid cavities on grafted inertial and uniformly '
    'accelerated trajectories.',
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    license="LGPLv3",
    package_dir={'': 'src'},
    packages=[
        "fermicav",
    ],
    include_package_data=True,
    python_requires='>=3.8',
    install_requires=[
        "numpy",
        "scipy",
        "typeguard<3",
        "jsonpickle",
        "pyyaml",
        "tqdm",
    ],
    extras_require={
        "test": [
            "pytest",
            "hypothesis",
        ],
    },
    entry_points={
        'console_scripts': ['fermicav=fermicav.main:main'],
    },
)
