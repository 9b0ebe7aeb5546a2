"""
    Setup script for gac-bounds
"""
from setuptools import setup, find_packages

setup(
    name='gac-bounds',
    version='0.0.1',
    package_dir={'': 'src'},  # Tells setuptools that packages are under src
    packages=find_packages(where='src'),  # Looks for packages in src directory
    py_modules=['building_sets', 'graphs', 'face_complex', 'face_polynomials', 'families',
                'bounds_harness', 'input_utils', 'run_gac', 'make_verification',
                'check_verification_output'],
    install_requires=['numpy', 'pyyaml', 'sympy', 'networkx'],
    entry_points={'console_scripts': ['gac=run_gac:main']},
)
