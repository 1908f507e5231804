# WP_Constants is a library of utilities for weak parallelogram laws in L^p
#
# MIT License
#
# See LICENSE for the full license text.

from setuptools import setup, find_packages

setup(name='WP_Constants',
      version='0.0.1',
      description='Optimal weak parallelogram constants of L^p spaces and their verification.',
      packages=find_packages(exclude=["tests", "tests.*"]),
      python_requires=">=3.8",
      install_requires=["numpy", "crc"],
      extras_require={
          "test": ["hypothesis"],
      },
      entry_points={
          "console_scripts": [
              "wpc=wpc.harness.cli:run",
          ]
      },
      )
