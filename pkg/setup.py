from setuptools import setup

setup(name='trm.toader',
      version='1.0',
      packages = ['trm', 'trm.toader', 'trm.toader.scripts'],
      python_requires='>=3.8',
      install_requires=['numpy', 'scipy'],
      extras_require={
          'test' : ['pytest', 'hypothesis'],
      },
      entry_points={
          'console_scripts' : [
              'toader=trm.toader.scripts.toader:toader',
          ],
      },

      # metadata
      description="Toader mean, complete elliptic integrals and their bounds",
      long_description="""
toader evaluates the complete elliptic integrals K and E by the
arithmetic-geometric mean, the Toader mean built on E, and the centroidal,
contraharmonic and power means that bound it. It verifies the two-sided
bounds numerically and recovers the best constants by bisection.
""",
      )
