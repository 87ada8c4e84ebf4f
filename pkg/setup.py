from setuptools import setup
from setuptools import find_packages

__version__ = "0.1.0"

setup(name='purepolylog',
      version=__version__,
      description='Finite polylogarithms over F_p and F_p(a) in Python',
      install_requires=[
            "typing_extensions>=4.1.1",
            "pandas>=1.5",
            "jinja2>=3.0"
      ],
      extras_require={
            "tests": [
                  "pytest>=7.1.1",
                  "pytest-cov==3.0.0",
                  "pytest-mock==3.7.0",
                  "hypothesis>=6.0"
            ]
      },
      setup_requires=[
            "sphinx==4.5.0",
            "furo==2022.3.4",
            "python-semantic-release==7.28.1"
      ],
      entry_points={
            "console_scripts": ["purepolylog = purepolylog.cli:main"]
      },
      packages=find_packages(exclude=["tests", "tests.*"]),
      )
