"""Extension build for the python package.

The CMake tree remains the primary build (CLI, tests); this compiles the
same sources into the zetacast._core extension so a plain

    pip install -e . --no-build-isolation

works without CMake.  Metadata lives in pyproject.toml.
"""

from glob import glob

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("NPY_NUM_BUILD_JOBS").install()

ext = Pybind11Extension(
    "zetacast._core",
    sorted(glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
