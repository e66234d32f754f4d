import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

here = os.path.dirname(os.path.abspath(__file__))

vendor = os.path.join(here, "vendor")
if not os.path.exists(os.path.join(vendor, "json.hpp")):
    vendor = "/opt/vendor"

sources = sorted(
    os.path.join("src", name) for name in os.listdir(os.path.join(here, "src"))
    if name.endswith(".cpp")
) + [os.path.join("bindings", "module.cpp")]

ext = Pybind11Extension(
    "geosho._core",
    sources,
    include_dirs=[os.path.join(here, "include"), vendor, os.path.join(here, "src")],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
