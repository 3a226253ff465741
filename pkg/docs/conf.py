# (C) Copyright the higgs-census developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Sphinx configuration."""

import importlib.metadata

project = "higgs-census"
copyright = "2026, the higgs-census developers"
author = "The higgs-census developers"
release = importlib.metadata.version("higgs-census")

extensions = [
    "sphinx.ext.napoleon",
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx_autodoc_typehints",
    "myst_parser",
]

exclude_patterns = ["_build"]

# HTML output options
html_theme = "alabaster"
html_title = f"{project} {release}"
