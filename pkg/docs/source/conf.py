# <LICENSE id="CC BY-SA 4.0">
#
#
#   Tripartite simulation module documentation
#   Copyright 2024 Robert Bosch GmbH and its subsidiaries
#
#   This work is licensed under the
#
#       Creative Commons Attribution-ShareAlike 4.0 International License.
#
#   To view a copy of this license, visit
#       http://creativecommons.org/licenses/by-sa/4.0/
#   or send a letter to
#       Creative Commons, PO Box 1866, Mountain View, CA 94042, USA.
#
#
# </LICENSE>
# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import configparser
from pathlib import Path

pathModule = Path(__file__).parent.parent.parent

xSetup = configparser.ConfigParser()
xSetup.read(pathModule / "setup.cfg")
sVersion = xSetup.get("metadata", "version", fallback="0.0.0")

# -- Project information -----------------------------------------------------

project = "tripsim - Tripartite Entanglement Simulator"
copyright = "2024, Robert Bosch GmbH"
author = "Robert Bosch GmbH"

# The full version, including alpha/beta/rc tags
release = sVersion


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.intersphinx",
    "myst_parser",
]

myst_enable_extensions = [
    "colon_fence",
    "deflist",
    "fieldlist",
    "substitution",
    "dollarmath",
]

myst_heading_anchors = 3

myst_substitutions = {"ProjectName": project}

templates_path = ["_templates"]

exclude_patterns = []


# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_book_theme"

html_static_path = ["_static"]

intersphinx_mapping = {}
