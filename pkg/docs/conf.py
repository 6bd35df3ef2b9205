# -*- coding: utf-8 -*-
#
# bifree documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

# Insert bifree's path into the system.
sys.path.insert(0, os.path.abspath(".."))

import bifree


# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = u"bifree"
copyright = u"2026, The bifree developers"
author = u"The bifree developers"

# The short X.Y version.
version = bifree.__version__
# The full version, including alpha/beta/rc tags.
release = bifree.__version__

language = "en"
exclude_patterns = ["_build"]

add_function_parentheses = True
add_module_names = True

pygments_style = "sphinx"
todo_include_todos = True


# -- Options for HTML output ----------------------------------------------

html_theme = "alabaster"
html_theme_options = {
    "show_powered_by": False,
    "show_related": False,
    "note_bg": "#FFF59C",
}
html_sidebars = {
    "**": [
        "localtoc.html",
        "relations.html",
        "searchbox.html",
    ],
}
html_show_sourcelink = False
html_show_sphinx = False
html_show_copyright = True

htmlhelp_basename = "bifreedoc"


# -- Options for LaTeX and manual page output -----------------------------

latex_documents = [
    (master_doc, "bifree.tex", u"bifree Documentation", author, "manual"),
]
man_pages = [(master_doc, "bifree", u"bifree Documentation", [author], 1)]


# Example configuration for intersphinx: refer to the Python standard library.
intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pandas": ("https://pandas.pydata.org/pandas-docs/stable/", None),
}
