# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# For a full list of options see the documentation:
# http://www.sphinx-doc.org/en/master/config

import solar_theme

import infoclone


# -- Project information -----------------------------------------------------

project = "infoclone"
copyright = "2020, the infoclone developers"
author = "the infoclone developers"

# The short X.Y version
version = infoclone.__version__
# The full version, including alpha/beta/rc tags
release = infoclone.__version__

DESCRIPTION = """
Information cloning of harmonic-oscillator coherent states.
""".strip()


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx_autodoc_typehints",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.githubpages",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
language = None
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = None


# -- Options for HTML output -------------------------------------------------

html_theme = "solar_theme"
html_theme_path = [solar_theme.theme_path]
html_theme_options = {
    "description": DESCRIPTION,
    "fixed_sidebar": True,
}

html_show_sourcelink = False
html_show_sphinx = False
html_static_path = ["_static"]
html_sidebars = {"**": ["globaltoc.html", "searchbox.html"]}
htmlhelp_basename = "infoclonedoc"


# -- Options for manual page output ------------------------------------------

man_pages = [(master_doc, "infoclone", "infoclone Documentation", [author], 1)]


# -- Extension configuration -------------------------------------------------

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
}
