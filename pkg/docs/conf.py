#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# g2theta documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath('../src'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.autosummary',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax'
]

autosummary_generate = True
autoclass_content = "both"

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'g2theta'
copyright = '2026, the g2theta developers'
author = 'the g2theta developers'

version = '0.1.0'
release = '0.1.0'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_static_path = ['_static']
htmlhelp_basename = 'g2theta_doc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (master_doc, 'g2theta.tex', 'g2theta Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'g2theta', 'g2theta Documentation',
     [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
