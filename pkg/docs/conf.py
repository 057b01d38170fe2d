# -*- coding: utf-8 -*-
#
# dgeo documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# The package root, so that autodoc imports dgeo from the source tree.
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'dgeo'
copyright = u'2026, dgeo developers'

version = '1.0'
release = '1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'dgeodoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'dgeo.tex', u'dgeo Documentation',
   u'dgeo developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'dgeo', u'dgeo Documentation',
     [u'dgeo developers'], 1)
]
