# -*- coding: utf-8 -*-
#
# open-rspin documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys


# autodoc imports the package from the checkout above this directory.
sys.path.insert(0, os.path.abspath('..'))

from openrspin import __version__  # noqa

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'open-rspin'
copyright = u'2026, open-rspin developers'

# The short X.Y version.
version = '.'.join(__version__.split('.')[:2])
# The full version, including alpha/beta/rc tags.
release = __version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'open-rspindoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
    # W_t output uses \tfrac.
    'preamble': r'\usepackage{amsmath}',
}

latex_documents = [
    ('index', 'open-rspin.tex', u'open-rspin Documentation', u'open-rspin developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'open-rspin', u'open-rspin Documentation', [u'open-rspin developers'], 1)
]
