#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# ofdmatools documentation build configuration file.

import os
import sys

# Import the package from the checkout, not from an installed copy
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import ofdmatools

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.napoleon', 'sphinx.ext.viewcode']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'OFDMA Allocation Tools'
copyright = u'2026, ofdmatools developers'
version = ofdmatools.__version__
release = ofdmatools.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'
html_theme = 'default'
htmlhelp_basename = 'ofdmatoolsdoc'

latex_documents = [
    ('index', 'ofdmatools.tex', u'OFDMA Allocation Tools Documentation',
     u'ofdmatools developers', 'manual'),
]

man_pages = [
    ('index', 'ofdmatools', u'OFDMA Allocation Tools Documentation',
     [u'ofdmatools developers'], 1)
]
