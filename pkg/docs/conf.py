# Sphinx configuration for trm.toader

import sys, os

sys.path.insert(0, os.path.abspath('..'))

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'trm.toader'
copyright = u'2026'
version = '1.0'
release = '1.0'

exclude_patterns = ['_build']
pygments_style = 'sphinx'
autodoc_member_order = 'bysource'

html_theme = 'default'
htmlhelp_basename = 'trmtoaderdoc'
