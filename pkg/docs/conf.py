# -*- coding: utf-8 -*-
#
# rectwind documentation build configuration file.

import ast
import os
import re
import sys

sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.coverage',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'rectwind'
copyright = '2026, rectwind developers'
author = 'rectwind developers'

_version_re = re.compile(r"__version__\s+=\s+(.*)")
with open(os.path.join(os.path.dirname(__file__), '..', 'rectwind_cli', '__init__.py')) as init:
    release = str(ast.literal_eval(_version_re.search(init.read()).group(1)))
version = '.'.join(release.split('.')[:2])

language = 'en'
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'rectwinddoc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (master_doc, 'rectwind.tex', 'rectwind Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'rectwind', 'rectwind Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'rectwind', 'rectwind Documentation',
     author, 'rectwind', 'Exact zero counting in rectangles.',
     'Miscellaneous'),
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
}
