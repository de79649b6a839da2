# Sphinx configuration of the eym_exterior reference manual.
# Build it from a Sage shell (``sage -sh``).

import os
import sys

from sage.env import SAGE_DOC_SRC, SAGE_SRC

try:
    import sage.all  # noqa: F401
except ImportError:
    raise RuntimeError("the documentation must be built inside a Sage shell (run 'sage -sh' first)")

project = "Exterior Energy Estimates for Einstein-Yang-Mills"
copyright = "2026, eym_exterior developers"
author = "eym_exterior developers"
package_name = "eym_exterior"
version = "0.1.0"
release = version

sys.path.insert(0, os.path.abspath(os.path.join("..", "..")))
sys.path.append(os.path.join(SAGE_SRC, "sage_setup", "docbuild", "ext"))

extensions = [
    'sage_docbuild.ext.sage_autodoc',
    'sage_package.sphinx',
    'sphinx.ext.mathjax',
]

templates_path = [os.path.join(SAGE_DOC_SRC, 'common', 'templates'), '_templates']
master_doc = 'index'
exclude_patterns = []

# Docstrings write `x` for math.
default_role = 'math'
pygments_style = 'sphinx'

html_theme = 'default'
html_theme_path = [os.path.join(SAGE_DOC_SRC, 'common', 'themes', 'sage')]
htmlhelp_basename = package_name + "doc"
