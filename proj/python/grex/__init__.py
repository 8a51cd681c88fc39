"""Exact Ext^1 dimensions between rank-1 graded MCM modules over C[x,y]/(x^k).

Thin Python layer over the C++ core: k-subset combinatorics, crossing
grids with their alpha/beta statistics, the closed dimension formula, and
the independent matrix-factorization oracle.
"""

try:
    from ._grex import *  # noqa: F401,F403  (installed wheel layout)
    from ._grex import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-tree builds put _grex on PYTHONPATH directly
    from _grex import *  # noqa: F401,F403
