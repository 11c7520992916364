"""Kernel selection: the compiled extension when importable, else pure Python.

``active`` is the module in use; ``python`` is always the reference
implementation and ``compiled`` is ``None`` when the extension is absent.
"""

from . import _pykernels as python

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

active = compiled if compiled is not None else python
COMPILED = compiled is not None

weight_distribution = active.weight_distribution
count_grids = active.count_grids
extend_noquad = active.extend_noquad
