"""LP^MLN semantics and strong-equivalence toolkit (C++ core bindings)."""

try:
    from ._lpmln import *  # noqa: F401,F403
    from ._lpmln import __doc__ as _core_doc
except ImportError:  # in-tree builds put _lpmln next to the package on PYTHONPATH
    from _lpmln import *  # noqa: F401,F403
    from _lpmln import __doc__ as _core_doc

__doc__ = _core_doc or __doc__
