"""Hot graph kernels: compiled when available, pure Python otherwise.

Both backends expose ``bfs_distances``, ``girth`` and ``search`` with
identical signatures; ``BACKEND`` names the one selected at import.
"""
from . import _pykernels as python_backend

try:
    from . import _ckernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend

BACKEND = _active.BACKEND
bfs_distances = _active.bfs_distances
girth = _active.girth
search = _active.search

__all__ = ["BACKEND", "bfs_distances", "girth", "search",
           "python_backend", "compiled_backend"]
