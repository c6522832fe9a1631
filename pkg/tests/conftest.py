import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from grayud import _kernels  # noqa: E402
from grayud.embedding import assemble  # noqa: E402
from grayud.graph import gray_graph  # noqa: E402

REF_H, REF_THETA = 0.6, 0.3

BACKENDS = [_kernels.python_backend]
if _kernels.compiled_backend is not None:
    BACKENDS.append(_kernels.compiled_backend)


@pytest.fixture(scope="session")
def gray():
    return gray_graph()


@pytest.fixture(scope="session")
def reference():
    return assemble(REF_H, REF_THETA)


@pytest.fixture(params=BACKENDS, ids=lambda k: k.BACKEND)
def backend(request, monkeypatch):
    """Route the package's kernel calls through one specific backend."""
    k = request.param
    for name in ("bfs_distances", "girth", "search"):
        monkeypatch.setattr(_kernels, name, getattr(k, name))
    return k
