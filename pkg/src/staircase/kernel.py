"""Backend selection for the component counter.

The compiled extension is used when it imports; otherwise the pure-Python
module with the same contract.  Set ``STAIRCASE_KERNEL=python`` to force the
fallback.
"""

import os

from . import _kernel_py

BACKEND = "python"
graded_counts = _kernel_py.graded_counts

if os.environ.get("STAIRCASE_KERNEL", "").lower() != "python":
    try:
        from ._kernel import graded_counts  # noqa: F811
    except ImportError:
        pass
    else:
        BACKEND = "cython"

python_graded_counts = _kernel_py.graded_counts
