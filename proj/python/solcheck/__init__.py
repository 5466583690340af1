"""Brute-force verification of solubilizer classifications and graphs.

The heavy lifting lives in the compiled extension ``_solcheck``; this package
re-exports its surface. In an installed wheel the extension sits inside the
package; in a development tree it is found on ``PYTHONPATH`` next to the
build directory.
"""

try:
    from ._solcheck import (
        __version__,
        group_order,
        run,
        solubilizer_sizes,
        stage_names,
    )
except ImportError:  # development layout: extension on PYTHONPATH
    from _solcheck import (
        __version__,
        group_order,
        run,
        solubilizer_sizes,
        stage_names,
    )

__all__ = [
    "__version__",
    "group_order",
    "run",
    "solubilizer_sizes",
    "stage_names",
]
