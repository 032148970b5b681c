"""Kernel backend selection.

The compiled backend is used when it imported successfully; set
QCK_KERNEL=python or QCK_KERNEL=c to force one (forcing c raises if the
extension is missing).
"""

import os

_choice = os.environ.get("QCK_KERNEL", "").strip().lower()

if _choice == "python":
    from . import pylaurent as kernel
elif _choice == "c":
    from . import _claurent as kernel  # type: ignore[no-redef]
else:
    try:
        from . import _claurent as kernel  # type: ignore[no-redef]
    except ImportError:
        from . import pylaurent as kernel

BACKEND = kernel.BACKEND
ladd = kernel.ladd
lsub = kernel.lsub
lmul = kernel.lmul
lscale_shift = kernel.lscale_shift
laddmul_inplace = kernel.laddmul_inplace
