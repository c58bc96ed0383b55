"""Normal-form engine selection.

The compiled extension is preferred when it built; the pure-Python engine is
always available as a fallback and as the reference implementation.  Set
GARSIDE_KERNEL=py to force the fallback (useful for benchmarking and for
debugging suspected extension issues).
"""

from __future__ import annotations

import os

from . import _kernel_py

PyEngine = _kernel_py.Engine

try:
    from . import _kernel as _compiled
except ImportError:
    _compiled = None

CompiledEngine = _compiled.Engine if _compiled is not None else None

if os.environ.get("GARSIDE_KERNEL", "").strip().lower() in {"py", "python", "pure"}:
    Engine = PyEngine
else:
    Engine = CompiledEngine if CompiledEngine is not None else PyEngine


def backend_name() -> str:
    return getattr(Engine, "backend", "python")
