"""hopfkit: exact verification kernel for finite-dimensional Hopf algebras."""
from __future__ import annotations

__version__ = "0.1.0"
