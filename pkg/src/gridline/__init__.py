"""gridline: risk and resilience analysis for critical-infrastructure
transit networks.

The library models a transit system as an undirected graph of stations
and rail links, each carrying a threat/vulnerability/consequence profile,
and provides graph metrics, MBRA-style risk scoring, resiliency-line
calibration, fault-tree budget optimization, attack simulation, and ROI
analysis.  A CLI (``gridline``) and an HTTP service expose every analysis.
"""

from __future__ import annotations

from ._kernels import BACKEND as KERNEL_BACKEND
from .network import (RailLink, StationNode, ThreatProfile, TransitNetwork,
                      load_bundled, parse, serialize, validate)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "RailLink",
    "StationNode",
    "ThreatProfile",
    "TransitNetwork",
    "__version__",
    "load_bundled",
    "parse",
    "serialize",
    "validate",
]
