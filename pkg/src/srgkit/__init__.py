"""Induced-subgraph counting machinery for strongly regular graphs.

Submodules:
    graphcore  small graphs, canonical forms, orbits, enumeration, graph6
    algebra    exact linear algebra and symbolic count expressions
    equations  the counting identities linking consecutive orders
    solve      order-by-order solution tables and free-parameter bounds
    spectra    eigenvalues, multiplicities, and parameter feasibility
    geobound   Cauchy-Schwarz bounds from the spherical representation
    mooreaut   automorphism count congruences for the missing Moore graph
    oracle     fixture SRGs and brute-force censuses for validation
    cli        batch front-end
"""

from .graphcore import (GraphClass, SmallGraph, canonical_key,
                        enumerate_graphs, graph6_decode, graph6_encode)
from .spectra import SrgParams, feasibility_report, spectrum

__all__ = [
    "GraphClass", "SmallGraph", "SrgParams", "canonical_key",
    "enumerate_graphs", "feasibility_report", "graph6_decode",
    "graph6_encode", "spectrum",
]
