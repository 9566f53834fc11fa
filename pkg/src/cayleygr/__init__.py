"""Exact computational model of the Cayley Grassmannian CG in G(3,7).

Subpackages cover the octonion algebra, the torus-adapted weight model,
the torus fixed locus, GKM localization and Schubert calculus, classical
Schubert calculus on the ambient G(4,7), and numerical invariants, plus a
verification CLI that diffs every computation against embedded fixtures.
"""

__version__ = "0.1.0"
