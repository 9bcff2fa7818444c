"""Exact-arithmetic operads of decorated cliques.

Subpackages cover: unitary magmas (`magma`), decorated cliques and
their partial composition (`clique`), linear combinations and operad
axiom checks (`linops`), suboperad/quotient families (`families`), the
noncrossing suboperad and its algebras (`ncm`), syntax trees and the
rewrite system presenting the noncrossing operad (`rewrite`), counting
and Hilbert-series utilities (`series`), triangular bases (`bases`),
rational-function realizations (`ratfct`), encodings of known operads
(`knownops`), and the command-line interface (`cli`).
"""

__version__ = "0.1.0"
