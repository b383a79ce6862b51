"""Maps out of the Catalan simplicial set into the homotopy coherent nerve of Cat."""

__version__ = "0.1.0"
