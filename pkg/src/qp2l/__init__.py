"""Two-level quasi-planarity: deciders, constructions and converters for
bipartite graphs with a fixed order on one vertex class."""

__version__ = "0.1.0"
