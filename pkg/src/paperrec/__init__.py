"""Content-based recommendation of conference papers.

The package ingests saved listing and paper pages into a line-delimited
corpus, models each paper as a bag-of-words bit vector, and recommends
papers whose best cosine match against an author's own work is highest,
rescaled to a 1-5 rating range. An item-based collaborative strategy and a
classification-style evaluation harness sit alongside the core engine.
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
