"""Bootstrapping relation extraction.

Thin Python layer over the C++ core. ``bootstrap`` runs the loop in memory;
``run`` writes a run directory the same way ``brex run`` does.
"""

from ._brex import (
    EmbeddingStore,
    InputError,
    UsageError,
    __version__,
    bootstrap,
    combine_confidences,
    confidence_from_counts,
    load_embeddings,
    main,
    run,
    template_similarity,
)

__all__ = [
    "EmbeddingStore",
    "InputError",
    "UsageError",
    "__version__",
    "bootstrap",
    "combine_confidences",
    "confidence_from_counts",
    "load_embeddings",
    "main",
    "run",
    "template_similarity",
]
