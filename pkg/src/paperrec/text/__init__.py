from .pipeline import Stoplist, remove_stopwords, stem, tokenize
from .vectors import DocVector, Vocabulary, build_vocabulary, cosine, document_tokens, vectorize

__all__ = [
    "Stoplist",
    "remove_stopwords",
    "stem",
    "tokenize",
    "DocVector",
    "Vocabulary",
    "build_vocabulary",
    "cosine",
    "document_tokens",
    "vectorize",
]
