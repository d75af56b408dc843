"""Synthetic corpora drawn from known topic distributions.

Used to evaluate topic recovery: generate documents from ground-truth phi
and theta, fit a model, and compare fitted topics to the truth.
"""

import numpy as np

from .corpus import Document
from .errors import ValidationError


def generate_corpus(n_topics, vocab_size, n_docs, tokens_per_doc,
                    alpha=0.01, beta=0.01, seed=0, poisson_lengths=False):
    """Sample a corpus from the generative model itself.

    Draws per-topic word distributions from Dirichlet(beta), per-document
    topic distributions from Dirichlet(alpha), then samples each document's
    tokens. With poisson_lengths the per-document length is Poisson with
    mean tokens_per_doc (floored at 1); otherwise every document has
    exactly tokens_per_doc tokens. Within a document, tokens are grouped
    by their generating topic - irrelevant to a bag-of-words model.

    Returns:
        (documents, true_phi, true_theta)
    """
    if n_topics < 1 or vocab_size < 2 or n_docs < 1 or tokens_per_doc < 1:
        raise ValidationError("synthetic corpus dimensions must be positive")
    rng = np.random.default_rng(seed)
    true_phi = rng.dirichlet(np.full(vocab_size, beta), size=n_topics)
    true_theta = rng.dirichlet(np.full(n_topics, alpha), size=n_docs)
    cum_phi = np.cumsum(true_phi, axis=1)

    width = len(str(n_docs - 1))
    documents = []
    for d in range(n_docs):
        if poisson_lengths:
            length = max(1, int(rng.poisson(tokens_per_doc)))
        else:
            length = tokens_per_doc
        per_topic = rng.multinomial(length, true_theta[d])
        tokens = []
        for k in range(n_topics):
            if per_topic[k] == 0:
                continue
            draws = np.searchsorted(cum_phi[k], rng.random(per_topic[k]))
            tokens.extend(int(w) for w in np.minimum(draws, vocab_size - 1))
        documents.append(Document(id="d%0*d" % (width, d), tokens=tokens))
    return documents, true_phi, true_theta


def greedy_cosine_match(rows_a, rows_b):
    """Greedily pair rows of two matrices by descending cosine similarity.

    Returns a list of (row_a index, row_b index, cosine) triples, one per
    pair, in the order the greedy matcher selected them.
    """
    a = np.asarray(rows_a, dtype=np.float64)
    b = np.asarray(rows_b, dtype=np.float64)
    a = a / np.linalg.norm(a, axis=1, keepdims=True)
    b = b / np.linalg.norm(b, axis=1, keepdims=True)
    sim = a @ b.T
    open_sim = sim.copy()
    matches = []
    for _ in range(min(sim.shape)):
        i, j = np.unravel_index(np.argmax(open_sim), open_sim.shape)
        matches.append((int(i), int(j), float(sim[i, j])))
        open_sim[i, :] = -np.inf
        open_sim[:, j] = -np.inf
    return matches
