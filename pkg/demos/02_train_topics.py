"""
Fitting the topic model
=======================

Train the collapsed Gibbs sampler on the demo corpus and look at what the
topics learned. Training is fully deterministic: the same corpus, config,
and seed always produce the same model, bit for bit.
"""

import os

import numpy as np

from tweetrank import (LdaConfig, PreprocessConfig, build_corpus, load_jsonl,
                       load_stopwords, train)

DATA = os.path.join(os.path.dirname(__file__), "..", "tests", "data")

tweets, _ = load_jsonl(os.path.join(DATA, "tweets200.jsonl"))
stopwords = load_stopwords(os.path.join(DATA, "stopwords.txt"))
documents, vocab, _ = build_corpus(tweets, PreprocessConfig(), stopwords)

config = LdaConfig(k=6, alpha=0.01, beta=0.01, sweeps=500, seed=42)
model = train(documents, config, vocab_size=len(vocab))

print("fitted %d topics over %d documents and %d word types\n"
      % (config.k, len(documents), len(vocab)))
for k in range(config.k):
    top = np.argsort(model.phi[k])[::-1][:8]
    words = " ".join(vocab.id_to_token[w] for w in top)
    print("topic %d: %s" % (k, words))

# every row of phi and theta is a probability distribution
assert np.allclose(model.phi.sum(axis=1), 1.0)
assert np.allclose(model.theta.sum(axis=1), 1.0)
print("\nphi and theta rows all sum to one, as they must")
