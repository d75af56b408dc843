"""
Checking the sampler against planted topics
===========================================

Generate a corpus from known topic distributions, fit the model, and
measure how well the fitted topics match the planted ones. Greedy cosine
matching pairs each fitted topic with its closest ground-truth row.
"""

from tweetrank import LdaConfig, generate_corpus, greedy_cosine_match, train

documents, true_phi, true_theta = generate_corpus(
    n_topics=3, vocab_size=60, n_docs=300, tokens_per_doc=40,
    alpha=0.01, beta=0.01, seed=7)
print("generated %d documents, %d tokens total"
      % (len(documents), sum(len(d.tokens) for d in documents)))

model = train(documents, LdaConfig(k=3, alpha=0.01, beta=0.01,
                                   sweeps=1000, seed=7), vocab_size=60)

print("\nfitted topic -> true topic matches:")
for fitted, truth, cosine in greedy_cosine_match(model.phi, true_phi):
    print("  topic %d -> planted %d  cosine %.4f" % (fitted, truth, cosine))
