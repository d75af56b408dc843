"""
Weighing topics and ranking tweets
==================================

A topic earns weight when its words are real dictionary words (high
integrity) and when it concentrates on few documents (low spatial
entropy). Documents mixing high-weight topics score high; anything
strictly above the threshold is flagged interesting.
"""

import os

from tweetrank import (LdaConfig, PreprocessConfig, ScoreConfig, build_corpus,
                       compute_topic_stats, load_jsonl, load_stopwords,
                       load_wordlist, rank_corpus, train)

DATA = os.path.join(os.path.dirname(__file__), "..", "tests", "data")

tweets, _ = load_jsonl(os.path.join(DATA, "tweets200.jsonl"))
stopwords = load_stopwords(os.path.join(DATA, "stopwords.txt"))
documents, vocab, _ = build_corpus(tweets, PreprocessConfig(), stopwords)
model = train(documents, LdaConfig(k=6, sweeps=500, seed=42),
              vocab_size=len(vocab))

lexicon = load_wordlist(os.path.join(DATA, "wordlist.txt"))
stats = compute_topic_stats(model, lexicon, vocab)

print("topic  integrity  entropy  weight")
for t in range(len(stats.weight)):
    print("%5d  %9.4f  %7.4f  %+.4f"
          % (t, stats.integrity[t], stats.entropy[t], stats.weight[t]))

ranked = rank_corpus(model, stats, ScoreConfig(threshold=1.0))
text_by_id = {t.id: t.text for t in tweets}

print("\ntop five tweets by interestingness:")
for row in ranked[:5]:
    print("  %+.4f  %s" % (row.score, text_by_id[row.doc_id][:70]))
print("\nbottom three:")
for row in ranked[-3:]:
    print("  %+.4f  %s" % (row.score, text_by_id[row.doc_id][:70]))
print("\n%d of %d documents flagged interesting (score > 1)"
      % (sum(r.interesting for r in ranked), len(ranked)))
