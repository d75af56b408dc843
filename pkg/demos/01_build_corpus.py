"""
Building an indexed corpus from raw tweets
==========================================

Load a JSONL batch of tweets, keep the ones carrying the event hashtags,
run the normalization pipeline, and inspect what survives.
"""

import os

from tweetrank import (PreprocessConfig, build_corpus, filter_by_hashtags,
                       load_jsonl, load_stopwords)

DATA = os.path.join(os.path.dirname(__file__), "..", "tests", "data")

tweets, skipped = load_jsonl(os.path.join(DATA, "tweets200.jsonl"))
print("loaded %d tweets (%d malformed lines skipped)" % (len(tweets), skipped))

# keep only the event hashtags, exactly as a crawler would have been scoped
event = filter_by_hashtags(tweets, {"iccwc", "cwc15"})
print("hashtag filter kept %d tweets" % len(event))

stopwords = load_stopwords(os.path.join(DATA, "stopwords.txt"))
config = PreprocessConfig()
documents, vocab, counts = build_corpus(event, config, stopwords)

print("dropped %d non-English and %d too-short tweets"
      % (counts.dropped_non_english, counts.dropped_short))
print("corpus: %d documents, %d distinct tokens" % (len(documents), len(vocab)))

print("\nfirst three documents, decoded back to words:")
for doc in documents[:3]:
    print("  %s: %s" % (doc.id, " ".join(vocab.id_to_token[t] for t in doc.tokens)))
