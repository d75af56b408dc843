"""
Sentiment polarity annotation
=============================

Each document gets a (positive, negative) pair summing to one, from
matched lexicon weights with add-one smoothing. No matches means exactly
(0.5, 0.5): neutral.
"""

import os
from collections import Counter

from tweetrank import (PreprocessConfig, build_corpus, classify, load_jsonl,
                       load_sentiment_lexicon, load_stopwords, polarity)

DATA = os.path.join(os.path.dirname(__file__), "..", "tests", "data")

tweets, _ = load_jsonl(os.path.join(DATA, "tweets200.jsonl"))
stopwords = load_stopwords(os.path.join(DATA, "stopwords.txt"))
documents, vocab, _ = build_corpus(tweets, PreprocessConfig(), stopwords)
lexicon = load_sentiment_lexicon(os.path.join(DATA, "sentiment.tsv"))

annotated = []
for doc in documents:
    tokens = [vocab.id_to_token[t] for t in doc.tokens]
    annotated.append((doc.id, polarity(tokens, lexicon)))

labels = Counter(classify(pol) for _, pol in annotated)
print("label distribution over %d documents: %s" % (len(annotated), dict(labels)))

text_by_id = {t.id: t.text for t in tweets}
by_signed = sorted(annotated, key=lambda item: item[1].signed)
print("\nmost negative:")
for doc_id, pol in by_signed[:3]:
    print("  (%.3f, %.3f)  %s" % (pol.positive, pol.negative,
                                  text_by_id[doc_id][:60]))
print("most positive:")
for doc_id, pol in by_signed[-3:]:
    print("  (%.3f, %.3f)  %s" % (pol.positive, pol.negative,
                                  text_by_id[doc_id][:60]))
