"""Content-only interestingness ranking and sentiment for hashtag tweet corpora.

The pipeline: ingest tweets from JSONL and filter by hashtag, tokenize into
an indexed corpus, fit a topic model by collapsed Gibbs sampling, weigh each
topic by lexicon integrity minus document-spread entropy, score and rank
documents by their weighted topic mixture, and annotate each document with
a deterministic lexicon-based sentiment polarity.
"""

from .corpus import (BuildCounts, Document, PreprocessConfig, RawTweet, Vocabulary,
                     build_corpus, clean_text, extract_hashtags, filter_by_hashtags,
                     is_english, load_jsonl, load_stopwords, remove_stopwords)
from .errors import EmptyCorpusError, ParseError, TweetrankError, ValidationError
from .lda import (DocGivenTopic, GibbsState, LdaConfig, TopicModel, doc_given_topic,
                  gibbs_sweep, init_state, load_model, log_likelihood, save_model,
                  train, train_with_state)
from .lexicon import IntegrityLexicon, load_wordlist, membership
from .scoring import (NormalizationParams, ScoreConfig, ScoredTweet, TopicStats,
                      compute_topic_stats, document_scores, integrity, rank_corpus,
                      score_document, spatial_entropy, topic_weights, z_normalize)
from .sentiment import (Polarity, SentimentLexicon, classify, load_sentiment_lexicon,
                        polarity)
from .synthetic import generate_corpus, greedy_cosine_match

__version__ = "0.1.0"
