"""Command-line pipeline: preprocess, train, score, sentiment, pipeline.

Every stage reads and writes plain files so runs can be resumed, diffed,
and reproduced. Artifact names under the output directory are fixed:

    corpus.tsv            doc_id <TAB> timestamp <TAB> space-separated token ids
    vocab.txt             one token per line, line number == token id
    model.bin             binary topic model (see lda.save_model)
    report.csv            rank,doc_id,score,interesting
    topic_stats.csv       topic,integrity,entropy,integrity_norm,entropy_norm,weight
    score_series.csv      index,score (documents in corpus order)
    sentiment.csv         doc_id,positive,negative,signed,label
    positive_series.csv   index[,timestamp],positive
    negative_series.csv   index[,timestamp],negative
    manifest.json         config echo, seed, sha256 of every artifact (pipeline only)

Exit codes: 0 success, 1 data or validation failure, 2 usage error.
"""

import argparse
import csv
import dataclasses
import hashlib
import json
import os
import sys
import time

from . import corpus as corpus_mod
from .corpus import PreprocessConfig, build_corpus, filter_by_hashtags, load_jsonl
from .errors import TweetrankError
from .lda import LdaConfig, load_model, log_likelihood, save_model, train_with_state
from .lexicon import load_wordlist
from .scoring import (ScoreConfig, compute_topic_stats, document_scores,
                      rank_corpus, write_report_csv, write_topic_stats_csv)
from .sentiment import load_sentiment_lexicon, polarity, write_sentiment_csv


@dataclasses.dataclass
class PipelineConfig:
    """Everything a full pipeline run depends on; echoed into the manifest."""

    input_path: str
    hashtags: list
    preprocess: PreprocessConfig
    lda: LdaConfig
    score: ScoreConfig
    lexicon_path: str
    sentiment_lexicon_path: str
    stopword_path: str | None
    output_dir: str


def _parse_hashtags(raw):
    return {t.strip().lstrip("#").lower() for t in raw.split(",") if t.strip()}


def run_preprocess(input_path, hashtags, pconfig, output_dir):
    """Load, filter, and tokenize tweets; write corpus.tsv and vocab.txt."""
    tweets, skipped = load_jsonl(input_path)
    print("loaded %d tweets, skipped %d malformed lines" % (len(tweets), skipped))
    if hashtags:
        tweets = filter_by_hashtags(tweets, set(hashtags))
        print("hashtag filter (%s) kept %d tweets" % (",".join(sorted(hashtags)), len(tweets)))
    stopwords = (corpus_mod.load_stopwords(pconfig.stopword_path)
                 if pconfig.stopword_path else set())
    documents, vocab, counts = build_corpus(tweets, pconfig, stopwords)
    print("dropped %d non-English, %d too short; kept %d documents, vocabulary %d"
          % (counts.dropped_non_english, counts.dropped_short, counts.kept, len(vocab)))
    os.makedirs(output_dir, exist_ok=True)
    timestamps = {t.id: t.timestamp for t in tweets if t.timestamp is not None}
    corpus_mod.write_corpus_file(documents, os.path.join(output_dir, "corpus.tsv"),
                                 timestamps=timestamps)
    corpus_mod.write_vocab_file(vocab, os.path.join(output_dir, "vocab.txt"))


def run_train(corpus_path, vocab_path, lconfig, output_dir):
    """Fit the topic model on a persisted corpus and write model.bin."""
    documents, _ = corpus_mod.read_corpus_file(corpus_path)
    vocab_size = None
    if vocab_path:
        vocab_size = len(corpus_mod.read_vocab_file(vocab_path))
    started = time.perf_counter()
    model, state = train_with_state(documents, lconfig, vocab_size)
    elapsed = time.perf_counter() - started
    final_ll = log_likelihood(state, documents, lconfig)
    os.makedirs(output_dir, exist_ok=True)
    save_model(model, os.path.join(output_dir, "model.bin"))
    print("trained k=%d on %d documents in %.2f s; final log-likelihood %.4f"
          % (lconfig.k, len(documents), elapsed, final_ll))


def run_score(model_path, vocab_path, lexicon_path, sconfig, output_dir):
    """Rank documents by interestingness; write the three report CSVs."""
    model = load_model(model_path)
    vocab = corpus_mod.read_vocab_file(vocab_path)
    lex = load_wordlist(lexicon_path)
    stats = compute_topic_stats(model, lex, vocab)
    scored = rank_corpus(model, stats, sconfig)
    os.makedirs(output_dir, exist_ok=True)
    write_report_csv(scored, os.path.join(output_dir, "report.csv"))
    write_topic_stats_csv(stats, os.path.join(output_dir, "topic_stats.csv"))
    scores = document_scores(model, stats)
    with open(os.path.join(output_dir, "score_series.csv"), "w",
              encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["index", "score"])
        for i, score in enumerate(scores):
            writer.writerow([i, "%.6f" % score])
    interesting = sum(1 for s in scored if s.interesting)
    print("scored %d documents; %d interesting (score > %g)"
          % (len(scored), interesting, sconfig.threshold))


def run_sentiment(corpus_path, vocab_path, sentiment_lexicon_path, output_dir):
    """Annotate every document with polarity; write the sentiment CSVs."""
    documents, timestamps = corpus_mod.read_corpus_file(corpus_path)
    vocab = corpus_mod.read_vocab_file(vocab_path)
    lex = load_sentiment_lexicon(sentiment_lexicon_path)
    doc_polarities = []
    for doc in documents:
        tokens = [vocab.id_to_token[t] for t in doc.tokens]
        doc_polarities.append((doc.id, polarity(tokens, lex)))
    os.makedirs(output_dir, exist_ok=True)
    write_sentiment_csv(doc_polarities, os.path.join(output_dir, "sentiment.csv"))
    with_ts = all(doc.id in timestamps for doc in documents)
    for name, component in (("positive_series.csv", "positive"),
                            ("negative_series.csv", "negative")):
        with open(os.path.join(output_dir, name), "w", encoding="utf-8",
                  newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            header = ["index", "timestamp", component] if with_ts else ["index", component]
            writer.writerow(header)
            for i, (doc, (_, pol)) in enumerate(zip(documents, doc_polarities)):
                value = "%.6f" % getattr(pol, component)
                row = [i, timestamps[doc.id], value] if with_ts else [i, value]
                writer.writerow(row)
    print("annotated %d documents with sentiment" % len(documents))


_PIPELINE_ARTIFACTS = [
    "corpus.tsv", "vocab.txt", "model.bin", "report.csv", "topic_stats.csv",
    "score_series.csv", "sentiment.csv", "positive_series.csv",
    "negative_series.csv",
]


def run_pipeline(config):
    """Run all four stages in sequence and write the run manifest."""
    out = config.output_dir
    run_preprocess(config.input_path, config.hashtags, config.preprocess, out)
    run_train(os.path.join(out, "corpus.tsv"), os.path.join(out, "vocab.txt"),
              config.lda, out)
    run_score(os.path.join(out, "model.bin"), os.path.join(out, "vocab.txt"),
              config.lexicon_path, config.score, out)
    run_sentiment(os.path.join(out, "corpus.tsv"), os.path.join(out, "vocab.txt"),
                  config.sentiment_lexicon_path, out)

    hashes = {}
    for name in _PIPELINE_ARTIFACTS:
        with open(os.path.join(out, name), "rb") as fh:
            hashes[name] = hashlib.sha256(fh.read()).hexdigest()
    manifest = {
        "config": dataclasses.asdict(config),
        "seed": config.lda.seed,
        "outputs": hashes,
    }
    with open(os.path.join(out, "manifest.json"), "w", encoding="utf-8",
              newline="") as fh:
        json.dump(manifest, fh, sort_keys=True, indent=2)
        fh.write("\n")
    print("pipeline complete; %d artifacts in %s" % (len(_PIPELINE_ARTIFACTS) + 1, out))


def _add_preprocess_flags(p):
    p.add_argument("--input", required=True, help="input JSONL file of tweets")
    p.add_argument("--hashtags", default="",
                   help="comma-separated hashtags to keep (empty keeps all)")
    p.add_argument("--stopwords", default=None, help="stopword file, one word per line")
    p.add_argument("--min-tokens", type=int, default=3)
    p.add_argument("--min-ascii-ratio", type=float, default=0.9)
    p.add_argument("--drop-hashtag-tokens", action="store_true",
                   help="delete hashtag tokens instead of keeping them as words")
    p.add_argument("--no-lowercase", action="store_true")


def _add_train_flags(p):
    p.add_argument("--k", type=int, default=15, help="number of topics")
    p.add_argument("--alpha", type=float, default=0.01)
    p.add_argument("--beta", type=float, default=0.01)
    p.add_argument("--sweeps", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)


def _preprocess_config(args):
    return PreprocessConfig(stopword_path=args.stopwords, min_tokens=args.min_tokens,
                            min_ascii_ratio=args.min_ascii_ratio,
                            keep_hashtag_tokens=not args.drop_hashtag_tokens,
                            lowercase=not args.no_lowercase)


def _lda_config(args):
    return LdaConfig(k=args.k, alpha=args.alpha, beta=args.beta,
                     sweeps=args.sweeps, seed=args.seed)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tweetrank",
        description="Rank hashtag-filtered tweets by content interestingness "
                    "and annotate sentiment polarity.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("preprocess", help="tokenize tweets into a corpus")
    _add_preprocess_flags(p)
    p.add_argument("--output-dir", required=True)
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("train", help="fit the topic model")
    p.add_argument("--corpus", required=True, help="corpus.tsv from preprocess")
    p.add_argument("--vocab", default=None, help="vocab.txt (fixes vocabulary size)")
    _add_train_flags(p)
    p.add_argument("--output-dir", required=True)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("score", help="rank documents by interestingness")
    p.add_argument("--model", required=True)
    p.add_argument("--vocab", required=True)
    p.add_argument("--lexicon", required=True, help="wordlist backing topic integrity")
    p.add_argument("--threshold", type=float, default=1.0)
    p.add_argument("--output-dir", required=True)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("sentiment", help="annotate documents with polarity")
    p.add_argument("--corpus", required=True)
    p.add_argument("--vocab", required=True)
    p.add_argument("--sentiment-lexicon", required=True)
    p.add_argument("--output-dir", required=True)
    p.set_defaults(func=cmd_sentiment)

    p = sub.add_parser("pipeline", help="run preprocess, train, score, sentiment")
    _add_preprocess_flags(p)
    _add_train_flags(p)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--sentiment-lexicon", required=True)
    p.add_argument("--threshold", type=float, default=1.0)
    p.add_argument("--output-dir", required=True)
    p.set_defaults(func=cmd_pipeline)
    return parser


def cmd_preprocess(args):
    run_preprocess(args.input, _parse_hashtags(args.hashtags),
                   _preprocess_config(args), args.output_dir)
    return 0


def cmd_train(args):
    run_train(args.corpus, args.vocab, _lda_config(args), args.output_dir)
    return 0


def cmd_score(args):
    run_score(args.model, args.vocab, args.lexicon,
              ScoreConfig(threshold=args.threshold), args.output_dir)
    return 0


def cmd_sentiment(args):
    run_sentiment(args.corpus, args.vocab, args.sentiment_lexicon, args.output_dir)
    return 0


def cmd_pipeline(args):
    config = PipelineConfig(
        input_path=args.input,
        hashtags=sorted(_parse_hashtags(args.hashtags)),
        preprocess=_preprocess_config(args),
        lda=_lda_config(args),
        score=ScoreConfig(threshold=args.threshold),
        lexicon_path=args.lexicon,
        sentiment_lexicon_path=args.sentiment_lexicon,
        stopword_path=args.stopwords,
        output_dir=args.output_dir,
    )
    run_pipeline(config)
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TweetrankError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
