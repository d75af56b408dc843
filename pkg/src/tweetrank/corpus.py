"""Tweet ingestion, hashtag filtering, tokenization, and corpus building."""

import json
import logging
import re
from dataclasses import dataclass, field

from .errors import EmptyCorpusError, ValidationError

logger = logging.getLogger("tweetrank")

_HASHTAG_RE = re.compile(r"#(\w+)")
_NON_TOKEN_CHARS = re.compile(r"[^a-z0-9']")


@dataclass
class RawTweet:
    """One ingested tweet record, prior to any text processing."""

    id: str
    text: str
    hashtags: list = field(default_factory=list)
    timestamp: int | None = None

    def __post_init__(self):
        if not self.id:
            raise ValidationError("tweet id must be non-empty")
        if any(c in self.id for c in "\t\n\r"):
            raise ValidationError("tweet id %r contains control characters" % self.id)
        for tag in self.hashtags:
            if not tag or "#" in tag or any(c.isspace() for c in tag):
                raise ValidationError(
                    "hashtag %r of tweet %s must be a non-empty word without '#'"
                    % (tag, self.id)
                )


@dataclass
class Document:
    """A tweet mapped to vocabulary token ids."""

    id: str
    tokens: list


@dataclass
class Vocabulary:
    """Bijective token <-> dense id mapping; ids run 0..V-1."""

    token_to_id: dict = field(default_factory=dict)
    id_to_token: list = field(default_factory=list)

    def __len__(self):
        return len(self.id_to_token)

    def add(self, token):
        """Return the id of `token`, assigning the next free id on first sight."""
        tid = self.token_to_id.get(token)
        if tid is None:
            tid = len(self.id_to_token)
            self.token_to_id[token] = tid
            self.id_to_token.append(token)
        return tid


@dataclass(frozen=True)
class PreprocessConfig:
    stopword_path: str | None = None
    min_tokens: int = 3
    min_ascii_ratio: float = 0.9
    keep_hashtag_tokens: bool = True
    lowercase: bool = True

    def __post_init__(self):
        if self.min_tokens < 1:
            raise ValidationError("min_tokens must be >= 1")
        if not 0.0 <= self.min_ascii_ratio <= 1.0:
            raise ValidationError("min_ascii_ratio must lie in [0, 1]")


@dataclass
class BuildCounts:
    """Per-category drop counters accumulated by build_corpus."""

    kept: int = 0
    dropped_non_english: int = 0
    dropped_short: int = 0


def extract_hashtags(text):
    """Pull '#word' tags out of raw text, lowercased, without the '#'."""
    return [m.lower() for m in _HASHTAG_RE.findall(text)]


def load_jsonl(path):
    """Read one tweet record per line from a UTF-8 JSONL file.

    Each line must be a JSON object with at least string fields ``id`` and
    ``text``; optional ``hashtags`` (list of words, '#' prefixes tolerated
    and stripped) and integer ``timestamp``. Records missing hashtags get
    them extracted from '#word' patterns in the text. Malformed lines are
    skipped and counted; a duplicate id aborts the load.

    Returns:
        (tweets, skipped): list of RawTweet in file order, and the number
        of malformed lines that were skipped.
    """
    tweets = []
    skipped = 0
    seen_ids = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            record = _parse_record(line)
            if record is None:
                skipped += 1
                logger.debug("skipping malformed line %d of %s", lineno, path)
                continue
            if record.id in seen_ids:
                raise ValidationError(
                    "duplicate tweet id %r at line %d of %s" % (record.id, lineno, path)
                )
            seen_ids.add(record.id)
            tweets.append(record)
    logger.info("loaded %d tweets from %s (%d malformed lines skipped)",
                len(tweets), path, skipped)
    return tweets, skipped


def _parse_record(line):
    """Turn one JSONL line into a RawTweet, or None if the line is malformed."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError:
        return None
    if not isinstance(obj, dict):
        return None

    raw_id = obj.get("id")
    if isinstance(raw_id, int) and not isinstance(raw_id, bool):
        raw_id = str(raw_id)
    text = obj.get("text")
    if not isinstance(raw_id, str) or not isinstance(text, str):
        return None

    if "hashtags" in obj and obj["hashtags"] is not None:
        raw_tags = obj["hashtags"]
        if not isinstance(raw_tags, list) or not all(isinstance(t, str) for t in raw_tags):
            return None
        hashtags = [t.lstrip("#").lower() for t in raw_tags]
    else:
        hashtags = extract_hashtags(text)

    timestamp = obj.get("timestamp")
    if timestamp is not None and (not isinstance(timestamp, int) or isinstance(timestamp, bool)):
        return None

    try:
        return RawTweet(id=raw_id, text=text, hashtags=hashtags, timestamp=timestamp)
    except ValidationError:
        return None


def filter_by_hashtags(tweets, tags):
    """Keep tweets whose hashtags intersect `tags`; an empty set keeps all."""
    if not tags:
        return list(tweets)
    return [t for t in tweets if set(t.hashtags) & tags]


def clean_text(text, config):
    """Tokenize raw tweet text through the fixed normalization pipeline.

    In order: lowercase (if configured), drop URL tokens (http://, https://,
    www. prefixes), drop @-mentions, strip leading '#' from hashtag tokens
    (or drop them entirely when keep_hashtag_tokens is off), replace every
    character outside [a-z0-9'] with a space, split on whitespace, and drop
    tokens shorter than two characters.
    """
    if config.lowercase:
        text = text.lower()
    kept = []
    for token in text.split():
        if token.startswith(("http://", "https://", "www.")):
            continue
        if token.startswith("@"):
            continue
        if token.startswith("#"):
            if not config.keep_hashtag_tokens:
                continue
            token = token.lstrip("#")
        kept.append(token)
    flattened = _NON_TOKEN_CHARS.sub(" ", " ".join(kept))
    return [t for t in flattened.split() if len(t) >= 2]


def is_english(text, config):
    """ASCII-ratio heuristic over the raw (pre-cleaning) text.

    True iff at least `min_ascii_ratio` of the characters are ASCII.
    Empty text is never English.
    """
    if not text:
        return False
    ascii_chars = sum(1 for c in text if ord(c) < 128)
    return ascii_chars / len(text) >= config.min_ascii_ratio


def remove_stopwords(tokens, stopwords):
    """Order-preserving removal of exact stopword matches."""
    return [t for t in tokens if t not in stopwords]


def load_stopwords(path):
    """Read a stopword file: one lowercase word per line, '#' comments ignored."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip()
            if word and not word.startswith("#"):
                words.add(word.lower())
    return words


def build_corpus(tweets, config, stopwords):
    """Run the full preprocessing pipeline and index the surviving tweets.

    Applies clean_text, the English heuristic (on the raw text), and
    stopword removal per tweet, drops documents shorter than
    config.min_tokens, and assigns vocabulary ids in first-appearance
    order over the kept documents.

    Returns:
        (documents, vocabulary, counts): documents in input order, the
        shared Vocabulary, and BuildCounts with per-category drop tallies.

    Raises:
        EmptyCorpusError: every tweet was dropped.
    """
    seen_ids = set()
    documents = []
    vocab = Vocabulary()
    counts = BuildCounts()
    for tweet in tweets:
        if tweet.id in seen_ids:
            raise ValidationError("duplicate tweet id %r in corpus input" % tweet.id)
        seen_ids.add(tweet.id)

        tokens = clean_text(tweet.text, config)
        if not is_english(tweet.text, config):
            counts.dropped_non_english += 1
            continue
        tokens = remove_stopwords(tokens, stopwords)
        if len(tokens) < config.min_tokens:
            counts.dropped_short += 1
            continue
        documents.append(Document(id=tweet.id, tokens=[vocab.add(t) for t in tokens]))
        counts.kept += 1
    if not documents:
        raise EmptyCorpusError(
            "empty corpus: all %d tweets dropped (%d non-English, %d too short)"
            % (len(tweets), counts.dropped_non_english, counts.dropped_short)
        )
    return documents, vocab, counts


def write_corpus_file(documents, path, timestamps=None):
    """Persist documents as TSV lines ``id<TAB>timestamp<TAB>token ids``.

    The timestamp field is left empty for documents without one;
    `timestamps` maps document id to an integer timestamp.
    """
    timestamps = timestamps or {}
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for doc in documents:
            ts = timestamps.get(doc.id)
            fh.write("%s\t%s\t%s\n" % (
                doc.id,
                "" if ts is None else ts,
                " ".join(str(t) for t in doc.tokens),
            ))


def read_corpus_file(path):
    """Inverse of write_corpus_file; returns (documents, timestamps dict)."""
    documents = []
    timestamps = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 3 or not parts[0]:
                raise ValidationError("bad corpus line %d in %s" % (lineno, path))
            doc_id, ts, token_field = parts
            try:
                if ts:
                    timestamps[doc_id] = int(ts)
                tokens = [int(t) for t in token_field.split()] if token_field else []
            except ValueError as exc:
                raise ValidationError("bad corpus line %d in %s: %s"
                                      % (lineno, path, exc)) from exc
            documents.append(Document(id=doc_id, tokens=tokens))
    return documents, timestamps


def write_vocab_file(vocab, path):
    """Persist the vocabulary, one token per line, line number == id."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for token in vocab.id_to_token:
            fh.write(token + "\n")


def read_vocab_file(path):
    """Inverse of write_vocab_file."""
    vocab = Vocabulary()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            vocab.add(line.rstrip("\n"))
    return vocab
