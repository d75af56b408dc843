"""Deterministic lexicon-based sentiment polarity.

Every document gets a (positive, negative) pair that sums to one. Matched
lexicon weights are accumulated with add-one smoothing on both sides, so a
document with no matches lands exactly on the neutral point (0.5, 0.5).
Both components are computed as raw/total, which makes swapping every
lexicon entry's weights swap the output pair exactly.
"""

import csv
import logging
import math
from collections import Counter
from dataclasses import dataclass, field

from .errors import ParseError, ValidationError

logger = logging.getLogger("tweetrank")


@dataclass
class SentimentLexicon:
    """Map from lowercase word to (positive weight, negative weight)."""

    entries: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class Polarity:
    positive: float
    negative: float

    def __post_init__(self):
        if not 0.0 <= self.positive <= 1.0 or not 0.0 <= self.negative <= 1.0:
            raise ValidationError("polarity components must lie in [0, 1]")
        if abs(self.positive + self.negative - 1.0) > 1e-9:
            raise ValidationError("polarity components must sum to 1")

    @property
    def signed(self):
        """Signed score positive - negative, in [-1, 1]."""
        return self.positive - self.negative


def load_sentiment_lexicon(path):
    """Parse a sentiment lexicon file with lines ``word<TAB>pos<TAB>neg``.

    Words are lowercased; on duplicates the last entry wins and the
    replacement count is logged. Blank lines are skipped. An empty file
    yields an empty lexicon (every document comes out neutral).

    Raises:
        ParseError: a non-blank line does not have the three fields or
            the weights are not numbers (message carries the line number).
        ValidationError: a weight is negative, not finite, or a word maps
            to (0, 0).
    """
    entries = {}
    replaced = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.rstrip("\n")
            if not stripped.strip():
                continue
            parts = stripped.split("\t")
            if len(parts) != 3:
                raise ParseError("line %d of %s: expected word<TAB>pos<TAB>neg"
                                 % (lineno, path))
            word = parts[0].strip().lower()
            try:
                pos, neg = float(parts[1]), float(parts[2])
            except ValueError as exc:
                raise ParseError("line %d of %s: weights must be numbers"
                                 % (lineno, path)) from exc
            if not word:
                raise ParseError("line %d of %s: empty word" % (lineno, path))
            if pos < 0 or neg < 0:
                raise ValidationError("line %d of %s: negative weight" % (lineno, path))
            if not (math.isfinite(pos) and math.isfinite(neg)):
                raise ValidationError("line %d of %s: weights must be finite"
                                      % (lineno, path))
            if pos == 0 and neg == 0:
                raise ValidationError("line %d of %s: word %r carries no weight"
                                      % (lineno, path, word))
            if word in entries:
                replaced += 1
            entries[word] = (pos, neg)
    if replaced:
        logger.info("sentiment lexicon %s: %d duplicate words replaced", path, replaced)
    return SentimentLexicon(entries=entries)


def polarity(tokens, lex):
    """Smoothed polarity of a token list against the lexicon.

    pos_raw = 1 + sum of matched positive weights (per occurrence), same
    for neg_raw; the pair is (pos_raw, neg_raw) / (pos_raw + neg_raw).
    Accumulation runs over the token multiset in sorted word order, so the
    result is exactly invariant under token permutation.
    """
    counts = Counter(t.lower() for t in tokens)
    pos_raw = 1.0
    neg_raw = 1.0
    for word in sorted(counts):
        entry = lex.entries.get(word)
        if entry is not None:
            pos_raw += entry[0] * counts[word]
            neg_raw += entry[1] * counts[word]
    total = pos_raw + neg_raw
    return Polarity(positive=pos_raw / total, negative=neg_raw / total)


def classify(p):
    """'positive', 'negative', or 'neutral' (components equal within 1e-9)."""
    if abs(p.positive - p.negative) <= 1e-9:
        return "neutral"
    return "positive" if p.positive > p.negative else "negative"


def write_sentiment_csv(doc_polarities, path):
    """Per-document CSV doc_id,positive,negative,signed,label at 6 decimals.

    `doc_polarities` is a sequence of (doc_id, Polarity) pairs.
    """
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["doc_id", "positive", "negative", "signed", "label"])
        for doc_id, pol in doc_polarities:
            writer.writerow([doc_id, "%.6f" % pol.positive, "%.6f" % pol.negative,
                             "%.6f" % pol.signed, classify(pol)])
