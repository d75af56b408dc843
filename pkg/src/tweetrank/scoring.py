"""Topic integrity, spatial entropy, weights, and document interestingness.

Per-topic quality is summarized by two measures: integrity (the expected
lexicon membership of the topic's words) and spatial entropy (the entropy
of the topic's distribution over documents, in nats). Both are z-normalized
across topics and their difference is the topic weight; a document's score
is its topic mixture weighted by those topic weights, and documents scoring
strictly above the threshold are flagged interesting.
"""

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .lda import doc_given_topic
from .lexicon import membership


@dataclass
class TopicStats:
    """Per-topic raw and normalized quality measures plus final weights."""

    integrity: np.ndarray
    entropy: np.ndarray
    integrity_norm: np.ndarray
    entropy_norm: np.ndarray
    weight: np.ndarray


@dataclass(frozen=True)
class NormalizationParams:
    mu: float
    sigma: float

    def __post_init__(self):
        if self.sigma < 0:
            raise ValidationError("sigma must be non-negative")


@dataclass(frozen=True)
class ScoredTweet:
    doc_id: str
    score: float
    interesting: bool
    rank: int


@dataclass(frozen=True)
class ScoreConfig:
    threshold: float = 1.0
    log_base: float = math.e

    def __post_init__(self):
        if not math.isfinite(self.threshold):
            raise ValidationError("threshold must be finite")
        if self.log_base != math.e:
            raise ValidationError("entropy is defined in nats; log_base is fixed to e")


def integrity(phi_row, lex, vocab):
    """Expected lexicon membership of a topic: sum_w p(w|t) * L(w)."""
    phi_row = np.asarray(phi_row, dtype=np.float64)
    if phi_row.shape[0] != len(vocab):
        raise ValidationError("phi row length %d does not match vocabulary size %d"
                              % (phi_row.shape[0], len(vocab)))
    mask = _membership_mask(lex, vocab)
    return float(phi_row @ mask)


def _membership_mask(lex, vocab):
    return np.fromiter((membership(lex, w) for w in vocab.id_to_token),
                       dtype=np.float64, count=len(vocab))


def spatial_entropy(p_column):
    """Entropy -sum_d p ln p of a distribution over documents, in nats.

    Uses the convention 0 * ln 0 = 0; the result lies in [0, ln D].
    """
    p = np.asarray(p_column, dtype=np.float64)
    if np.any(p < 0):
        raise ValidationError("p(d|t) entries must be non-negative")
    nz = p[p > 0]
    return float(-(nz * np.log(nz)).sum())


def z_normalize(x):
    """Center and scale by the population standard deviation.

    A constant vector (including length 1) has sigma = 0 and normalizes to
    all zeros by convention, with sigma recorded as 0.
    """
    x = np.asarray(x, dtype=np.float64)
    mu = float(x.mean())
    if np.all(x == x[0]):
        return np.zeros_like(x), NormalizationParams(mu=mu, sigma=0.0)
    sigma = float(x.std())
    if sigma == 0.0:
        return np.zeros_like(x), NormalizationParams(mu=mu, sigma=0.0)
    return (x - mu) / sigma, NormalizationParams(mu=mu, sigma=sigma)


def topic_weights(integrity_values, entropy_values):
    """Normalize both measures across topics and subtract entropy from integrity."""
    i_raw = np.asarray(integrity_values, dtype=np.float64)
    s_raw = np.asarray(entropy_values, dtype=np.float64)
    if i_raw.shape != s_raw.shape:
        raise ValidationError("integrity and entropy vectors differ in length")
    i_norm, _ = z_normalize(i_raw)
    s_norm, _ = z_normalize(s_raw)
    return TopicStats(integrity=i_raw, entropy=s_raw, integrity_norm=i_norm,
                      entropy_norm=s_norm, weight=i_norm - s_norm)


def compute_topic_stats(model, lex, vocab):
    """Full per-topic statistics for a fitted model against a lexicon."""
    if len(vocab) != model.vocab_size:
        raise ValidationError("vocabulary size %d does not match model (%d)"
                              % (len(vocab), model.vocab_size))
    integrity_vec = model.phi @ _membership_mask(lex, vocab)
    p_dt = doc_given_topic(model)
    entropy_vec = np.fromiter((spatial_entropy(row) for row in p_dt.p),
                              dtype=np.float64, count=p_dt.p.shape[0])
    return topic_weights(integrity_vec, entropy_vec)


def score_document(theta_row, weights):
    """Interestingness of one document: sum_k weights[k] * theta_row[k]."""
    theta_row = np.asarray(theta_row, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    if theta_row.shape != weights.shape:
        raise ValidationError("theta row and weights differ in length")
    return float(theta_row @ weights)


def document_scores(model, stats):
    """Scores for every document in model order (theta @ weights)."""
    return model.theta @ stats.weight


def rank_corpus(model, stats, config):
    """Score and rank all documents; ties broken by ascending doc id.

    The interesting flag is strict: a score exactly at the threshold does
    not qualify.
    """
    scores = document_scores(model, stats)
    order = sorted(range(len(model.doc_ids)),
                   key=lambda i: (-scores[i], model.doc_ids[i]))
    return [
        ScoredTweet(doc_id=model.doc_ids[i], score=float(scores[i]),
                    interesting=bool(scores[i] > config.threshold), rank=rank)
        for rank, i in enumerate(order, start=1)
    ]


def write_report_csv(scored, path):
    """Ranked report: rank,doc_id,score,interesting with scores at 6 decimals."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["rank", "doc_id", "score", "interesting"])
        for row in scored:
            writer.writerow([row.rank, row.doc_id, "%.6f" % row.score,
                             "true" if row.interesting else "false"])


def write_topic_stats_csv(stats, path):
    """Per-topic stats: topic,integrity,entropy,integrity_norm,entropy_norm,weight."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["topic", "integrity", "entropy", "integrity_norm",
                         "entropy_norm", "weight"])
        for t in range(stats.weight.shape[0]):
            writer.writerow([t, "%.6f" % stats.integrity[t], "%.6f" % stats.entropy[t],
                             "%.6f" % stats.integrity_norm[t],
                             "%.6f" % stats.entropy_norm[t], "%.6f" % stats.weight[t]])
