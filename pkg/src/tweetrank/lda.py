"""Topic model fit by collapsed Gibbs sampling.

The model is the usual smoothed mixture: each document draws a topic
distribution theta from a symmetric Dirichlet(alpha), each topic draws a
word distribution phi from a symmetric Dirichlet(beta), and every token
draws a topic then a word. Inference integrates theta and phi out and
resamples each token's topic from

    p(z=k | rest)  propto  (n_dk + alpha) * (n_kw + beta) / (n_k + V*beta)

Determinism contract: all randomness comes from uniform doubles drawn from
a numpy PCG64 generator seeded with config.seed. Initialization consumes
one draw per token (topic = floor(u * K)); every sweep consumes one draw
per token, visiting documents in order and tokens in order. The sampling
kernel is plain arithmetic over those pre-drawn uniforms, so a fitted
model is bit-for-bit reproducible from (corpus, config) - with or without
the optional numba JIT.
"""

import json
import struct
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import ParseError, ValidationError

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    njit = None

_MAGIC = b"TWRKLDA1"


@dataclass(frozen=True)
class LdaConfig:
    k: int = 15
    alpha: float = 0.01
    beta: float = 0.01
    sweeps: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.k < 1:
            raise ValidationError("topic count k must be >= 1")
        if self.alpha <= 0 or self.beta <= 0:
            raise ValidationError("alpha and beta must be positive")
        if self.sweeps < 1:
            raise ValidationError("sweeps must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValidationError("seed must be an unsigned 64-bit integer")


@dataclass
class GibbsState:
    """Mutable sampler state: assignments, count matrices, and the generator."""

    z: np.ndarray        # int32, one topic per token occurrence
    n_dk: np.ndarray     # D x K, tokens of document d assigned topic k
    n_kw: np.ndarray     # K x V, occurrences of word w assigned topic k
    n_k: np.ndarray      # K, total tokens assigned topic k
    rng: np.random.Generator


@dataclass
class TopicModel:
    """Fitted artifacts: phi rows are topics, theta rows are documents."""

    phi: np.ndarray
    theta: np.ndarray
    config: LdaConfig
    vocab_size: int
    doc_ids: list

    def __post_init__(self):
        _check_row_stochastic(self.phi, "phi")
        _check_row_stochastic(self.theta, "theta")
        if self.phi.shape != (self.config.k, self.vocab_size):
            raise ValidationError("phi shape %s does not match (k, vocab_size)"
                                  % (self.phi.shape,))
        if self.theta.shape != (len(self.doc_ids), self.config.k):
            raise ValidationError("theta shape %s does not match (docs, k)"
                                  % (self.theta.shape,))


@dataclass
class DocGivenTopic:
    """K x D matrix; row t is the distribution p(d|t) over documents."""

    p: np.ndarray

    def __post_init__(self):
        _check_row_stochastic(self.p, "p(d|t)")


def _check_row_stochastic(matrix, name):
    if np.any(matrix < 0):
        raise ValidationError("%s has negative entries" % name)
    if not np.allclose(matrix.sum(axis=1), 1.0, rtol=0.0, atol=1e-9):
        raise ValidationError("%s rows do not sum to 1 within 1e-9" % name)


def _sweep_kernel(z, words, doc_of, n_dk, n_kw, n_k, alpha, beta, u):
    """Resample every token once, consuming u[i] for token i."""
    k_count = n_k.shape[0]
    vbeta = n_kw.shape[1] * beta
    for i in range(words.shape[0]):
        d = doc_of[i]
        w = words[i]
        k = z[i]
        n_dk[d, k] -= 1
        n_kw[k, w] -= 1
        n_k[k] -= 1
        total = 0.0
        for t in range(k_count):
            total += (n_dk[d, t] + alpha) * (n_kw[t, w] + beta) / (n_k[t] + vbeta)
        r = u[i] * total
        k_new = k_count - 1
        acc = 0.0
        for t in range(k_count):
            acc += (n_dk[d, t] + alpha) * (n_kw[t, w] + beta) / (n_k[t] + vbeta)
            if r < acc:
                k_new = t
                break
        z[i] = k_new
        n_dk[d, k_new] += 1
        n_kw[k_new, w] += 1
        n_k[k_new] += 1


if njit is not None:
    _sweep_compiled = njit(cache=True)(_sweep_kernel)
else:  # pragma: no cover
    _sweep_compiled = _sweep_kernel


def _encode(corpus):
    """Flatten the corpus into parallel (word id, document index) arrays."""
    lens = np.fromiter((len(d.tokens) for d in corpus), dtype=np.int64,
                       count=len(corpus))
    total = int(lens.sum())
    words = np.fromiter((t for d in corpus for t in d.tokens), dtype=np.int32,
                        count=total)
    doc_of = np.repeat(np.arange(len(corpus), dtype=np.int32), lens)
    return words, doc_of


def init_state(corpus, config, vocab_size=None):
    """Assign every token a uniformly random topic and tally the counts.

    vocab_size defaults to the largest token id plus one; pass it
    explicitly when the vocabulary has words the corpus never uses.
    """
    if not corpus:
        raise ValidationError("cannot initialize on an empty corpus")
    for doc in corpus:
        if not doc.tokens:
            raise ValidationError("document %r has no tokens" % doc.id)
    words, doc_of = _encode(corpus)
    if words.min() < 0:
        raise ValidationError("negative token id in corpus")
    observed_v = int(words.max()) + 1
    if vocab_size is None:
        vocab_size = observed_v
    elif vocab_size < observed_v:
        raise ValidationError("vocab_size %d is smaller than largest token id"
                              % vocab_size)

    rng = np.random.Generator(np.random.PCG64(config.seed))
    u = rng.random(words.shape[0])
    z = np.minimum((u * config.k).astype(np.int64), config.k - 1).astype(np.int32)

    n_dk = np.zeros((len(corpus), config.k), dtype=np.int32)
    n_kw = np.zeros((config.k, vocab_size), dtype=np.int32)
    np.add.at(n_dk, (doc_of, z), 1)
    np.add.at(n_kw, (z, words), 1)
    n_k = np.bincount(z, minlength=config.k).astype(np.int64)
    return GibbsState(z=z, n_dk=n_dk, n_kw=n_kw, n_k=n_k, rng=rng)


def gibbs_sweep(state, corpus, config):
    """Resample every token once, in document order then token order.

    Mutates `state` in place and returns it; consumes exactly one uniform
    draw per token from the state's generator.
    """
    words, doc_of = _encode(corpus)
    _sweep_encoded(state, words, doc_of, config)
    return state


def _sweep_encoded(state, words, doc_of, config):
    u = state.rng.random(words.shape[0])
    _sweep_compiled(state.z, words, doc_of, state.n_dk, state.n_kw, state.n_k,
                    float(config.alpha), float(config.beta), u)


def train(corpus, config, vocab_size=None):
    """Run init_state plus config.sweeps sweeps and estimate the model.

    Point estimates come from the final state:
        phi[k][w]   = (n_kw + beta)  / (n_k + V*beta)
        theta[d][k] = (n_dk + alpha) / (len_d + K*alpha)
    """
    model, _ = train_with_state(corpus, config, vocab_size)
    return model


def train_with_state(corpus, config, vocab_size=None):
    """Like train, but also returns the final GibbsState (for diagnostics)."""
    state = init_state(corpus, config, vocab_size)
    words, doc_of = _encode(corpus)
    for _ in range(config.sweeps):
        _sweep_encoded(state, words, doc_of, config)
    return _estimate(state, corpus, config), state


def _estimate(state, corpus, config):
    vocab_size = state.n_kw.shape[1]
    phi = (state.n_kw + config.beta) / (state.n_k[:, None] + vocab_size * config.beta)
    doc_lens = state.n_dk.sum(axis=1)
    theta = (state.n_dk + config.alpha) / (doc_lens[:, None] + config.k * config.alpha)
    phi.setflags(write=False)
    theta.setflags(write=False)
    return TopicModel(phi=phi, theta=theta, config=config, vocab_size=vocab_size,
                      doc_ids=[d.id for d in corpus])


def doc_given_topic(model):
    """Bayes inversion of theta under a uniform document prior.

    p(d|t) = theta[d][t] / sum_d' theta[d'][t]; rows of the K x D result
    sum to one. The smoothed estimator keeps every theta entry positive,
    so no column of theta can vanish.
    """
    column_totals = model.theta.sum(axis=0)
    p = np.ascontiguousarray((model.theta / column_totals).T)
    p.setflags(write=False)
    return DocGivenTopic(p=p)


def log_likelihood(state, corpus, config):
    """Joint log p(w, z | alpha, beta) of the collapsed model."""
    k, v = state.n_kw.shape
    a, b = config.alpha, config.beta
    doc_lens = np.fromiter((len(d.tokens) for d in corpus), dtype=np.int64,
                           count=len(corpus))
    topic_part = (k * (gammaln(v * b) - v * gammaln(b))
                  + gammaln(state.n_kw + b).sum()
                  - gammaln(state.n_k + v * b).sum())
    doc_part = (len(corpus) * (gammaln(k * a) - k * gammaln(a))
                + gammaln(state.n_dk + a).sum()
                - gammaln(doc_lens + k * a).sum())
    return float(topic_part + doc_part)


def save_model(model, path):
    """Write the model to a versioned binary container.

    Layout: 8-byte magic, little-endian uint64 header length, UTF-8 JSON
    header (config, seed, vocab size, doc ids), then phi and theta as
    little-endian float64 in C order. Full binary precision is preserved.
    """
    header = json.dumps({
        "k": model.config.k,
        "alpha": model.config.alpha,
        "beta": model.config.beta,
        "sweeps": model.config.sweeps,
        "seed": model.config.seed,
        "vocab_size": model.vocab_size,
        "doc_ids": model.doc_ids,
    }, sort_keys=True, separators=(",", ":")).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<Q", len(header)))
        fh.write(header)
        fh.write(np.ascontiguousarray(model.phi, dtype="<f8").tobytes())
        fh.write(np.ascontiguousarray(model.theta, dtype="<f8").tobytes())


def load_model(path):
    """Inverse of save_model."""
    with open(path, "rb") as fh:
        blob = fh.read()
    if len(blob) < 16 or blob[:8] != _MAGIC:
        raise ParseError("%s is not a tweetrank model file" % path)
    (header_len,) = struct.unpack("<Q", blob[8:16])
    try:
        header = json.loads(blob[16:16 + header_len].decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError("corrupt model header in %s" % path) from exc
    config = LdaConfig(k=header["k"], alpha=header["alpha"], beta=header["beta"],
                       sweeps=header["sweeps"], seed=header["seed"])
    vocab_size = header["vocab_size"]
    doc_ids = header["doc_ids"]
    offset = 16 + header_len
    phi_bytes = config.k * vocab_size * 8
    theta_bytes = len(doc_ids) * config.k * 8
    if len(blob) != offset + phi_bytes + theta_bytes:
        raise ParseError("model file %s is truncated" % path)
    phi = np.frombuffer(blob, dtype="<f8", count=config.k * vocab_size,
                        offset=offset).reshape(config.k, vocab_size)
    theta = np.frombuffer(blob, dtype="<f8", count=len(doc_ids) * config.k,
                          offset=offset + phi_bytes).reshape(len(doc_ids), config.k)
    return TopicModel(phi=phi, theta=theta, config=config, vocab_size=vocab_size,
                      doc_ids=doc_ids)
