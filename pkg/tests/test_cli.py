"""Command-line stages: artifacts, summaries, exit codes, reproducibility."""

import csv
import hashlib
import json

import numpy as np
import pytest

from tweetrank import cli
from tweetrank.corpus import read_corpus_file
from tweetrank.lda import load_model
from tweetrank.sentiment import classify, Polarity


def _run(argv):
    return cli.main(argv)


@pytest.fixture()
def preprocessed(tmp_path, tweets_path, stopwords_path):
    out = tmp_path / "stage"
    code = _run(["preprocess", "--input", tweets_path, "--stopwords", stopwords_path,
                 "--output-dir", str(out)])
    assert code == 0
    return out


class TestPreprocess:

    def test_counts_and_artifacts(self, preprocessed, capsys):
        assert (preprocessed / "corpus.tsv").exists()
        assert (preprocessed / "vocab.txt").exists()
        docs, timestamps = read_corpus_file(preprocessed / "corpus.tsv")
        assert len(docs) == 186
        assert len(timestamps) == 186

    def test_summary_lines(self, tmp_path, tweets_path, capsys):
        code = _run(["preprocess", "--input", tweets_path,
                     "--output-dir", str(tmp_path / "o")])
        assert code == 0
        output = capsys.readouterr().out
        assert "loaded 200 tweets, skipped 3 malformed lines" in output
        assert "dropped 8 non-English" in output
        assert "kept" in output

    def test_hashtag_filter(self, tmp_path, tweets_path, capsys):
        code = _run(["preprocess", "--input", tweets_path,
                     "--hashtags", "iccwc,CWC15",
                     "--output-dir", str(tmp_path / "o")])
        assert code == 0
        output = capsys.readouterr().out
        assert "hashtag filter (cwc15,iccwc) kept 125 tweets" in output
        docs, _ = read_corpus_file(tmp_path / "o" / "corpus.tsv")
        assert len(docs) < 186

    def test_ten_tweet_summary(self, tmp_path, capsys):
        lines = []
        for i in range(8):
            lines.append(json.dumps({"id": str(i),
                                     "text": "cricket match number %d today" % i}))
        lines.append(json.dumps({"id": "8", "text": "क्रिकेट विश्व कप मैच"},
                                ensure_ascii=False))
        lines.append(json.dumps({"id": "9", "text": "клубный матч сегодня"},
                                ensure_ascii=False))
        src = tmp_path / "ten.jsonl"
        src.write_text("\n".join(lines) + "\n", encoding="utf-8")
        code = _run(["preprocess", "--input", str(src),
                     "--output-dir", str(tmp_path / "o")])
        assert code == 0
        output = capsys.readouterr().out
        assert "dropped 2 non-English" in output
        assert "kept 8 documents" in output

    def test_empty_input_exits_1(self, tmp_path, capsys):
        empty = tmp_path / "empty.jsonl"
        empty.write_text("", encoding="utf-8")
        code = _run(["preprocess", "--input", str(empty),
                     "--output-dir", str(tmp_path / "o")])
        assert code == 1
        assert "empty corpus" in capsys.readouterr().err

    def test_missing_input_exits_1(self, tmp_path, capsys):
        code = _run(["preprocess", "--input", str(tmp_path / "nope.jsonl"),
                     "--output-dir", str(tmp_path / "o")])
        assert code == 1


class TestTrain:

    def test_missing_corpus_exits_1(self, tmp_path, capsys):
        code = _run(["train", "--corpus", str(tmp_path / "nope.tsv"),
                     "--output-dir", str(tmp_path)])
        assert code == 1

    def test_k1_degenerate_thetas(self, preprocessed, tmp_path, capsys):
        out = tmp_path / "k1"
        code = _run(["train", "--corpus", str(preprocessed / "corpus.tsv"),
                     "--vocab", str(preprocessed / "vocab.txt"),
                     "--k", "1", "--sweeps", "5", "--output-dir", str(out)])
        assert code == 0
        assert "log-likelihood" in capsys.readouterr().out
        model = load_model(out / "model.bin")
        np.testing.assert_allclose(model.theta, 1.0, atol=1e-12)

    def test_same_seed_gives_identical_model_files(self, preprocessed, tmp_path):
        outs = []
        for name in ("m1", "m2"):
            out = tmp_path / name
            code = _run(["train", "--corpus", str(preprocessed / "corpus.tsv"),
                         "--vocab", str(preprocessed / "vocab.txt"),
                         "--k", "5", "--sweeps", "40", "--seed", "7",
                         "--output-dir", str(out)])
            assert code == 0
            outs.append((out / "model.bin").read_bytes())
        assert outs[0] == outs[1]


@pytest.fixture()
def trained(preprocessed, tmp_path):
    code = _run(["train", "--corpus", str(preprocessed / "corpus.tsv"),
                 "--vocab", str(preprocessed / "vocab.txt"),
                 "--k", "5", "--sweeps", "60", "--seed", "3",
                 "--output-dir", str(preprocessed)])
    assert code == 0
    return preprocessed


class TestScore:

    def test_missing_model_exits_1(self, tmp_path, wordlist_path):
        code = _run(["score", "--model", str(tmp_path / "nope.bin"),
                     "--vocab", str(tmp_path / "nope.txt"),
                     "--lexicon", wordlist_path, "--output-dir", str(tmp_path)])
        assert code == 1

    def test_report_flag_matches_threshold(self, trained, wordlist_path):
        code = _run(["score", "--model", str(trained / "model.bin"),
                     "--vocab", str(trained / "vocab.txt"),
                     "--lexicon", wordlist_path, "--output-dir", str(trained)])
        assert code == 0
        with open(trained / "report.csv", newline="") as fh:
            rows = list(csv.reader(fh))[1:]
        assert len(rows) == 186
        for row in rows:
            assert row[3] == ("true" if float(row[2]) > 1.0 else "false")

    def test_scores_match_theta_dot_weights(self, trained, wordlist_path):
        code = _run(["score", "--model", str(trained / "model.bin"),
                     "--vocab", str(trained / "vocab.txt"),
                     "--lexicon", wordlist_path, "--output-dir", str(trained)])
        assert code == 0
        model = load_model(trained / "model.bin")
        with open(trained / "topic_stats.csv", newline="") as fh:
            weights = np.array([float(r["weight"]) for r in csv.DictReader(fh)])
        expected = model.theta @ weights
        with open(trained / "score_series.csv", newline="") as fh:
            series = [float(r["score"]) for r in csv.DictReader(fh)]
        # both sides pass through 6-decimal CSV rounding
        np.testing.assert_allclose(series, expected, atol=2e-6)

    def test_disjoint_lexicon_gives_zero_integrity(self, trained, tmp_path):
        lexfile = tmp_path / "nomatch.txt"
        lexfile.write_text("zzzzz\nqqqqq\n", encoding="utf-8")
        code = _run(["score", "--model", str(trained / "model.bin"),
                     "--vocab", str(trained / "vocab.txt"),
                     "--lexicon", str(lexfile), "--output-dir", str(trained)])
        assert code == 0
        with open(trained / "topic_stats.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert all(row["integrity"] == "0.000000" for row in rows)


class TestSentiment:

    def test_outputs_and_labels(self, preprocessed, sentiment_path):
        code = _run(["sentiment", "--corpus", str(preprocessed / "corpus.tsv"),
                     "--vocab", str(preprocessed / "vocab.txt"),
                     "--sentiment-lexicon", sentiment_path,
                     "--output-dir", str(preprocessed)])
        assert code == 0
        with open(preprocessed / "sentiment.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 186
        labels = set()
        for row in rows:
            pos, neg = float(row["positive"]), float(row["negative"])
            assert pos + neg == pytest.approx(1.0, abs=1e-6)
            assert row["label"] == classify(Polarity(pos / (pos + neg),
                                                     neg / (pos + neg)))
            labels.add(row["label"])
        assert labels == {"positive", "negative", "neutral"}

    def test_series_include_timestamps_from_fixture(self, preprocessed, sentiment_path):
        _run(["sentiment", "--corpus", str(preprocessed / "corpus.tsv"),
              "--vocab", str(preprocessed / "vocab.txt"),
              "--sentiment-lexicon", sentiment_path,
              "--output-dir", str(preprocessed)])
        with open(preprocessed / "positive_series.csv", newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["index", "timestamp", "positive"]
        assert rows[1][0] == "0"
        with open(preprocessed / "negative_series.csv", newline="") as fh:
            assert next(csv.reader(fh)) == ["index", "timestamp", "negative"]

    def test_series_omit_timestamp_column_without_timestamps(self, tmp_path,
                                                             sentiment_path):
        corpus = tmp_path / "corpus.tsv"
        corpus.write_text("d1\t\t0 1 2\n", encoding="utf-8")
        vocab = tmp_path / "vocab.txt"
        vocab.write_text("good\nmatch\nteam\n", encoding="utf-8")
        code = _run(["sentiment", "--corpus", str(corpus), "--vocab", str(vocab),
                     "--sentiment-lexicon", sentiment_path,
                     "--output-dir", str(tmp_path)])
        assert code == 0
        with open(tmp_path / "positive_series.csv", newline="") as fh:
            assert next(csv.reader(fh)) == ["index", "positive"]

    def test_neutral_when_lexicon_never_matches(self, tmp_path):
        corpus = tmp_path / "corpus.tsv"
        corpus.write_text("d1\t\t0 1\nd2\t\t1 1\n", encoding="utf-8")
        vocab = tmp_path / "vocab.txt"
        vocab.write_text("alpha\nbeta\n", encoding="utf-8")
        lex = tmp_path / "lex.tsv"
        lex.write_text("unrelated\t1\t0\n", encoding="utf-8")
        code = _run(["sentiment", "--corpus", str(corpus), "--vocab", str(vocab),
                     "--sentiment-lexicon", str(lex), "--output-dir", str(tmp_path)])
        assert code == 0
        with open(tmp_path / "sentiment.csv", newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert all(r["positive"] == "0.500000" and r["label"] == "neutral"
                   for r in rows)


class TestPipeline:

    ARGS = ["--hashtags", "", "--k", "5", "--sweeps", "40", "--seed", "11"]

    def test_end_to_end_artifacts_and_manifest(self, tmp_path, tweets_path,
                                               wordlist_path, sentiment_path,
                                               stopwords_path):
        out = tmp_path / "run"
        code = _run(["pipeline", "--input", tweets_path,
                     "--stopwords", stopwords_path,
                     "--lexicon", wordlist_path,
                     "--sentiment-lexicon", sentiment_path,
                     "--output-dir", str(out)] + self.ARGS)
        assert code == 0
        expected = set(cli._PIPELINE_ARTIFACTS) | {"manifest.json"}
        assert {p.name for p in out.iterdir()} == expected

        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["seed"] == 11
        assert manifest["config"]["lda"]["k"] == 5
        for name, digest in manifest["outputs"].items():
            payload = (out / name).read_bytes()
            assert hashlib.sha256(payload).hexdigest() == digest

    def test_rerun_is_byte_identical(self, tmp_path, tweets_path, wordlist_path,
                                     sentiment_path):
        out = tmp_path / "run"
        argv = ["pipeline", "--input", tweets_path, "--lexicon", wordlist_path,
                "--sentiment-lexicon", sentiment_path,
                "--output-dir", str(out)] + self.ARGS
        assert _run(argv) == 0
        first = {p.name: p.read_bytes() for p in out.iterdir()}
        assert _run(argv) == 0
        second = {p.name: p.read_bytes() for p in out.iterdir()}
        assert first == second

    def test_first_failing_stage_aborts(self, tmp_path, tweets_path, wordlist_path,
                                        sentiment_path, capsys):
        out = tmp_path / "run"
        empty = tmp_path / "empty.jsonl"
        empty.write_text("", encoding="utf-8")
        code = _run(["pipeline", "--input", str(empty), "--lexicon", wordlist_path,
                     "--sentiment-lexicon", sentiment_path,
                     "--output-dir", str(out)])
        assert code == 1
        assert not (out / "manifest.json").exists()


class TestUsageErrors:

    def test_unknown_flag_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["pipeline", "--frobnicate"])
        assert excinfo.value.code == 2

    def test_missing_required_flag_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["train", "--output-dir", "x"])
        assert excinfo.value.code == 2

    def test_no_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            cli.main([])
        assert excinfo.value.code == 2
