import os
import sys

import pytest

TESTS_DIR = os.path.dirname(os.path.abspath(__file__))
DATA_DIR = os.path.join(TESTS_DIR, "data")

sys.path.insert(0, TESTS_DIR)  # makes `import oracles` work from any cwd


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR


@pytest.fixture(scope="session")
def tweets_path():
    return os.path.join(DATA_DIR, "tweets200.jsonl")


@pytest.fixture(scope="session")
def wordlist_path():
    return os.path.join(DATA_DIR, "wordlist.txt")


@pytest.fixture(scope="session")
def stopwords_path():
    return os.path.join(DATA_DIR, "stopwords.txt")


@pytest.fixture(scope="session")
def sentiment_path():
    return os.path.join(DATA_DIR, "sentiment.tsv")
