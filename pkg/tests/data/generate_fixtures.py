"""Regenerate the static test fixtures in this directory.

Deterministic (seeded); the generated files are committed so tests never
depend on running this script. Rerun only when the fixture design changes:

    python tests/data/generate_fixtures.py
"""

import json
import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))

CRICKET = [
    "cricket", "match", "innings", "batsman", "bowler", "wicket", "champions",
    "trophy", "final", "victory", "team", "series", "stadium", "crowd",
    "captain", "runs", "chase", "win", "played", "bowling", "fielding",
    "tournament", "semifinal", "opener", "partnership",
]
NEWS = [
    "election", "minister", "parliament", "policy", "votes", "debate",
    "campaign", "leader", "government", "speech", "reform", "budget",
    "nation", "press", "media", "council", "summit",
]
MUSIC = [
    "concert", "album", "music", "band", "singer", "guitar", "tour", "stage",
    "song", "festival", "tickets", "record", "dance", "show", "lyrics",
]
GIBBERISH = [
    "qzxv", "flurb", "wibble", "zorp", "blargh", "snurf", "grex", "plonk",
    "vreet", "klonk",
]
POSITIVE = ["good", "great", "love", "congrats", "amazing", "happy",
            "brilliant", "cheers", "fascinating", "proud"]
NEGATIVE = ["bad", "boring", "hurts", "sad", "terrible", "injured",
            "bizarre", "worst", "upset", "awful"]
GLUE = ["the", "a", "in", "on", "of", "to", "and", "is", "it", "for", "at",
        "this", "that", "with", "from", "was", "are", "again", "today"]

NON_ENGLISH_TEXTS = [
    "क्रिकेट विश्व कप बहुत रोमांचक है #iccwc",
    "クリケットワールドカップは素晴らしい #cwc15",
    "мировой кубок по крикету очень интересный #iccwc",
    "விளையாட்டு மிகவும் அருமை #cwc15",
    "क्रिकेट संघ जीत गया आज #iccwc",
    "크리켓 월드컵 결승전 #cwc15",
    "คริกเก็ตเวิลด์คัพสนุกมาก #iccwc",
    "क्रिकेट मैच देखा और मज़ा आया #cwc15",
]

SHORT_TEXTS = [
    "so #iccwc", "ok #cwc15 yo", "go #iccwc", "wow #cwc15", "eh #iccwc",
    "hm #cwc15 ya", "yes #iccwc", "na #cwc15",
]

MALFORMED_LINES = [
    "this is not json at all",
    '{"id": "broken1"}',
    '["not", "an", "object"]',
]


def make_text(rng, pools, hashtag=None, url=False, mention=False):
    words = []
    for pool, lo, hi in pools:
        words.extend(rng.sample(pool, rng.randint(lo, hi)))
    rng.shuffle(words)
    if mention:
        words.insert(rng.randrange(len(words) + 1), "@" + rng.choice(
            ["bcci", "icc", "skysports", "newsdesk", "fanclub"]))
    if url:
        words.append("https://t.co/" + "".join(rng.choices("abcdefghij", k=6)))
    if hashtag:
        words.insert(rng.randrange(len(words) + 1), "#" + hashtag)
    text = " ".join(words)
    if rng.random() < 0.4:
        text += rng.choice([".", "!", "!!", "?", "..."])
    return text


def main():
    rng = random.Random(20150329)
    records = []

    themes = [
        (CRICKET, ["iccwc"] * 4 + ["cwc15"] * 3 + [None], 120),
        (NEWS, ["election", "news", None], 40),
        (MUSIC, ["music", "nowplaying", None], 24),
    ]
    for pool, tags, count in themes:
        for _ in range(count):
            sentiment_pool = rng.choice([POSITIVE, NEGATIVE, []])
            pools = [(pool, 3, 6), (GLUE, 1, 3)]
            if sentiment_pool:
                pools.append((sentiment_pool, 1, 2))
            if rng.random() < 0.15:
                pools.append((GIBBERISH, 1, 2))
            records.append(make_text(
                rng, pools, hashtag=rng.choice(tags),
                url=rng.random() < 0.12, mention=rng.random() < 0.15))

    texts = records[:184 - len(SHORT_TEXTS) - len(NON_ENGLISH_TEXTS)]
    texts.extend(SHORT_TEXTS)
    texts.extend(NON_ENGLISH_TEXTS)
    while len(texts) < 200:
        texts.append(make_text(rng, [(CRICKET, 3, 6), (GLUE, 1, 2)],
                               hashtag=rng.choice(["iccwc", "cwc15"])))
    rng.shuffle(texts)

    lines = []
    for i, text in enumerate(texts[:200]):
        record = {"id": "t%04d" % (i + 1), "text": text,
                  "timestamp": 1426000000 + i * 137}
        if rng.random() < 0.1:
            record["hashtags"] = ["#OddBall", "extra"]
        lines.append(json.dumps(record, ensure_ascii=False))
    for pos, bad in zip((37, 101, 163), MALFORMED_LINES):
        lines.insert(pos, bad)

    with open(os.path.join(HERE, "tweets200.jsonl"), "w", encoding="utf-8",
              newline="") as fh:
        fh.write("\n".join(lines) + "\n")

    wordlist = sorted(set(CRICKET + NEWS + MUSIC + POSITIVE + NEGATIVE + GLUE
                          + ["interest", "host", "nations", "teams", "title",
                             "responsibility", "winner", "world", "cup"]))
    with open(os.path.join(HERE, "wordlist.txt"), "w", encoding="utf-8",
              newline="") as fh:
        fh.write("\n".join(wordlist) + "\n")

    with open(os.path.join(HERE, "stopwords.txt"), "w", encoding="utf-8",
              newline="") as fh:
        fh.write("# common function words\n")
        fh.write("\n".join(sorted(set(GLUE))) + "\n")

    sentiment_rows = [("good", 1.0, 0.0), ("great", 1.0, 0.0), ("love", 1.0, 0.0),
                      ("congrats", 1.0, 0.0), ("amazing", 1.0, 0.0),
                      ("happy", 0.9, 0.0), ("brilliant", 1.0, 0.0),
                      ("cheers", 0.8, 0.0), ("fascinating", 0.9, 0.0),
                      ("proud", 0.8, 0.0), ("victory", 0.7, 0.0),
                      ("win", 0.6, 0.0), ("champions", 0.5, 0.0),
                      ("bad", 0.0, 1.0), ("boring", 0.0, 1.0),
                      ("hurts", 0.0, 0.9), ("sad", 0.0, 0.9),
                      ("terrible", 0.0, 1.0), ("injured", 0.0, 0.8),
                      ("bizarre", 0.0, 0.7), ("worst", 0.0, 1.0),
                      ("upset", 0.1, 0.9), ("awful", 0.0, 1.0),
                      ("miss", 0.0, 0.4)]
    with open(os.path.join(HERE, "sentiment.tsv"), "w", encoding="utf-8",
              newline="") as fh:
        for word, pos, neg in sentiment_rows:
            fh.write("%s\t%s\t%s\n" % (word, pos, neg))

    print("wrote fixtures to", HERE)


if __name__ == "__main__":
    main()
