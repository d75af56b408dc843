"""Word-membership lexicon backing the topic integrity measure."""

import logging
from dataclasses import dataclass, field

from .errors import ValidationError

logger = logging.getLogger("tweetrank")


@dataclass
class IntegrityLexicon:
    """Set of known words; membership drives the integrity of a topic."""

    words: set = field(default_factory=set)

    def __contains__(self, word):
        return word.lower() in self.words

    def __len__(self):
        return len(self.words)


def load_wordlist(path):
    """Load a wordlist file (UTF-8, one word per line) into a lexicon.

    Entries are lowercased and deduplicated; blank lines are ignored.

    Raises:
        ValidationError: the file yields no words at all (integrity would
        be identically zero for every topic).
    """
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip().lower()
            if word:
                words.add(word)
    if not words:
        raise ValidationError("wordlist %s contains no words" % path)
    logger.info("loaded %d words from %s", len(words), path)
    return IntegrityLexicon(words=words)


def membership(lexicon, word):
    """1 if the lowercased word is in the lexicon, else 0."""
    return 1 if word.lower() in lexicon.words else 0
