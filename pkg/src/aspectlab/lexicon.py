"""Sentiment lexicon: positive/negative word lists and the opinion-word test.

The expected file format is one word per line with `;` comment lines, as in
the widely used opinion-word lists shipped with most sentiment toolkits.
Polarity is never scored here; the extraction rules only need membership.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class SentimentLexicon:
    positive: frozenset = field(default_factory=frozenset)
    negative: frozenset = field(default_factory=frozenset)

    @property
    def words(self):
        return self.positive | self.negative


def _read_words(stream):
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream
    words = set()
    for line in lines:
        line = line.strip()
        if not line or line.startswith(";"):
            continue
        words.add(line.lower())
    return frozenset(words)


def load_lexicon(pos_stream, neg_stream):
    return SentimentLexicon(positive=_read_words(pos_stream),
                            negative=_read_words(neg_stream))


def opinion_word(lex, token):
    """True if the token's surface form or lemma is in the lexicon."""
    return token.form.lower() in lex.words or token.lemma in lex.words
