import pytest

from aspectlab.corpus import Corpus, Sentence, Token


def make_sentence(forms, sid="s1", upos=None, heads=None, deprels=None, lemmas=None):
    """Build a Sentence quickly; defaults chain every token to token 1."""
    n = len(forms)
    upos = upos or ["NOUN"] * n
    heads = heads or [0] + [1] * (n - 1)
    deprels = deprels or ["root"] + ["dep"] * (n - 1)
    lemmas = lemmas or [f.lower() for f in forms]
    tokens = tuple(
        Token(index=i + 1, form=forms[i], lemma=lemmas[i], upos=upos[i],
              head=heads[i], deprel=deprels[i])
        for i in range(n)
    )
    return Sentence(id=sid, tokens=tokens)


def make_corpus(sentences, domain_tag=""):
    return Corpus(sentences=tuple(sentences), domain_tag=domain_tag)


@pytest.fixture
def table_inputs():
    """Fixture corpus plus the lexicon/candidates the golden cases assume."""
    from aspectlab.fixtures import fixture_candidates, fixture_lexicon, load_fixtures
    from aspectlab.rules import CandidateFilter, default_stopwords

    cases = load_fixtures()
    return {
        "cases": cases,
        "lexicon": fixture_lexicon(),
        "candidates": fixture_candidates(),
        "filter": CandidateFilter(stopwords=default_stopwords()),
    }
