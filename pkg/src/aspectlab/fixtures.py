"""Golden reference cases for the extraction rules.

Each case pairs a hand-parsed sentence with the target strings and IOB line
it must produce. The dependency analyses follow one documented convention
(see the header of data/rule_fixtures.conllu) so rule behavior is testable
without any external parser. Consistency is enforced at load time.
"""

import json
from dataclasses import dataclass
from importlib import resources

from .corpus import parse_conllu
from .errors import FixtureError
from .labelling import IobTag
from .lexicon import SentimentLexicon
from .phrases import PhraseList, QualityPhrase


@dataclass(frozen=True)
class FixtureCase:
    name: str
    sentence: object
    conllu: str
    targets: tuple
    iob: tuple


def _data_text(name):
    return resources.files("aspectlab.data").joinpath(name).read_text("utf-8")


def _sidecar():
    return json.loads(_data_text("rule_fixtures.json"))


def fixture_lexicon():
    """The small opinion-word lexicon the golden cases assume."""
    meta = _sidecar()["lexicon"]
    return SentimentLexicon(positive=frozenset(meta["positive"]),
                            negative=frozenset(meta["negative"]))


def fixture_candidates(q=1.0):
    """A phrase list containing every golden-case target token."""
    texts = _sidecar()["candidates"]
    return PhraseList([QualityPhrase(text=t, q=q) for t in texts], source="loaded")


def _spans_of(iob_tags):
    spans = []
    start = None
    for pos, tag in enumerate(iob_tags, start=1):
        if tag is IobTag.B:
            if start is not None:
                spans.append((start, pos - 1))
            start = pos
        elif tag is IobTag.O:
            if start is not None:
                spans.append((start, pos - 1))
                start = None
    if start is not None:
        spans.append((start, len(iob_tags)))
    return spans


def load_fixtures():
    """All golden cases, validated: the IOB line must spell out exactly the
    expected target strings over the sentence's lowercased forms."""
    conllu_text = _data_text("rule_fixtures.conllu")
    corpus = parse_conllu(conllu_text)
    by_id = {s.id: s for s in corpus}
    blocks = {s.id: block for s, block in zip(corpus, _blocks(conllu_text))}

    cases = []
    for meta in _sidecar()["cases"]:
        sentence = by_id.get(meta["sent_id"])
        if sentence is None:
            raise FixtureError(f"case {meta['name']}: sentence {meta['sent_id']} missing")
        iob = tuple(IobTag(t) for t in meta["iob"].split())
        if len(iob) != len(sentence.tokens):
            raise FixtureError(
                f"case {meta['name']}: {len(iob)} tags for "
                f"{len(sentence.tokens)} tokens"
            )
        targets = tuple(meta["targets"])
        rendered = tuple(
            " ".join(sentence.token(i).form.lower() for i in range(start, end + 1))
            for start, end in _spans_of(iob)
        )
        if rendered != targets:
            raise FixtureError(
                f"case {meta['name']}: IOB line spells {rendered}, "
                f"expected targets {targets}"
            )
        cases.append(FixtureCase(name=meta["name"], sentence=sentence,
                                 conllu=blocks[sentence.id], targets=targets, iob=iob))
    if len(cases) < 7:
        raise FixtureError(f"expected at least 7 golden cases, found {len(cases)}")
    return cases


def _blocks(conllu_text):
    block = []
    for line in conllu_text.splitlines():
        if not line.strip():
            if any(not ln.startswith("#") for ln in block):
                yield "\n".join(block)
            block = []
        else:
            block.append(line)
    if any(not ln.startswith("#") for ln in block):
        yield "\n".join(block)
