"""Greedy averaged-perceptron sequence tagger over sparse 1-0 features.

The feature template is frozen (versioned in the model file) so training and
prediction can never drift apart. Training is intentionally single-threaded:
update order changes weights and we promise byte-identical models for a
fixed seed.
"""

import json
import random
from dataclasses import dataclass

from .labelling import IobTag, LabelledSentence

TEMPLATE_VERSION = "v1"
MODEL_FORMAT = "aspectlab-tagger"
_TAG_ORDER = ("O", "B", "I")
_BOUNDARY_START = "<s>"
_BOUNDARY_END = "</s>"


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 10
    seed: int = 0
    shuffle: bool = True

    def __post_init__(self):
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs}")


def _shape(form):
    if form == form.lower():
        return "all-lower"
    if form == form.upper():
        return "all-caps"
    if form[0].isupper() and form[1:] == form[1:].lower():
        return "init-cap"
    return "mixed"


def extract_features(sentence, i, prev_tag):
    """Binary feature keys for position i (1-based), namespaced by slot."""
    n = len(sentence.tokens)
    if not (1 <= i <= n):
        raise ValueError(f"position {i} out of range 1..{n}")
    token = sentence.token(i)
    form = token.form

    feats = ["bias", f"w={form.lower()}", f"lemma={token.lemma}"]
    for k in range(1, 5):
        if k <= len(form):
            feats.append(f"pre{k}={form[:k]}")
            feats.append(f"suf{k}={form[-k:]}")
    if any(ch.isdigit() for ch in form):
        feats.append("has_digit")
    if "-" in form:
        feats.append("has_hyphen")
    feats.append(f"shape={_shape(form)}")
    prev_form = sentence.token(i - 1).form.lower() if i > 1 else _BOUNDARY_START
    next_form = sentence.token(i + 1).form.lower() if i < n else _BOUNDARY_END
    feats.append(f"prev_w={prev_form}")
    feats.append(f"next_w={next_form}")
    feats.append(f"prev_tag={prev_tag}")
    return feats


class TaggerModel:
    def __init__(self, tagset, weights, averaged_weights, epochs, seed,
                 template=TEMPLATE_VERSION):
        self.tagset = tuple(tagset)
        self.weights = weights                      # {feature: {tag: float}}
        self.averaged_weights = averaged_weights    # same shape
        self.epochs = epochs
        self.seed = seed
        self.template = template

    def to_dict(self):
        return {
            "format": MODEL_FORMAT,
            "version": 1,
            "template": self.template,
            "tagset": list(self.tagset),
            "epochs": self.epochs,
            "seed": self.seed,
            "weights": self.averaged_weights,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=1) + "\n"

    @classmethod
    def from_dict(cls, data):
        if data.get("format") != MODEL_FORMAT:
            raise ValueError(f"not a {MODEL_FORMAT} model file")
        if data.get("template") != TEMPLATE_VERSION:
            raise ValueError(
                f"model template {data.get('template')!r} does not match "
                f"this build ({TEMPLATE_VERSION})"
            )
        weights = {f: dict(tags) for f, tags in data["weights"].items()}
        return cls(tagset=tuple(data["tagset"]), weights={},
                   averaged_weights=weights, epochs=data.get("epochs"),
                   seed=data.get("seed"), template=data["template"])

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _score(weights, feats, tag):
    total = 0.0
    for f in feats:
        row = weights.get(f)
        if row is not None:
            total += row.get(tag, 0.0)
    return total


def _predict_tag(weights, feats, tagset):
    best_tag = tagset[0]
    best = _score(weights, feats, best_tag)
    for tag in tagset[1:]:
        s = _score(weights, feats, tag)
        if s > best:
            best, best_tag = s, tag
    return best_tag


def train(data, cfg=TrainConfig()):
    """Train an averaged perceptron on labelled sentences.

    Greedy left-to-right: each token is scored with current weights using the
    gold previous tag for features; a wrong prediction bumps every active
    (feature, gold) pair by +1 and (feature, predicted) by -1. The returned
    model carries the running average of the weights over all tokens seen.
    """
    data = list(data)
    if not data:
        raise ValueError("training data is empty")
    for ls in data:
        if len(ls.tags) != len(ls.sentence.tokens):
            raise ValueError(f"sentence {ls.id}: tag/token length mismatch")

    has_i = any(t is IobTag.I for ls in data for t in ls.tags)
    tagset = tuple(t for t in _TAG_ORDER if t != "I" or has_i)

    weights = {}               # feature -> {tag: current weight}
    totals = {}                # feature -> {tag: accumulated weight * steps}
    stamps = {}                # feature -> {tag: step of last change}
    step = 0

    def bump(feat, tag, delta):
        row = weights.setdefault(feat, {})
        trow = totals.setdefault(feat, {})
        srow = stamps.setdefault(feat, {})
        trow[tag] = trow.get(tag, 0.0) + row.get(tag, 0.0) * (step - srow.get(tag, 0))
        srow[tag] = step
        row[tag] = row.get(tag, 0.0) + delta

    rng = random.Random(cfg.seed)
    order = list(range(len(data)))
    for _ in range(cfg.epochs):
        if cfg.shuffle:
            rng.shuffle(order)
        for si in order:
            ls = data[si]
            prev_gold = _BOUNDARY_START
            for i, gold_tag in enumerate(ls.tags, start=1):
                step += 1
                gold = gold_tag.value
                feats = extract_features(ls.sentence, i, prev_gold)
                guess = _predict_tag(weights, feats, tagset)
                if guess != gold:
                    for f in feats:
                        bump(f, gold, 1.0)
                        bump(f, guess, -1.0)
                prev_gold = gold

    averaged = {}
    for feat, row in weights.items():
        arow = {}
        for tag, w in row.items():
            total = totals[feat][tag] + w * (step - stamps[feat][tag])
            avg = total / step if step else 0.0
            if avg != 0.0:
                arow[tag] = avg
        if arow:
            averaged[feat] = arow

    return TaggerModel(tagset=tagset, weights=weights, averaged_weights=averaged,
                       epochs=cfg.epochs, seed=cfg.seed)


def predict(model, sentence):
    """Greedy left-to-right decoding with the averaged weights; the output
    is repaired to IOB well-formedness (an I with no live span becomes B)."""
    tags = []
    prev = _BOUNDARY_START
    for i in range(1, len(sentence.tokens) + 1):
        feats = extract_features(sentence, i, prev)
        tag = _predict_tag(model.averaged_weights, feats, model.tagset)
        tags.append(tag)
        prev = tag

    repaired = []
    for k, tag in enumerate(tags):
        if tag == "I" and (k == 0 or repaired[k - 1] == "O"):
            tag = "B"
        repaired.append(tag)
    return [IobTag(t) for t in repaired]


def predict_corpus(model, corpus):
    return [LabelledSentence(s, tuple(predict(model, s))) for s in corpus]
