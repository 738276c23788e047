"""Service operations: pure request-model -> response-model functions.

The FastAPI endpoints and the CLI both call these, so local runs and HTTP
clients see exactly the same behavior. Input problems raise PipelineError
or ValueError; the app layer maps both to HTTP 400.
"""

import io
from dataclasses import replace

from .. import __version__
from ..corpus import clean_review, parse_conllu
from ..errors import PipelineError
from ..evaluation import evaluate, extract_spans
from ..labelling import LabelledSentence, iter_labelled, read_labelled, write_labelled
from ..lexicon import load_lexicon
from ..phrases import load_phrase_list, mine_phrases, save_phrase_list
from ..rules import CandidateFilter, default_stopwords, load_stopwords
from ..tagger import TaggerModel, TrainConfig, predict_corpus, train
from . import schemas

# Published per-domain pruning thresholds.
PRESETS = {"laptop": 0.7, "restaurant": 0.6}
DEFAULT_QTH = 0.7


def resolve_qth(q_th, preset):
    if q_th is not None:
        if not (0.0 <= q_th <= 1.0):
            raise PipelineError(f"q_th must be in [0,1], got {q_th}")
        return q_th
    if preset is not None:
        if preset not in PRESETS:
            raise PipelineError(
                f"unknown preset {preset!r}; choose from {sorted(PRESETS)}"
            )
        return PRESETS[preset]
    return DEFAULT_QTH


def _candidate_filter(stopwords_text):
    if stopwords_text is None:
        return CandidateFilter(stopwords=default_stopwords())
    return CandidateFilter(stopwords=load_stopwords(stopwords_text))


def clean(req: schemas.CleanRequest) -> schemas.CleanResponse:
    return schemas.CleanResponse(text=clean_review(req.text))


def mine(req: schemas.MineRequest) -> schemas.MineResponse:
    corpus = parse_conllu(req.conllu)
    plist = mine_phrases(corpus, min_support=req.min_support, max_n=req.max_n)
    buf = io.StringIO()
    save_phrase_list(plist, buf)
    return schemas.MineResponse(phrases_tsv=buf.getvalue(), count=len(plist))


def _run_labelling(req):
    corpus = parse_conllu(req.conllu)
    plist = load_phrase_list(req.phrases_tsv)
    lex = load_lexicon(req.positive_words, req.negative_words)
    cfilter = _candidate_filter(req.stopwords)
    q_th = resolve_qth(req.q_th, req.preset)
    return list(iter_labelled(corpus, plist, q_th, lex, cfilter, req.scheme))


def label(req: schemas.LabelRequest) -> schemas.LabelResponse:
    pairs = _run_labelling(req)
    labelled = [ls for ls, _ in pairs]
    buf = io.StringIO()
    write_labelled(labelled, buf)
    matches = None
    if req.debug_matches:
        matches = [
            schemas.SentenceMatches(
                sentence_id=ls.id,
                matches=[
                    schemas.MatchOut(
                        index=m.token_index,
                        rule=m.rule.value if m.rule is not None else "ext",
                        trigger=m.trigger_index,
                    )
                    for m in ms
                ],
            )
            for ls, ms in pairs
        ]
    return schemas.LabelResponse(
        labelled=buf.getvalue(),
        sentences=len(labelled),
        tokens=sum(len(ls.tags) for ls in labelled),
        spans=sum(len(extract_spans(ls)) for ls in labelled),
        matches=matches,
    )


def _eval_response(report):
    d = report.to_dict()
    return schemas.EvalResponse(summary=report.summary(), **d)


def baseline(req: schemas.BaselineRequest) -> schemas.EvalResponse:
    gold = read_labelled(req.gold_labelled)
    predicted = [ls for ls, _ in _run_labelling(req)]
    # the two-column gold file identifies sentences by ordinal, so renumber
    # the predictions the same way before aligning
    predicted = [
        LabelledSentence(replace(ls.sentence, id=str(k)), ls.tags)
        for k, ls in enumerate(predicted, start=1)
    ]
    return _eval_response(evaluate(predicted, gold))


def train_model(req: schemas.TrainRequest) -> schemas.TrainResponse:
    data = read_labelled(req.labelled)
    cfg = TrainConfig(epochs=req.epochs, seed=req.seed, shuffle=req.shuffle)
    model = train(data, cfg)
    return schemas.TrainResponse(model=model.to_dict())


def predict_labels(req: schemas.PredictRequest) -> schemas.PredictResponse:
    model = TaggerModel.from_dict(req.model)
    corpus = parse_conllu(req.conllu)
    labelled = predict_corpus(model, corpus)
    buf = io.StringIO()
    write_labelled(labelled, buf)
    return schemas.PredictResponse(labelled=buf.getvalue())


def evaluate_labelled(req: schemas.EvaluateRequest) -> schemas.EvalResponse:
    predicted = read_labelled(req.predicted)
    gold = read_labelled(req.gold)
    return _eval_response(evaluate(predicted, gold))


def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok", version=__version__)


def presets() -> schemas.PresetsResponse:
    return schemas.PresetsResponse(presets=dict(PRESETS))
