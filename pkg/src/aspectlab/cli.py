"""Command-line client for the labelling pipeline.

Each subcommand reads local files, builds a service request, and dispatches
it either to the in-process service core (default) or to a running server
(`--server http://host:port`), then writes any response payloads back to
local files. Business logic lives behind the service interface, not here.
"""

import argparse
import json
import sys

import httpx

from .errors import PipelineError
from .service import core, schemas

_INT_KEYS = {"epochs", "seed", "min_support", "max_n"}
_FLOAT_KEYS = {"qth"}


def _read_text(path, what):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise PipelineError(f"cannot read {what} {path!r}: {exc}") from exc


def _write_text(path, text, what):
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise PipelineError(f"cannot write {what} {path!r}: {exc}") from exc


def _load_config_file(path):
    cfg = {}
    for lineno, line in enumerate(_read_text(path, "config file").splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise PipelineError(f"config line {lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        cfg[key.strip().lower().replace("-", "_")] = value.strip()
    return cfg


def _merge_config(args):
    """Fill unset options from the config file; explicit flags win."""
    if getattr(args, "config", None) is None:
        return
    for key, value in _load_config_file(args.config).items():
        if not hasattr(args, key) or getattr(args, key) is not None:
            continue
        try:
            if key in _INT_KEYS:
                value = int(value)
            elif key in _FLOAT_KEYS:
                value = float(value)
        except ValueError:
            raise PipelineError(f"config key {key!r}: bad value {value!r}") from None
        setattr(args, key, value)


def _call(args, path, request, response_cls, local_fn):
    server = getattr(args, "server", None)
    if not server:
        return local_fn(request)
    url = server.rstrip("/") + path
    try:
        r = httpx.post(url, json=request.model_dump(), timeout=300.0)
    except httpx.HTTPError as exc:
        raise PipelineError(f"request to {url} failed: {exc}") from exc
    if r.status_code != 200:
        try:
            detail = r.json().get("detail", r.text)
        except ValueError:
            detail = r.text
        raise PipelineError(f"server returned {r.status_code}: {detail}")
    return response_cls.model_validate(r.json())


def _label_options(args):
    return {
        "phrases_tsv": _read_text(args.phrases, "phrase list"),
        "positive_words": _read_text(args.pos_lex, "positive lexicon"),
        "negative_words": _read_text(args.neg_lex, "negative lexicon"),
        "stopwords": (_read_text(args.stopwords, "stopword list")
                      if args.stopwords else None),
        "q_th": args.qth,
        "scheme": args.scheme or "iob",
        "preset": args.preset,
    }


def cmd_mine(args):
    req = schemas.MineRequest(
        conllu=_read_text(args.corpus, "corpus"),
        min_support=args.min_support if args.min_support is not None else 10,
        max_n=args.max_n if args.max_n is not None else 3,
    )
    resp = _call(args, "/mine", req, schemas.MineResponse, core.mine)
    _write_text(args.out, resp.phrases_tsv, "phrase list")
    print(json.dumps({"phrases": resp.count}, sort_keys=True))
    return 0


def cmd_label(args):
    req = schemas.LabelRequest(
        conllu=_read_text(args.corpus, "corpus"),
        debug_matches=args.debug_matches is not None,
        **_label_options(args),
    )
    resp = _call(args, "/label", req, schemas.LabelResponse, core.label)
    _write_text(args.out, resp.labelled, "labelled corpus")
    if args.debug_matches is not None:
        lines = [
            json.dumps({"sentence_id": sm.sentence_id,
                        "matches": [{"index": m.index, "rule": m.rule,
                                     "trigger": m.trigger} for m in sm.matches]})
            for sm in resp.matches or []
        ]
        _write_text(args.debug_matches, "".join(ln + "\n" for ln in lines),
                    "match debug file")
    print(json.dumps({"sentences": resp.sentences, "tokens": resp.tokens,
                      "spans": resp.spans}, sort_keys=True))
    return 0


def _print_report(resp):
    print(json.dumps({"tp": resp.tp, "pred": resp.pred, "gold": resp.gold,
                      "precision": resp.precision, "recall": resp.recall,
                      "f1": resp.f1}, sort_keys=True))
    print(resp.summary)


def cmd_baseline(args):
    req = schemas.BaselineRequest(
        conllu=_read_text(args.corpus, "corpus"),
        gold_labelled=_read_text(args.gold, "gold labels"),
        **_label_options(args),
    )
    resp = _call(args, "/baseline", req, schemas.EvalResponse, core.baseline)
    _print_report(resp)
    return 0


def cmd_train(args):
    req = schemas.TrainRequest(
        labelled=_read_text(args.data, "training data"),
        epochs=args.epochs if args.epochs is not None else 10,
        seed=args.seed if args.seed is not None else 0,
        shuffle=not args.no_shuffle,
    )
    resp = _call(args, "/train", req, schemas.TrainResponse, core.train_model)
    _write_text(args.model_out, json.dumps(resp.model, sort_keys=True, indent=1) + "\n",
                "model file")
    print(json.dumps({"features": len(resp.model.get("weights", {})),
                      "tagset": resp.model.get("tagset")}, sort_keys=True))
    return 0


def cmd_predict(args):
    try:
        model = json.loads(_read_text(args.model, "model file"))
    except ValueError as exc:
        raise PipelineError(f"model file {args.model!r} is not valid JSON: {exc}") from exc
    req = schemas.PredictRequest(model=model, conllu=_read_text(args.corpus, "corpus"))
    resp = _call(args, "/predict", req, schemas.PredictResponse, core.predict_labels)
    _write_text(args.out, resp.labelled, "predictions")
    return 0


def cmd_eval(args):
    req = schemas.EvaluateRequest(predicted=_read_text(args.pred, "predictions"),
                                  gold=_read_text(args.gold, "gold labels"))
    resp = _call(args, "/evaluate", req, schemas.EvalResponse, core.evaluate_labelled)
    _print_report(resp)
    return 0


def cmd_serve(args):
    import uvicorn

    from .service.app import app
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_common(parser):
    parser.add_argument("--config", help="key=value config file; flags override it")
    parser.add_argument("--server", help="base URL of a running service "
                                         "(default: run in-process)")


def _add_label_options(parser):
    parser.add_argument("--phrases", required=True, help="quality-phrase TSV")
    parser.add_argument("--pos-lex", required=True, help="positive word list")
    parser.add_argument("--neg-lex", required=True, help="negative word list")
    parser.add_argument("--stopwords", help="stopword list (default: built-in English)")
    parser.add_argument("--qth", type=float, help="quality threshold in [0,1] "
                                                  "(default 0.7, or the preset's value)")
    parser.add_argument("--scheme", choices=["iob", "ob"], help="label scheme (default iob)")
    parser.add_argument("--preset", choices=sorted(core.PRESETS),
                        help="domain preset supplying q_th")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="aspectlab",
        description="Weakly supervised aspect term extraction pipeline.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mine", help="mine a quality-phrase list from a parsed corpus")
    p.add_argument("--corpus", required=True, help="CoNLL-U input")
    p.add_argument("--out", required=True, help="phrase TSV output")
    p.add_argument("--min-support", type=int, dest="min_support")
    p.add_argument("--max-n", type=int, dest="max_n")
    _add_common(p)
    p.set_defaults(fn=cmd_mine)

    p = sub.add_parser("label", help="auto-label a parsed corpus with aspect terms")
    p.add_argument("--corpus", required=True, help="CoNLL-U input")
    p.add_argument("--out", required=True, help="two-column labelled output")
    _add_label_options(p)
    p.add_argument("--debug-matches", metavar="PATH",
                   help="also write per-sentence rule matches as JSON lines")
    _add_common(p)
    p.set_defaults(fn=cmd_label)

    p = sub.add_parser("baseline",
                       help="apply the rules to a gold corpus and score them")
    p.add_argument("--corpus", required=True, help="CoNLL-U of the gold sentences")
    p.add_argument("--gold", required=True, help="two-column gold labels")
    _add_label_options(p)
    _add_common(p)
    p.set_defaults(fn=cmd_baseline)

    p = sub.add_parser("train", help="train the tagger on a labelled corpus")
    p.add_argument("--data", required=True, help="two-column training data")
    p.add_argument("--model-out", required=True, dest="model_out")
    p.add_argument("--epochs", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--no-shuffle", action="store_true")
    _add_common(p)
    p.set_defaults(fn=cmd_train)

    p = sub.add_parser("predict", help="tag a parsed corpus with a trained model")
    p.add_argument("--model", required=True, help="model JSON file")
    p.add_argument("--corpus", required=True, help="CoNLL-U input")
    p.add_argument("--out", required=True, help="two-column predictions output")
    _add_common(p)
    p.set_defaults(fn=cmd_predict)

    p = sub.add_parser("eval", help="score predictions against gold labels")
    p.add_argument("--pred", required=True, help="two-column predictions")
    p.add_argument("--gold", required=True, help="two-column gold labels")
    _add_common(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _merge_config(args)
        return args.fn(args)
    except (PipelineError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint():
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
