"""Exact-span precision/recall/F1 over B..I chunks, CoNLL style.

Only complete span matches count; there is no partial credit. A dangling I
after an O is treated as a span start by default, mirroring the reference
chunk scorer; strict mode raises instead.
"""

import json
from dataclasses import dataclass

from .errors import AlignmentError
from .labelling import IobTag


@dataclass(frozen=True)
class Span:
    sentence_id: str
    start: int      # 1-based, inclusive
    end: int        # 1-based, inclusive

    def __post_init__(self):
        if self.start > self.end:
            raise ValueError(f"span start {self.start} after end {self.end}")


@dataclass(frozen=True)
class EvalReport:
    true_positives: int
    predicted_count: int
    gold_count: int
    precision: float
    recall: float
    f1: float

    def to_dict(self):
        return {
            "tp": self.true_positives,
            "pred": self.predicted_count,
            "gold": self.gold_count,
            "precision": round(self.precision, 2),
            "recall": round(self.recall, 2),
            "f1": round(self.f1, 2),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self):
        return (f"P={self.precision:.2f} R={self.recall:.2f} F1={self.f1:.2f} "
                f"(tp={self.true_positives} pred={self.predicted_count} "
                f"gold={self.gold_count})")


def extract_spans(labelled, strict=False):
    """Maximal B (I)* runs as Spans, in sentence order."""
    spans = []
    start = None
    tags = labelled.tags
    for pos, tag in enumerate(tags, start=1):
        if tag is IobTag.B:
            if start is not None:
                spans.append(Span(labelled.id, start, pos - 1))
            start = pos
        elif tag is IobTag.I:
            if start is None:
                if strict:
                    raise ValueError(
                        f"sentence {labelled.id}: I at position {pos} "
                        f"does not continue a span"
                    )
                start = pos
        else:
            if start is not None:
                spans.append(Span(labelled.id, start, pos - 1))
                start = None
    if start is not None:
        spans.append(Span(labelled.id, start, len(tags)))
    return spans


def _rates(tp, pred, gold):
    precision = 100.0 * tp / pred if pred else 0.0
    recall = 100.0 * tp / gold if gold else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


def evaluate(predicted, gold, strict=False):
    """Score predicted against gold labelled sentences by exact span match."""
    if len(predicted) != len(gold):
        raise AlignmentError(
            f"sentence count mismatch: {len(predicted)} predicted vs {len(gold)} gold"
        )
    tp = 0
    pred_count = 0
    gold_count = 0
    for p, g in zip(predicted, gold):
        if p.id != g.id:
            raise AlignmentError(f"sentence id mismatch: {p.id!r} vs {g.id!r}")
        if len(p.tags) != len(g.tags):
            raise AlignmentError(
                f"sentence {p.id}: token count mismatch "
                f"({len(p.tags)} predicted vs {len(g.tags)} gold)"
            )
        p_spans = set(extract_spans(p, strict=strict))
        g_spans = set(extract_spans(g, strict=strict))
        tp += len(p_spans & g_spans)
        pred_count += len(p_spans)
        gold_count += len(g_spans)

    precision, recall, f1 = _rates(tp, pred_count, gold_count)
    return EvalReport(true_positives=tp, predicted_count=pred_count,
                      gold_count=gold_count, precision=precision,
                      recall=recall, f1=f1)
