"""Request/response models for the labelling service.

Every endpoint is stateless: corpora, phrase lists and word lists travel in
the request body as file-format text, so the service never touches the
server filesystem and identical requests always produce identical responses.
"""

from typing import Optional

from pydantic import BaseModel, Field


class CleanRequest(BaseModel):
    text: str


class CleanResponse(BaseModel):
    text: str


class MineRequest(BaseModel):
    conllu: str
    min_support: int = 10
    max_n: int = 3


class MineResponse(BaseModel):
    phrases_tsv: str
    count: int


class MatchOut(BaseModel):
    index: int
    rule: str            # "R1".."R6", or "ext" for modifier-extension marks
    trigger: int


class SentenceMatches(BaseModel):
    sentence_id: str
    matches: list[MatchOut]


class LabelOptions(BaseModel):
    phrases_tsv: str
    positive_words: str = ""
    negative_words: str = ""
    stopwords: Optional[str] = None            # None -> packaged default list
    q_th: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    scheme: str = "iob"
    preset: Optional[str] = None


class LabelRequest(LabelOptions):
    conllu: str
    debug_matches: bool = False


class LabelResponse(BaseModel):
    labelled: str
    sentences: int
    tokens: int
    spans: int
    matches: Optional[list[SentenceMatches]] = None


class BaselineRequest(LabelOptions):
    conllu: str
    gold_labelled: str


class TrainRequest(BaseModel):
    labelled: str
    epochs: int = 10
    seed: int = 0
    shuffle: bool = True


class TrainResponse(BaseModel):
    model: dict


class PredictRequest(BaseModel):
    model: dict
    conllu: str


class PredictResponse(BaseModel):
    labelled: str


class EvaluateRequest(BaseModel):
    predicted: str
    gold: str


class EvalResponse(BaseModel):
    tp: int
    pred: int
    gold: int
    precision: float
    recall: float
    f1: float
    summary: str


class HealthResponse(BaseModel):
    status: str
    version: str


class PresetsResponse(BaseModel):
    presets: dict[str, float]
