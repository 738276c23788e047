"""aspectlab: weakly supervised aspect term extraction.

Rule-based automatic labelling of dependency-parsed review corpora, a linear
sequence tagger trained on the weak labels, and exact-span evaluation.
"""

__version__ = "0.1.0"

from .corpus import Corpus, Sentence, Token, clean_review, parse_conllu, serialize_conllu
from .evaluation import EvalReport, Span, evaluate, extract_spans
from .labelling import (IobTag, LabelScheme, LabelledSentence, assign_iob,
                        label_corpus, read_labelled, to_ob, write_labelled)
from .lexicon import SentimentLexicon, load_lexicon, opinion_word
from .phrases import PhraseList, QualityPhrase, load_phrase_list, mine_phrases, prune
from .rules import CandidateFilter, RuleId, RuleMatch, apply_rules, depends, is_candidate
from .tagger import TaggerModel, TrainConfig, extract_features, predict, train

__all__ = [
    "Corpus", "Sentence", "Token", "clean_review", "parse_conllu", "serialize_conllu",
    "EvalReport", "Span", "evaluate", "extract_spans",
    "IobTag", "LabelScheme", "LabelledSentence", "assign_iob", "label_corpus",
    "read_labelled", "to_ob", "write_labelled",
    "SentimentLexicon", "load_lexicon", "opinion_word",
    "PhraseList", "QualityPhrase", "load_phrase_list", "mine_phrases", "prune",
    "CandidateFilter", "RuleId", "RuleMatch", "apply_rules", "depends", "is_candidate",
    "TaggerModel", "TrainConfig", "extract_features", "predict", "train",
]
