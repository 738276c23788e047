"""Syntactic extraction rules over dependency parses.

Six rules fire in three phases: opinion-anchored rules (R1-R4) seed the mark
set, coordination/compound propagation (R5, R6) runs to a fixpoint, and a
final pass pulls in contiguous left modifiers of marked nouns so multi-word
terms come out whole. Rule matches keep enough provenance to be replayed
against the sentence.
"""

from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .lexicon import opinion_word


class RuleId(Enum):
    R1 = "R1"   # dobj dependent of an opinion word
    R2 = "R2"   # nsubj whose predicate has an opinion acomp
    R3 = "R3"   # nsubj whose predicate has an opinion advmod
    R4 = "R4"   # pobj/dobj carrying an opinion amod
    R5 = "R5"   # cc/conj propagation from a marked token
    R6 = "R6"   # compound propagation from a marked token


DEFAULT_ALLOWED_POS = frozenset({"NOUN", "PRON", "PROPN", "ADJ", "ADP", "CONJ"})

_OBJ_RELS = ("pobj", "dobj")
_COORD_RELS = ("cc", "conj")
_EXTENSION_RELS = ("amod", "compound")
_NOUN_POS = ("NOUN", "PROPN")


@dataclass(frozen=True)
class CandidateFilter:
    stopwords: frozenset = frozenset()
    allowed_pos: frozenset = DEFAULT_ALLOWED_POS

    def __post_init__(self):
        if not self.allowed_pos:
            raise ValueError("allowed_pos must be non-empty")


@dataclass(frozen=True)
class RuleMatch:
    token_index: int
    rule: RuleId      # None for modifier-extension marks (no table rule fired)
    trigger_index: int


def load_stopwords(stream):
    """One word per line; `#` and `;` comment lines and blanks are skipped."""
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream
    words = set()
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#") or line.startswith(";"):
            continue
        words.add(line.lower())
    return frozenset(words)


def default_stopwords():
    text = resources.files("aspectlab.data").joinpath("stopwords_en.txt").read_text("utf-8")
    return load_stopwords(text)


def depends(d, t_i, t_j, sentence):
    """True if t_i is the d-labelled dependent of head t_j."""
    return t_i.head == t_j.index and t_i.deprel == d


def is_candidate(token, candidates, cfilter):
    """Candidate aspect test: not a stopword, in the pruned phrase list
    (by form or lemma), and carrying an allowed POS tag."""
    form = token.form.lower()
    if form in cfilter.stopwords:
        return False
    if form not in candidates and token.lemma not in candidates:
        return False
    return token.upos in cfilter.allowed_pos


def _phase1_rule(sentence, token, lex):
    """First opinion-anchored rule (R1-R4) firing for `token`, as
    (rule, trigger_index), or None."""
    head = sentence.token(token.head) if token.head > 0 else None

    if head is not None and token.deprel == "dobj" and opinion_word(lex, head):
        return RuleId.R1, head.index

    if head is not None and token.deprel == "nsubj":
        for sibling in sentence.children(head.index):
            if sibling.deprel == "acomp" and opinion_word(lex, sibling):
                return RuleId.R2, sibling.index
        for sibling in sentence.children(head.index):
            if sibling.deprel == "advmod" and opinion_word(lex, sibling):
                return RuleId.R3, sibling.index

    if token.deprel in _OBJ_RELS:
        for child in sentence.children(token.index):
            if child.deprel == "amod" and opinion_word(lex, child):
                return RuleId.R4, child.index

    return None


def _propagation_rule(sentence, token, marked):
    """R5/R6 check for `token` against already-marked tokens, both arc
    directions, as (rule, trigger_index) or None."""
    for rule, rels in ((RuleId.R5, _COORD_RELS), (RuleId.R6, ("compound",))):
        if token.deprel in rels and token.head in marked:
            return rule, token.head
        for child in sentence.children(token.index):
            if child.deprel in rels and child.index in marked:
                return rule, child.index
    return None


def apply_rules(sentence, lex, candidates, cfilter):
    """Mark aspect-term tokens in one sentence.

    Returns (marked, matches): the set of marked 1-based indices and one
    RuleMatch per marked index, recording the first rule that fired for it
    (rule=None for modifier-extension marks).
    """
    marked = set()
    matches = []

    # opinion-anchored rules, single pass
    for token in sentence.tokens:
        if not is_candidate(token, candidates, cfilter):
            continue
        hit = _phase1_rule(sentence, token, lex)
        if hit is not None:
            marked.add(token.index)
            matches.append(RuleMatch(token.index, hit[0], hit[1]))

    # coordination/compound propagation to fixpoint
    changed = bool(marked)
    while changed:
        changed = False
        for token in sentence.tokens:
            if token.index in marked or not is_candidate(token, candidates, cfilter):
                continue
            hit = _propagation_rule(sentence, token, marked)
            if hit is not None:
                marked.add(token.index)
                matches.append(RuleMatch(token.index, hit[0], hit[1]))
                changed = True

    # contiguous left amod/compound dependents of marked nouns; opinion
    # words stay out (they anchor rules, they are not part of the term)
    for head_index in sorted(marked):
        head = sentence.token(head_index)
        if head.upos not in _NOUN_POS:
            continue
        for j in range(head_index - 1, 0, -1):
            token = sentence.token(j)
            if token.index in marked:
                continue
            if (token.head == head_index
                    and token.deprel in _EXTENSION_RELS
                    and token.form.lower() not in cfilter.stopwords
                    and not opinion_word(lex, token)):
                marked.add(j)
                matches.append(RuleMatch(j, None, head_index))
            else:
                break

    matches.sort(key=lambda m: m.token_index)
    return marked, matches


def verify_match(sentence, match, marked, lex):
    """Replay a RuleMatch's predicate against the sentence."""
    token = sentence.token(match.token_index)
    trigger = sentence.token(match.trigger_index)

    if match.rule is RuleId.R1:
        return depends("dobj", token, trigger, sentence) and opinion_word(lex, trigger)
    if match.rule in (RuleId.R2, RuleId.R3):
        rel = "acomp" if match.rule is RuleId.R2 else "advmod"
        if token.deprel != "nsubj" or token.head == 0:
            return False
        head = sentence.token(token.head)
        return depends(rel, trigger, head, sentence) and opinion_word(lex, trigger)
    if match.rule is RuleId.R4:
        return (token.deprel in _OBJ_RELS
                and depends("amod", trigger, token, sentence)
                and opinion_word(lex, trigger))
    if match.rule in (RuleId.R5, RuleId.R6):
        rels = _COORD_RELS if match.rule is RuleId.R5 else ("compound",)
        arc = ((token.deprel in rels and token.head == trigger.index)
               or (trigger.deprel in rels and trigger.head == token.index))
        return arc and trigger.index in marked
    # modifier extension
    return (trigger.index in marked
            and trigger.upos in _NOUN_POS
            and token.head == trigger.index
            and token.deprel in _EXTENSION_RELS)
