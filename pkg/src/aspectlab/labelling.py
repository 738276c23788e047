"""IOB tag assignment and end-to-end corpus labelling.

The interchange format downstream of this module is two-column CoNLL text:
one `form<TAB>tag` line per token, blank line between sentences. Adjacent
marked runs merge into a single span; plain IOB cannot express two abutting
terms without a B-after-I convention, which we deliberately do not emit.
"""

from dataclasses import dataclass
from enum import Enum

from .corpus import Sentence, Token
from .errors import LabelFileError
from .phrases import prune
from .rules import apply_rules


class IobTag(str, Enum):
    O = "O"
    B = "B"
    I = "I"


class LabelScheme(str, Enum):
    IOB = "iob"
    OB = "ob"


@dataclass(frozen=True)
class LabelledSentence:
    sentence: Sentence
    tags: tuple

    def __post_init__(self):
        if len(self.tags) != len(self.sentence.tokens):
            raise ValueError(
                f"sentence {self.sentence.id}: {len(self.tags)} tags for "
                f"{len(self.sentence.tokens)} tokens"
            )

    @property
    def id(self):
        return self.sentence.id


def assign_iob(sentence, marked):
    """Tag each maximal run of consecutive marked indices as B I I...; all
    other tokens O."""
    n = len(sentence.tokens)
    for index in marked:
        if not (1 <= index <= n):
            raise ValueError(f"marked index {index} out of range 1..{n}")
    tags = []
    for i in range(1, n + 1):
        if i not in marked:
            tags.append(IobTag.O)
        elif (i - 1) in marked:
            tags.append(IobTag.I)
        else:
            tags.append(IobTag.B)
    return LabelledSentence(sentence=sentence, tags=tuple(tags))


def to_ob(labelled):
    """Relax IOB to OB: every I becomes B."""
    tags = tuple(IobTag.B if t is IobTag.I else t for t in labelled.tags)
    return LabelledSentence(sentence=labelled.sentence, tags=tags)


def iter_labelled(corpus, phrase_list, q_th, lex, cfilter, scheme=LabelScheme.IOB):
    """Label sentences one by one, yielding (LabelledSentence, rule matches).

    The phrase list is pruned once up front, not per sentence.
    """
    scheme = LabelScheme(scheme)
    candidates = prune(phrase_list, q_th)
    for sentence in corpus:
        marked, matches = apply_rules(sentence, lex, candidates, cfilter)
        labelled = assign_iob(sentence, marked)
        if scheme is LabelScheme.OB:
            labelled = to_ob(labelled)
        yield labelled, matches


def label_corpus(corpus, phrase_list, q_th, lex, cfilter, scheme=LabelScheme.IOB):
    return [ls for ls, _ in iter_labelled(corpus, phrase_list, q_th, lex, cfilter, scheme)]


def write_labelled(labelled_sentences, stream):
    """Write the two-column labelled-corpus format, deterministically."""
    first = True
    for ls in labelled_sentences:
        if not first:
            stream.write("\n")
        first = False
        for token, tag in zip(ls.sentence.tokens, ls.tags):
            stream.write(f"{token.form}\t{tag.value}\n")


def read_labelled(stream):
    """Read the two-column format back into LabelledSentences.

    The format carries no parse information: sentence ids are 1-based
    ordinals, lemmas fall back to the lowercased form, and every token is
    attached to the root.
    """
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = [ln.rstrip("\n").rstrip("\r") for ln in stream]

    sentences = []
    rows = []

    def flush():
        if not rows:
            return
        sid = str(len(sentences) + 1)
        tokens = tuple(
            Token(index=i, form=form, lemma=form.lower(), upos="X", head=0, deprel="dep")
            for i, (form, _) in enumerate(rows, start=1)
        )
        tags = tuple(tag for _, tag in rows)
        sentences.append(LabelledSentence(Sentence(id=sid, tokens=tokens), tags))
        rows.clear()

    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r")
        if not line.strip():
            flush()
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise LabelFileError(
                f"expected `form<TAB>tag`, got {len(cols)} columns", line=lineno
            )
        form, tag = cols
        try:
            rows.append((form, IobTag(tag)))
        except ValueError:
            raise LabelFileError(f"unknown tag {tag!r}", line=lineno) from None
    flush()
    return sentences
