"""Dependency-parsed corpus model and CoNLL-U ingestion.

Tokenization and parsing happen outside this package (any CoNLL-U producing
parser works); here we only read, validate and serialize the columns the
pipeline uses: ID, FORM, LEMMA, UPOS, HEAD, DEPREL.
"""

import re
from dataclasses import dataclass

from .errors import ConlluError

_RANGE_ID = re.compile(r"^\d+-\d+$")
_EMPTY_NODE_ID = re.compile(r"^\d+\.\d+$")
_URL_RUN = re.compile(r"(?<!\S)(?:https?://|www\.)\S*", re.IGNORECASE)


@dataclass(frozen=True)
class Token:
    index: int          # 1-based position in the sentence
    form: str
    lemma: str
    upos: str
    head: int           # 0 = syntactic root
    deprel: str

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"token index must be >= 1, got {self.index}")
        if self.head < 0:
            raise ValueError(f"token head must be >= 0, got {self.head}")
        if self.head == self.index:
            raise ValueError(f"token {self.index} cannot be its own head")


@dataclass(frozen=True)
class Sentence:
    id: str
    tokens: tuple
    text: str = None

    def __post_init__(self):
        indices = [t.index for t in self.tokens]
        if indices != list(range(1, len(indices) + 1)):
            raise ValueError(f"sentence {self.id}: token indices not contiguous 1..n")
        n = len(self.tokens)
        for t in self.tokens:
            if t.head > n:
                raise ValueError(
                    f"sentence {self.id}: token {t.index} head {t.head} exceeds length {n}"
                )
        if n >= 1 and not any(t.head == 0 for t in self.tokens):
            raise ValueError(f"sentence {self.id}: no root token")

    def __len__(self):
        return len(self.tokens)

    def token(self, index):
        """Token at 1-based position `index`."""
        return self.tokens[index - 1]

    def children(self, index):
        """Tokens whose head is the token at 1-based position `index`."""
        return [t for t in self.tokens if t.head == index]


@dataclass(frozen=True)
class Corpus:
    sentences: tuple
    domain_tag: str = ""

    def __post_init__(self):
        seen = set()
        for s in self.sentences:
            if s.id in seen:
                raise ValueError(f"duplicate sentence id {s.id!r}")
            seen.add(s.id)

    def __len__(self):
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)


def parse_conllu(stream, domain_tag=""):
    """Read CoNLL-U text into a Corpus.

    `stream` is an iterable of lines or a string. Token lines must have 10
    tab-separated columns; multiword ranges (`3-4`) and empty nodes (`3.1`)
    are skipped. Sentence ids come from `# sent_id =` comments, falling back
    to the 1-based sentence ordinal. A LEMMA of `_` falls back to the
    lowercased FORM.
    """
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = [ln.rstrip("\n").rstrip("\r") for ln in stream]

    sentences = []
    pending = []          # (lineno, columns) for the current block
    sent_id = None
    sent_text = None

    def flush(last_lineno):
        nonlocal pending, sent_id, sent_text
        if not pending:
            sent_id = None
            sent_text = None
            return
        sid = sent_id if sent_id is not None else str(len(sentences) + 1)
        tokens = []
        n = len(pending)
        for lineno, cols in pending:
            idx, head = cols[0], cols[6]
            if head > n:
                raise ConlluError(
                    f"HEAD {head} out of range for sentence of length {n}", line=lineno
                )
            if head == idx:
                raise ConlluError(f"token {idx} is its own head", line=lineno)
            lemma = cols[2] if cols[2] != "_" else cols[1].lower()
            tokens.append(
                Token(index=idx, form=cols[1], lemma=lemma, upos=cols[3],
                      head=head, deprel=cols[7])
            )
        indices = [t.index for t in tokens]
        if indices != list(range(1, n + 1)):
            raise ConlluError(
                f"token ids not contiguous 1..{n}: {indices}", line=pending[0][0]
            )
        if not any(t.head == 0 for t in tokens):
            raise ConlluError(
                f"sentence {sid!r} has no root token (HEAD=0)", line=pending[0][0]
            )
        try:
            sentences.append(Sentence(id=sid, tokens=tuple(tokens), text=sent_text))
        except ValueError as exc:
            raise ConlluError(str(exc), line=pending[0][0]) from exc
        pending = []
        sent_id = None
        sent_text = None

    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            flush(lineno)
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("sent_id"):
                _, _, value = body.partition("=")
                sent_id = value.strip()
            elif body.startswith("text"):
                _, _, value = body.partition("=")
                sent_text = value.strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise ConlluError(f"expected 10 columns, got {len(cols)}", line=lineno)
        if _RANGE_ID.match(cols[0]) or _EMPTY_NODE_ID.match(cols[0]):
            continue
        try:
            idx = int(cols[0])
        except ValueError:
            raise ConlluError(f"non-integer token ID {cols[0]!r}", line=lineno) from None
        try:
            head = int(cols[6])
        except ValueError:
            raise ConlluError(f"non-integer HEAD {cols[6]!r}", line=lineno) from None
        parsed = list(cols)
        parsed[0] = idx
        parsed[6] = head
        pending.append((lineno, parsed))

    flush(len(lines) + 1)
    try:
        return Corpus(sentences=tuple(sentences), domain_tag=domain_tag)
    except ValueError as exc:
        raise ConlluError(str(exc)) from exc


def serialize_conllu(corpus):
    """Render a Corpus back to CoNLL-U text (unused columns as `_`)."""
    blocks = []
    for s in corpus:
        lines = [f"# sent_id = {s.id}"]
        if s.text is not None:
            lines.append(f"# text = {s.text}")
        for t in s.tokens:
            lines.append(
                "\t".join([str(t.index), t.form, t.lemma, t.upos, "_", "_",
                           str(t.head), t.deprel, "_", "_"])
            )
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def clean_review(text):
    """Strip URL-looking tokens and normalize whitespace in raw review text."""
    text = _URL_RUN.sub("", text)
    return " ".join(text.split())
