"""Quality-phrase candidate lists: loading, threshold pruning, and a
self-contained n-gram miner.

External tools can produce much better lists (frequency + corpus statistics
are a crude proxy for phrase quality); `load_phrase_list` ingests those.
`mine_phrases` exists so the pipeline runs end to end with no external
dependency: unigrams are scored by normalized frequency, longer n-grams by
normalized PMI mapped onto [0, 1].
"""

import math
from collections import Counter
from dataclasses import dataclass

from .errors import PhraseFileError


def _normalize_text(text):
    return " ".join(text.lower().split())


@dataclass(frozen=True)
class QualityPhrase:
    text: str
    q: float

    def __post_init__(self):
        if not (0.0 <= self.q <= 1.0):
            raise ValueError(f"quality must be in [0,1], got {self.q}")
        if not self.text or self.text != _normalize_text(self.text):
            raise ValueError(f"phrase text not normalized: {self.text!r}")


class PhraseList:
    """Set of quality phrases keyed by exact lowercase text."""

    def __init__(self, entries=(), source="loaded", min_support=None):
        self._by_text = {}
        for entry in entries:
            existing = self._by_text.get(entry.text)
            if existing is None or entry.q > existing.q:
                self._by_text[entry.text] = entry
        self.source = source
        self.min_support = min_support

    def __contains__(self, text):
        return text in self._by_text

    def __len__(self):
        return len(self._by_text)

    def __iter__(self):
        return iter(self._by_text.values())

    def get(self, text):
        return self._by_text.get(text)

    def texts(self):
        return set(self._by_text)

    def sorted_entries(self):
        """Entries by q descending, ties lexicographic by text."""
        return sorted(self._by_text.values(), key=lambda e: (-e.q, e.text))


def load_phrase_list(stream):
    """Parse a two-column TSV of phrases and quality values.

    Column order (`q<TAB>phrase` vs `phrase<TAB>q`) is auto-detected from the
    first non-empty line. Duplicate phrases keep the maximum q.
    """
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = [ln.rstrip("\n").rstrip("\r") for ln in stream]

    q_first = None
    entries = []
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r")
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise PhraseFileError(
                f"expected 2 tab-separated columns, got {len(cols)}", line=lineno
            )
        if q_first is None:
            q_first = _is_float(cols[0]) or not _is_float(cols[1])
        q_col, text_col = (cols[0], cols[1]) if q_first else (cols[1], cols[0])
        try:
            q = float(q_col)
        except ValueError:
            raise PhraseFileError(f"unparsable quality value {q_col!r}", line=lineno) from None
        if not (0.0 <= q <= 1.0):
            raise PhraseFileError(f"quality {q} outside [0,1]", line=lineno)
        text = _normalize_text(text_col)
        if not text:
            raise PhraseFileError("empty phrase", line=lineno)
        entries.append(QualityPhrase(text=text, q=q))
    return PhraseList(entries, source="loaded")


def _is_float(s):
    try:
        float(s)
    except ValueError:
        return False
    return True


def save_phrase_list(plist, stream):
    """Write `q<TAB>phrase` lines sorted by q descending (ties by text)."""
    for entry in plist.sorted_entries():
        stream.write(f"{entry.q!r}\t{entry.text}\n")


def prune(plist, q_th):
    """Keep entries with q >= q_th; the input list is left untouched."""
    if not (0.0 <= q_th <= 1.0):
        raise ValueError(f"q_th must be in [0,1], got {q_th}")
    kept = [e for e in plist if e.q >= q_th]
    return PhraseList(kept, source=plist.source, min_support=plist.min_support)


def _is_punct_only(form):
    return not any(ch.isalnum() for ch in form)


def mine_phrases(corpus, min_support, max_n):
    """Mine candidate phrases from a parsed corpus.

    Counts lowercased-form n-grams (1..max_n) within sentence boundaries,
    skipping any n-gram that contains a punctuation-only token. Keeps n-grams
    with frequency >= min_support. Unigram q = f(w)/f_max. For n >= 2,
    q = (npmi + 1) / 2 where npmi = pmi / -log p(gram),
    pmi = log(p(gram) / prod p(token_i)), and probabilities are
    maximum-likelihood estimates over the counts of n-grams of the same
    length (tokens use the unigram counts). npmi is clamped to [-1, 1]; a
    gram with p(gram) = 1 gets npmi = 1 (perfect-collocation limit).
    """
    if min_support < 1:
        raise ValueError(f"min_support must be >= 1, got {min_support}")
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")

    counts = {n: Counter() for n in range(1, max_n + 1)}
    for sentence in corpus:
        forms = [t.form.lower() for t in sentence.tokens]
        keep = [not _is_punct_only(f) for f in forms]
        for n in range(1, max_n + 1):
            for i in range(len(forms) - n + 1):
                if all(keep[i:i + n]):
                    counts[n][tuple(forms[i:i + n])] += 1

    totals = {n: sum(c.values()) for n, c in counts.items()}
    entries = []

    if counts[1]:
        f_max = max(counts[1].values())
        for gram, f in counts[1].items():
            if f >= min_support:
                q = min(max(f / f_max, 0.0), 1.0)
                entries.append(QualityPhrase(text=gram[0], q=q))

    for n in range(2, max_n + 1):
        total_n = totals[n]
        for gram, f in counts[n].items():
            if f < min_support:
                continue
            p_gram = f / total_n
            if p_gram >= 1.0:
                npmi = 1.0
            else:
                log_indep = sum(math.log(counts[1][(tok,)] / totals[1]) for tok in gram)
                pmi = math.log(p_gram) - log_indep
                npmi = pmi / -math.log(p_gram)
            npmi = min(max(npmi, -1.0), 1.0)
            entries.append(QualityPhrase(text=" ".join(gram), q=(npmi + 1.0) / 2.0))

    return PhraseList(entries, source="mined", min_support=min_support)
