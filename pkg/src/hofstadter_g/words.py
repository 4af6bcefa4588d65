"""Words over {1, 2}: the w_n family, level words, and factorization checks.

Words are plain ``str`` values such as ``"212"``. Building a single w_n is
capped; factorization checks never materialize more of a word than the
target they are compared against.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .errors import InsufficientHorizonError, RangeError, ValidationError
from .recurrence import FrequencyTable

WORD_CAP = 40
ALPHABET = frozenset("12")


def check_word(word: str) -> str:
    bad = set(word) - ALPHABET
    if bad:
        raise ValidationError(f"word has symbols outside {{1, 2}}: {sorted(bad)}")
    return word


@dataclass(frozen=True)
class FactorizationSpec:
    """How to build w_n and how to multiply the w_n together.

    ``seeds`` are w_1..w_s. For n > s, w_n = w_{n-a} w_{n-b} with
    ``rule = (a, b)``. ``prefix`` is a finite list of (index, power)
    factors; ``tail``, when set, is (start, power) and appends
    w_start^power w_{start+1}^power ... forever.
    """

    seeds: tuple[str, ...] = ("2", "1", "2")
    rule: tuple[int, int] = (2, 1)
    prefix: tuple[tuple[int, int], ...] = ((1, 1), (2, 1))
    tail: tuple[int, int] | None = (3, 2)

    def __post_init__(self):
        if not self.seeds:
            raise ValidationError("at least one seed word is required")
        for s in self.seeds:
            if not s:
                raise ValidationError("seed words must be non-empty")
            check_word(s)
        a, b = self.rule
        if min(a, b) < 1 or max(a, b) > len(self.seeds):
            raise ValidationError(
                f"rule {self.rule} must refer back 1..{len(self.seeds)} places"
            )
        factors = list(self.prefix) + ([self.tail] if self.tail else [])
        for index, power in factors:
            if index < 1:
                raise ValidationError(f"factor index {index} must be >= 1")
            if power < 1:
                raise ValidationError(f"factor power {power} must be >= 1")

    def factors(self) -> Iterator[tuple[int, int]]:
        yield from self.prefix
        if self.tail:
            index, power = self.tail
            while True:
                yield index, power
                index += 1


COROLLARY = FactorizationSpec()
INTRO_VARIANT = FactorizationSpec(rule=(1, 2))
PLAIN_FROM_3 = FactorizationSpec(prefix=(), tail=(3, 1))

SCHEMES = {
    "squares-from-3": "1,2,3..^2",
    "plain-from-3": "3..",
}

_FACTOR = re.compile(r"^(\d+)(\.\.)?(?:\^(\d+))?$")


def parse_scheme(text: str) -> tuple[tuple[tuple[int, int], ...], tuple[int, int] | None]:
    text = SCHEMES.get(text, text)
    prefix = []
    tail = None
    items = [t.strip() for t in text.split(",") if t.strip()]
    if not items:
        raise ValidationError("empty product scheme")
    for pos, item in enumerate(items):
        m = _FACTOR.match(item)
        if not m:
            raise ValidationError(f"bad factor {item!r} in scheme {text!r}")
        index, power = int(m.group(1)), int(m.group(3) or 1)
        if m.group(2):
            if pos != len(items) - 1:
                raise ValidationError(f"open-ended factor {item!r} must come last")
            tail = (index, power)
        else:
            prefix.append((index, power))
    return tuple(prefix), tail


def parse_spec(text: str) -> FactorizationSpec:
    """Parse the compact text form used on the command line.

    ``seeds=2,1,2;rule=2,1;scheme=1,2,3..^2``. Each field is optional and
    defaults to the classical factorization; a bare scheme keyword such as
    ``plain-from-3`` is also accepted.
    """
    fields = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        if not sep:
            key, value = "scheme", key
        key = key.strip()
        if key not in ("seeds", "rule", "scheme"):
            raise ValidationError(f"unknown field {key!r} in spec {text!r}")
        fields[key] = value.strip()
    kwargs = {}
    if "seeds" in fields:
        kwargs["seeds"] = tuple(s.strip() for s in fields["seeds"].split(","))
    if "rule" in fields:
        try:
            a, b = (int(x) for x in fields["rule"].split(","))
        except ValueError:
            raise ValidationError(f"rule must be two integers, got {fields['rule']!r}")
        kwargs["rule"] = (a, b)
    if "scheme" in fields:
        kwargs["prefix"], kwargs["tail"] = parse_scheme(fields["scheme"])
    return FactorizationSpec(**kwargs)


class _Family:
    """w_1, w_2, ... for a spec, each truncated to ``limit`` symbols.

    Truncation is exact for prefixes: the first L symbols of xy only
    depend on the first L symbols of x and of y.
    """

    def __init__(self, spec: FactorizationSpec, limit: int | None = None):
        self.spec = spec
        self.limit = limit
        self.words = [""] + [self._cut(s) for s in spec.seeds]

    def _cut(self, word: str) -> str:
        return word if self.limit is None else word[: self.limit]

    def __getitem__(self, n: int) -> str:
        a, b = self.spec.rule
        while len(self.words) <= n:
            m = len(self.words)
            self.words.append(self._cut(self.words[m - a] + self.words[m - b]))
        return self.words[n]


def build_w(n: int, spec: FactorizationSpec = COROLLARY) -> str:
    """w_1 = 2, w_2 = 1, w_3 = 2, w_n = w_{n-2} w_{n-1} (by default)."""
    if n < 1:
        raise ValidationError(f"word index must be >= 1, got {n}")
    if n > WORD_CAP:
        raise RangeError(f"w_{n} exceeds the word cap {WORD_CAP}")
    return _Family(spec)[n]


def build_level_word(h: int) -> str:
    """Children counts across height h, in increasing label order."""
    if h < 0:
        raise ValidationError(f"height must be >= 0, got {h}")
    if h > WORD_CAP:
        raise RangeError(f"W_{h} exceeds the word cap {WORD_CAP}")
    if h == 0:
        return "2"
    prev, cur = "2", "12"
    for _ in range(h - 1):
        prev, cur = cur, prev + cur
    return cur


def frequency_word(prefix_len: int, freq: FrequencyTable) -> str:
    if prefix_len < 1:
        raise ValidationError(f"prefix length must be >= 1, got {prefix_len}")
    if freq.complete_upto < prefix_len:
        raise InsufficientHorizonError(
            f"frequency counts are complete only to {freq.complete_upto}; "
            f"evaluate the sequence to a larger horizon to get {prefix_len} symbols"
        )
    return check_word("".join(map(str, freq.counts[1 : prefix_len + 1])))


@dataclass(frozen=True)
class MatchReport:
    """Outcome of comparing an expanded factorization with a target word.

    ``status`` is ``"match"`` (agrees on the whole target), ``"mismatch"``
    (``position`` is the first differing 1-based position) or
    ``"exhausted"`` (the product ended after ``matched`` symbols).
    """

    status: str
    matched: int
    target_length: int
    position: int | None = None
    expected: str | None = None
    found: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "match"

    def summary(self) -> str:
        if self.status == "match":
            return f"match {self.matched}/{self.target_length}"
        if self.status == "mismatch":
            return (
                f"mismatch at {self.position} (expected {self.expected}, "
                f"got {self.found}); matched {self.matched}/{self.target_length}"
            )
        return f"exhausted after {self.matched}/{self.target_length}"


def expand(spec: FactorizationSpec, limit: int) -> Iterator[str]:
    """Yield the product's factors, stopping once ``limit`` symbols are out."""
    family = _Family(spec, limit)
    produced = 0
    for index, power in spec.factors():
        if produced >= limit:
            return
        word = family[index]
        for _ in range(power):
            yield word
            produced += len(word)
            if produced >= limit:
                return


def verify_factorization(spec: FactorizationSpec, target: str) -> MatchReport:
    check_word(target)
    total = len(target)
    pos = 0
    for chunk in expand(spec, total):
        piece = chunk[: total - pos]
        if target.startswith(piece, pos):
            pos += len(piece)
            continue
        for offset, (want, got) in enumerate(zip(target[pos:], piece)):
            if want != got:
                return MatchReport(
                    "mismatch", pos + offset, total, pos + offset + 1, want, got
                )
    if pos < total:
        return MatchReport("exhausted", pos, total)
    return MatchReport("match", pos, total)
