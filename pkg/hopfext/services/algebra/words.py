"""Generators, words and the degree-lexicographic monomial order."""
from __future__ import annotations

from dataclasses import dataclass, field

Word = tuple[int, ...]
ONE: Word = ()


@dataclass(frozen=True)
class Generator:
    """A named algebra generator; ``degree`` is its multidegree in the declared grading."""
    index: int
    name: str
    degree: tuple[int, ...] = ()
    grouplike: bool = False


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-lex order: total degree (= length), then letters compared by precedence.

    ``precedence`` lists generator indices from smallest to largest.
    """
    precedence: tuple[int, ...]
    _rank: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_rank", {g: r for r, g in enumerate(self.precedence)})

    def key(self, word: Word) -> tuple:
        rank = self._rank
        return (len(word), tuple(rank[g] for g in word))

    def heap_key(self, word: Word) -> tuple:
        """Key whose ascending order is the descending monomial order."""
        rank = self._rank
        return (-len(word), tuple(-rank[g] for g in word))

    def less(self, u: Word, v: Word) -> bool:
        return self.key(u) < self.key(v)

    def leading(self, words) -> Word:
        return max(words, key=self.key)


def multidegree(word: Word, gens: list[Generator]) -> tuple[int, ...]:
    """Sum of generator degrees along a word."""
    if not gens or not gens[0].degree:
        return ()
    total = [0] * len(gens[0].degree)
    for g in word:
        for i, d in enumerate(gens[g].degree):
            total[i] += d
    return tuple(total)


def format_word(word: Word, names: list[str]) -> str:
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        parts.append(names[word[i]] if run == 1 else f"{names[word[i]]}^{run}")
        i = j
    return "*".join(parts)
