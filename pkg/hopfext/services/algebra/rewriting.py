"""
Degree-bounded completion of noncommutative presentations.

Rules are stored as ``lead -> tail``: the relation lead = tail holds in the
algebra and every word of ``tail`` is smaller than ``lead``. Completion is the
usual overlap closure: for each pair of rules whose leading words overlap,
the S-polynomial is reduced and, if nonzero, becomes a new rule.

Overlaps are processed by increasing degree up to ``degree_bound``. If some
degree D <= bound then has no normal words, every word of degree >= D is
reducible, the remaining overlaps can only produce rules with leads of degree
< D, and they are closed without a bound. Otherwise the result is
inconclusive.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from hopfext.core.errors import InconclusiveError, PreconditionError
from hopfext.core.field import FieldSpec
from hopfext.core.linalg import axpy
from hopfext.core.logger import log_step
from hopfext.services.algebra.polynomial import NcPolynomial
from hopfext.services.algebra.presentation import Presentation
from hopfext.services.algebra.words import MonomialOrder, Word


def _match(rules: dict, lengths: list[int], word: Word) -> tuple[int, Word] | None:
    """Leftmost occurrence of a leading word inside ``word``."""
    n = len(word)
    for pos in range(n):
        for ell in lengths:
            end = pos + ell
            if end > n:
                break
            piece = word[pos:end]
            if piece in rules:
                return pos, piece
    return None


def _reduce(field: FieldSpec, order: MonomialOrder, rules: dict, lengths: list[int], vec: dict) -> dict:
    """Full reduction, always rewriting the largest remaining word first."""
    pending = {w: c for w, c in vec.items() if c}
    heap = [(order.heap_key(w), w) for w in pending]
    heapq.heapify(heap)
    result: dict = {}
    add, mul = field.add, field.mul
    while heap:
        _, w = heapq.heappop(heap)
        c = pending.pop(w, 0)
        if not c:
            continue
        hit = _match(rules, lengths, w)
        if hit is None:
            result[w] = c
            continue
        pos, lead = hit
        prefix, suffix = w[:pos], w[pos + len(lead):]
        for t, tc in rules[lead].items():
            nw = prefix + t + suffix
            if nw not in pending:
                heapq.heappush(heap, (order.heap_key(nw), nw))
            nc = add(pending.get(nw, 0), mul(c, tc))
            if nc:
                pending[nw] = nc
            else:
                pending.pop(nw, None)
    return result


@dataclass
class RewriteSystem:
    """A completed (or bounded) set of oriented rules."""
    field: FieldSpec
    order: MonomialOrder
    rules: dict
    ngens: int
    complete: bool
    degree_bound: int
    _lengths: list = field(default_factory=list, repr=False)
    _word_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._lengths = sorted({len(lead) for lead in self.rules})

    def match(self, word: Word):
        return _match(self.rules, self._lengths, word)

    def is_normal(self, word: Word) -> bool:
        return self.match(word) is None

    def normal_form(self, vec: dict) -> dict:
        return _reduce(self.field, self.order, self.rules, self._lengths, vec)

    def normal_form_word(self, word: Word) -> dict:
        cached = self._word_cache.get(word)
        if cached is None:
            cached = self.normal_form({word: 1})
            self._word_cache[word] = cached
        return cached

    def normal_words(self, max_degree: int | None = None) -> list[list[Word]]:
        """Normal words by degree; stops at the first empty degree."""
        limit = self.degree_bound if max_degree is None else max_degree
        lengths = self._lengths
        levels: list[list[Word]] = [[()]]
        for _ in range(limit):
            nxt = []
            for w in levels[-1]:
                for a in range(self.ngens):
                    cand = w + (a,)
                    n = len(cand)
                    if not any(ell <= n and cand[n - ell:] in self.rules for ell in lengths):
                        nxt.append(cand)
            if not nxt:
                break
            nxt.sort(key=self.order.key)
            levels.append(nxt)
        return levels


class _Completion:
    def __init__(self, field: FieldSpec, order: MonomialOrder, ngens: int):
        self.field = field
        self.order = order
        self.ngens = ngens
        self.rules: dict[Word, dict] = {}
        self.ids: dict[Word, int] = {}
        self.lengths: list[int] = []
        self.queue: list = []
        self._next = 0
        self._seq = 0

    def reduce(self, vec: dict) -> dict:
        return _reduce(self.field, self.order, self.rules, self.lengths, vec)

    def _refresh_lengths(self):
        self.lengths = sorted({len(lead) for lead in self.rules})

    def insert(self, vec: dict) -> None:
        field = self.field
        todo = [vec]
        while todo:
            r = self.reduce(todo.pop())
            if not r:
                continue
            lead = self.order.leading(r)
            inv = field.inv(r[lead])
            tail = {w: field.neg(field.mul(inv, c)) for w, c in r.items() if w != lead}

            for old in [l for l in self.rules if _contains(l, lead)]:
                old_tail = self.rules.pop(old)
                self.ids.pop(old)
                poly = {old: 1}
                axpy(field, poly, field.neg(1), old_tail)
                todo.append(poly)

            self.rules[lead] = tail
            self.ids[lead] = self._next
            self._next += 1
            self._refresh_lengths()
            self._enqueue(lead)

    def _enqueue(self, new: Word) -> None:
        for other in list(self.rules):
            self._push_overlaps(new, other)
            if other != new:
                self._push_overlaps(other, new)

    def _push_overlaps(self, a: Word, b: Word) -> None:
        ida, idb = self.ids[a], self.ids[b]
        for k in range(1, min(len(a), len(b))):
            if a[-k:] == b[:k]:
                self._seq += 1
                heapq.heappush(self.queue, (len(a) + len(b) - k, self._seq, a, ida, b, idb, k))

    def _process(self, entry) -> None:
        _, _, a, ida, b, idb, k = entry
        if self.ids.get(a) != ida or self.ids.get(b) != idb:
            return
        field = self.field
        u, v = a[: len(a) - k], b[k:]
        s: dict = {}
        for w, c in self.rules[b].items():
            axpy(field, s, c, {u + w: 1})
        for w, c in self.rules[a].items():
            axpy(field, s, field.neg(c), {w + v: 1})
        self.insert(s)

    def run(self, bound: int) -> tuple[bool, int | None]:
        while self.queue and self.queue[0][0] <= bound:
            self._process(heapq.heappop(self.queue))

        empty_degree = self._first_empty_degree(bound)
        if empty_degree is None:
            return False, None
        while self.queue:
            self._process(heapq.heappop(self.queue))
        return True, empty_degree

    def _first_empty_degree(self, bound: int) -> int | None:
        probe = RewriteSystem(self.field, self.order, self.rules, self.ngens, False, bound)
        levels = probe.normal_words(bound)
        return len(levels) if len(levels) <= bound else None

    def interreduce(self) -> dict:
        final = {}
        for lead, tail in self.rules.items():
            final[lead] = self.reduce(tail)
        return final


def _contains(word: Word, piece: Word) -> bool:
    n, m = len(word), len(piece)
    return any(word[i:i + m] == piece for i in range(n - m + 1))


def complete(presentation: Presentation, degree_bound: int | None = None, strict: bool = True) -> RewriteSystem:
    """Complete a presentation up to ``degree_bound``.

    Raises InconclusiveError when normal words still exist at the bound (unless
    ``strict`` is False, in which case the incomplete system is returned).
    """
    bound = degree_bound if degree_bound is not None else presentation.degree_bound
    if bound is None:
        raise PreconditionError("a degree bound is required")
    top = max((rel.degree() for rel in presentation.relations), default=0)
    if bound < top:
        raise PreconditionError(f"degree bound {bound} below relation degree {top}")

    state = _Completion(presentation.field, presentation.order, len(presentation.generators))
    for rel in presentation.relations:
        state.insert(dict(rel.terms))
    finished, empty_degree = state.run(bound)

    rules = state.interreduce()
    rws = RewriteSystem(presentation.field, presentation.order, rules, len(presentation.generators), finished, bound)
    log_step("complete", name=presentation.name or None, rules=len(rules), bound=bound, complete=finished,
        top_degree=(empty_degree - 1) if empty_degree else None)
    if not finished and strict:
        raise InconclusiveError(
            f"inconclusive: raise bound (normal words still present at degree {bound})"
        )
    return rws


def normal_form(poly: NcPolynomial, rws: RewriteSystem) -> NcPolynomial:
    """Unique reduced representative of ``poly``."""
    return NcPolynomial(rws.field, rws.normal_form(poly.terms))
