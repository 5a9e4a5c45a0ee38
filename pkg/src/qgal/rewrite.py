"""Normal forms in finitely presented algebras via oriented rewriting.

Rules rewrite a leading word to a strictly smaller polynomial under a
degree-lexicographic order, so reduction terminates and never raises
degree.  Overlap (diamond-lemma) checking certifies local confluence up
to a degree bound; bounded completion adds oriented differences of
divergent reductions until the bound is clean.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernel
from .ncpoly import AlgebraError, Alphabet, NCPoly
from .scalars import S_ONE


class RewriteError(AlgebraError):
    pass


class TrivialIdealError(RewriteError):
    """A reduction produced a nonzero scalar: the ideal contains 1."""


class CompletionBudgetError(RewriteError):
    pass


class ConfluenceError(RewriteError):
    pass


class MonomialOrder:
    """Degree-lexicographic order on words, given a generator permutation.

    generator_order lists generator indices from smallest to largest.
    """

    __slots__ = ("generator_order", "rank")

    def __init__(self, alphabet: Alphabet, generator_order=None):
        if generator_order is None:
            generator_order = list(range(len(alphabet)))
        if sorted(generator_order) != list(range(len(alphabet))):
            raise RewriteError("generator_order must be a permutation of the alphabet")
        self.generator_order = tuple(generator_order)
        rank = [0] * len(alphabet)
        for pos, gen in enumerate(generator_order):
            rank[gen] = pos
        self.rank = tuple(rank)

    def key(self, word):
        return (len(word), tuple(self.rank[i] for i in word))

    def less(self, a, b) -> bool:
        return self.key(a) < self.key(b)

    def leading_word(self, poly: NCPoly):
        return max(poly.terms, key=self.key)


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple
    rhs: NCPoly

    def as_poly(self, alphabet) -> NCPoly:
        return NCPoly(alphabet, {self.lhs: S_ONE}) - self.rhs


def orient(poly: NCPoly, order: MonomialOrder) -> RewriteRule | None:
    """Turn a relation (poly = 0) into a rule rewriting its leading word."""
    if poly.is_zero():
        return None
    lead = order.leading_word(poly)
    if not lead:
        raise TrivialIdealError("relation reduces to a nonzero scalar")
    c = poly.terms[lead]
    rest = NCPoly(
        poly.alphabet, {w: v for w, v in poly.terms.items() if w != lead}
    )
    rhs = rest.scale(-c.inv())
    for w in rhs.terms:
        if not order.less(w, lead):
            raise RewriteError("orientation failed: rhs word not smaller than lhs")
    return RewriteRule(lead, rhs)


class RewriteSystem:
    """Immutable oriented rewriting system with a memoized normal form."""

    def __init__(self, alphabet: Alphabet, rules, order: MonomialOrder,
                 completion_degree: int = 4, rule_cap: int = 500):
        self.alphabet = alphabet
        self.order = order
        self.rules = tuple(rules)
        self.completion_degree = completion_degree
        self.rule_cap = rule_cap
        buckets = {}
        for idx, rule in enumerate(self.rules):
            buckets.setdefault(rule.lhs[0], []).append((rule.lhs, idx))
        for bucket in buckets.values():
            bucket.sort(key=lambda t: -len(t[0]))
        self._buckets = buckets
        self._nf_cache = {(): {(): S_ONE}}

    # -- normal form -------------------------------------------------------

    def is_normal_word(self, word) -> bool:
        return not kernel.has_subword(word, self._buckets)

    def _nf_word(self, word):
        """Normal form of a single word as a map word -> scalar."""
        cache = self._nf_cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        stack = [word]
        find = kernel.find_first_match
        while stack:
            cur = stack[-1]
            if cur in cache:
                stack.pop()
                continue
            m = find(cur, self._buckets)
            if m is None:
                cache[cur] = {cur: S_ONE}
                stack.pop()
                continue
            pos, idx, llen = m
            rule = self.rules[idx]
            prefix, suffix = cur[:pos], cur[pos + llen :]
            pending = []
            children = []
            for w, c in rule.rhs.terms.items():
                child = prefix + w + suffix
                children.append((child, c))
                if child not in cache:
                    pending.append(child)
            if pending:
                stack.extend(pending)
                continue
            acc = {}
            for child, c in children:
                for w, v in cache[child].items():
                    s = acc.get(w)
                    s = c * v if s is None else s + c * v
                    if s.is_zero():
                        acc.pop(w, None)
                    else:
                        acc[w] = s
            cache[cur] = acc
            stack.pop()
        return cache[word]

    def normal_form(self, poly: NCPoly) -> NCPoly:
        if poly.alphabet != self.alphabet:
            raise RewriteError("polynomial is over a different alphabet")
        acc = {}
        for word, c in poly.terms.items():
            for w, v in self._nf_word(word).items():
                s = acc.get(w)
                s = c * v if s is None else s + c * v
                if s.is_zero():
                    acc.pop(w, None)
                else:
                    acc[w] = s
        return NCPoly(self.alphabet, acc)

    def nf(self, poly: NCPoly) -> NCPoly:
        return self.normal_form(poly)

    # -- overlaps and completion ------------------------------------------

    def check_overlaps(self, d: int):
        """All overlap ambiguities of total degree <= d whose two
        reductions disagree.  Empty list = local confluence up to d."""
        if d > self.completion_degree:
            raise RewriteError(
                f"requested degree {d} exceeds completion bound {self.completion_degree}"
            )
        return self._obstructions(d)

    def _obstructions(self, d: int):
        out = []
        rules = self.rules
        for i, r1 in enumerate(rules):
            l1 = r1.lhs
            for j, r2 in enumerate(rules):
                l2 = r2.lhs
                # proper overlaps: a suffix of l1 equals a prefix of l2
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] != l2[:k]:
                        continue
                    word = l1 + l2[k:]
                    if len(word) > d:
                        continue
                    left = self.normal_form(
                        r1.rhs * NCPoly(self.alphabet, {l2[k:]: S_ONE})
                    )
                    right = self.normal_form(
                        NCPoly(self.alphabet, {l1[: len(l1) - k]: S_ONE}) * r2.rhs
                    )
                    diff = left - right
                    if not diff.is_zero():
                        out.append(Obstruction(word, i, j, diff))
                # inclusion ambiguities, including duplicated left-hand
                # sides (should not appear when inter-reduced)
                if i != j and len(l2) <= len(l1) and len(l1) <= d:
                    for pos in range(len(l1) - len(l2) + 1):
                        if l1[pos : pos + len(l2)] != l2:
                            continue
                        inner = (
                            NCPoly(self.alphabet, {l1[:pos]: S_ONE})
                            * r2.rhs
                            * NCPoly(self.alphabet, {l1[pos + len(l2) :]: S_ONE})
                        )
                        diff = self.normal_form(r1.rhs) - self.normal_form(inner)
                        if not diff.is_zero():
                            out.append(Obstruction(l1, i, j, diff))
        return out


@dataclass
class Obstruction:
    word: tuple
    rule_i: int
    rule_j: int
    diff: NCPoly


def build_system(alphabet, relations, order, completion_degree=4, rule_cap=500):
    """Orient a relation list into an inter-reduced rewrite system."""
    rules = []
    for rel in relations:
        rule = orient(rel, order)
        if rule is not None:
            rules.append(rule)
    rules = _interreduce(alphabet, rules, order, completion_degree, rule_cap)
    return RewriteSystem(alphabet, rules, order, completion_degree, rule_cap)


def _interreduce(alphabet, rules, order, completion_degree, rule_cap):
    """Reduce every rule by the others until no rule's polynomial changes."""
    polys = [r.as_poly(alphabet) for r in rules]
    changed = True
    while changed:
        changed = False
        for i in range(len(polys)):
            if polys[i] is None:
                continue
            others = [
                orient(p, order)
                for j, p in enumerate(polys)
                if j != i and p is not None
            ]
            rs = RewriteSystem(alphabet, others, order, completion_degree, rule_cap)
            reduced = rs.normal_form(polys[i])
            if reduced != polys[i]:
                changed = True
                polys[i] = None if reduced.is_zero() else reduced
    return [orient(p, order) for p in polys if p is not None]


def complete(rs: RewriteSystem, d: int) -> RewriteSystem:
    """Bounded-degree completion: resolve all overlap obstructions of
    degree <= d by adding oriented differences of divergent reductions."""
    current = rs
    while True:
        obstructions = current._obstructions(d)
        if not obstructions:
            return current
        polys = [r.as_poly(current.alphabet) for r in current.rules]
        for ob in obstructions:
            polys.append(ob.diff)
        if len(polys) > current.rule_cap:
            raise CompletionBudgetError(
                f"completion exceeded rule cap {current.rule_cap}"
            )
        rules = [orient(p, current.order) for p in polys]
        rules = [r for r in rules if r is not None]
        rules = _interreduce(
            current.alphabet, rules, current.order,
            current.completion_degree, current.rule_cap,
        )
        if len(rules) > current.rule_cap:
            raise CompletionBudgetError(
                f"completion exceeded rule cap {current.rule_cap}"
            )
        current = RewriteSystem(
            current.alphabet, rules, current.order,
            max(current.completion_degree, d), current.rule_cap,
        )


def word_basis(rs: RewriteSystem, d: int):
    """All normal words of length <= d, sorted by the monomial order.

    Requires the system to be confluence-certified at degree d, so the
    diamond lemma makes these a basis of the degree truncation.
    """
    if rs._obstructions(min(d, rs.completion_degree)):
        raise ConfluenceError(
            f"system is not locally confluent up to degree {d}"
        )
    ngen = len(rs.alphabet)
    words = []

    def extend(word):
        words.append(word)
        if len(word) == d:
            return
        for g in range(ngen):
            w = word + (g,)
            # only the new suffixes can introduce a lhs occurrence
            if _suffix_normal(w, rs):
                extend(w)

    extend(())
    words.sort(key=rs.order.key)
    return words


def _suffix_normal(word, rs: RewriteSystem):
    for rule in rs.rules:
        m = len(rule.lhs)
        if m <= len(word) and word[-m:] == rule.lhs:
            return False
    return True
