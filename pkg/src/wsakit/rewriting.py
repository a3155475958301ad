"""Noncommutative path rewriting to normal forms, with overlap completion.

Words are tuples of arrow names read left to right.  The term order
ranks shorter words higher, breaking ties lexicographically, so every
binomial relation is oriented with its short product side as the
rewritable pattern and the long cycle path as the replacement.  Rules
therefore never shorten a word, and all computation happens inside the
degree-truncated algebra: any word of length >= cap is treated as zero.

Soundness of the truncation: the admitted inputs are ideals containing
some power of the arrow ideal, so the radical of the true quotient is
nilpotent.  If every normal form has length <= cap - 2, each word of
length max_basis_length + 1 rewrites to terms of ever-growing length,
hence lies in I + R^cap, hence in I by nilpotency.  When a normal form
of length cap - 1 shows up, that argument breaks down and completion
fails with a diagnostic asking for a larger cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import derive_orbits


class RewriteError(ValueError):
    pass


def spec_cap(spec):
    """Default truncation degree for a biserial quiver spec."""
    orbits = derive_orbits(spec)
    return 2 * max(orbits.mn(a) for a in spec.quiver.arrow_map) + 2


def _order_key(word):
    # max() under this key picks the shortest word, ties to the lex-greater
    return (-len(word), word)


@dataclass(frozen=True)
class Rule:
    lhs: tuple
    rhs: tuple  # tuple of (word, coefficient)


class RewriteSystem:
    """A confluent, cap-truncated rewriting system for one presentation."""

    def __init__(self, presentation, cap):
        if cap < 4:
            raise RewriteError("cap must be at least 4")
        self.presentation = presentation
        self.quiver = presentation.quiver
        self.field = presentation.field
        self.cap = cap
        self.rules = {}
        self._by_first = {}
        self._nf_cache = {}
        self.confluent = False
        self.basis_words = None
        self.max_basis_length = None

    # -- construction -------------------------------------------------

    def _add_rule(self, lhs, rhs):
        self.rules[lhs] = Rule(lhs, tuple(sorted(rhs.items())))
        self._by_first.setdefault(lhs[0], []).append(self.rules[lhs])
        self._nf_cache.clear()

    def _relation_combo(self, relation):
        combo = {}
        for coeff, path in relation.terms:
            if path.is_trivial:
                raise RewriteError(
                    "relation contains a trivial path: the ideal would contain an idempotent"
                )
            combo[path.arrows] = combo.get(path.arrows, self.field.zero) + coeff
        return {w: c for w, c in combo.items() if c}

    def _orient(self, combo):
        lead = max(combo, key=_order_key)
        lc = combo[lead]
        rhs = {w: -c / lc for w, c in combo.items() if w != lead}
        return lead, rhs

    # -- reduction ----------------------------------------------------

    def _find_match(self, word):
        for i, first in enumerate(word):
            for rule in self._by_first.get(first, ()):
                L = len(rule.lhs)
                if word[i : i + L] == rule.lhs:
                    return i, rule
        return None

    def normal_form_word(self, word):
        """Normal form of a single word as a word -> coefficient dict."""
        if len(word) >= self.cap:
            return {}
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        match = self._find_match(word)
        if match is None:
            result = {word: self.field.one}
        else:
            i, rule = match
            L = len(rule.lhs)
            result = {}
            for rw, rc in rule.rhs:
                sub = word[:i] + rw + word[i + L :]
                for w2, c2 in self.normal_form_word(sub).items():
                    acc = result.get(w2, self.field.zero) + rc * c2
                    if acc:
                        result[w2] = acc
                    elif w2 in result:
                        del result[w2]
        self._nf_cache[word] = result
        return result

    def reduce_combo(self, combo):
        out = {}
        for word, coeff in combo.items():
            if not coeff:
                continue
            for w2, c2 in self.normal_form_word(word).items():
                acc = out.get(w2, self.field.zero) + coeff * c2
                if acc:
                    out[w2] = acc
                elif w2 in out:
                    del out[w2]
        return out

    def reduce_relation(self, relation):
        return self.reduce_combo(self._relation_combo(relation))

    def is_zero(self, relation):
        return not self.reduce_relation(relation)

    # -- completion ---------------------------------------------------

    def _overlap_words(self, r1, r2):
        """Superwords where r1 and r2 both fire, with the two rewrite routes."""
        l1, l2 = r1.lhs, r2.lhs
        out = []
        for k in range(1, min(len(l1), len(l2))):
            if l1[-k:] == l2[:k]:
                w = l1 + l2[k:]
                out.append((w, 0, r1, len(l1) - k, r2))
        if len(l2) < len(l1):
            for i in range(len(l1) - len(l2) + 1):
                if l1[i : i + len(l2)] == l2:
                    out.append((l1, 0, r1, i, r2))
        return out

    def _route(self, word, pos, rule):
        L = len(rule.lhs)
        combo = {}
        for rw, rc in rule.rhs:
            sub = word[:pos] + rw + word[pos + L :]
            for w2, c2 in self.normal_form_word(sub).items():
                acc = combo.get(w2, self.field.zero) + rc * c2
                if acc:
                    combo[w2] = acc
                elif w2 in combo:
                    del combo[w2]
        return combo

    def _resolve(self, overlap):
        word, p1, r1, p2, r2 = overlap
        if len(word) >= self.cap:
            return None
        c1 = self._route(word, p1, r1)
        c2 = self._route(word, p2, r2)
        diff = dict(c1)
        for w, c in c2.items():
            acc = diff.get(w, self.field.zero) - c
            if acc:
                diff[w] = acc
            elif w in diff:
                del diff[w]
        return diff or None

    def complete(self):
        from collections import deque

        queue = deque()
        rule_list = list(self.rules.values())
        for r1 in rule_list:
            for r2 in rule_list:
                queue.append((r1.lhs, r2.lhs))
        while queue:
            lhs1, lhs2 = queue.popleft()
            r1 = self.rules.get(lhs1)
            r2 = self.rules.get(lhs2)
            if r1 is None or r2 is None:
                continue
            for overlap in self._overlap_words(r1, r2):
                diff = self._resolve(overlap)
                if not diff:
                    continue
                lead, rhs = self._orient(diff)
                if lead in self.rules:
                    raise RewriteError("internal: derived pattern already present")
                self._add_rule(lead, rhs)
                for other in list(self.rules):
                    queue.append((lead, other))
                    queue.append((other, lead))
        self.confluent = self._verify_confluence()
        if not self.confluent:
            raise RewriteError("completion finished but an overlap still fails to resolve")

    def _verify_confluence(self):
        rule_list = list(self.rules.values())
        for r1 in rule_list:
            for r2 in rule_list:
                for overlap in self._overlap_words(r1, r2):
                    if self._resolve(overlap):
                        return False
        return True

    # -- basis ---------------------------------------------------------

    def _enumerate_basis(self):
        words = []
        lhs_list = list(self.rules)

        def is_normal_suffix(word):
            for lhs in lhs_list:
                if len(lhs) <= len(word) and word[-len(lhs):] == lhs:
                    return False
            return True

        for v in sorted(self.quiver.vertices):
            stack = [()]
            while stack:
                word = stack.pop()
                if word:
                    words.append(word)
                if len(word) >= self.cap - 1:
                    raise RewriteError(
                        f"normal form {'*'.join(word)} reaches length {self.cap - 1}: "
                        f"cannot certify finite dimension below cap {self.cap}; raise the cap"
                    )
                at = self.quiver.target(word[-1]) if word else v
                for a in sorted(self.quiver.outgoing.get(at, ())):
                    w2 = word + (a,)
                    if is_normal_suffix(w2):
                        stack.append(w2)
        self.basis_words = sorted(words, key=lambda w: (len(w), w))
        self.max_basis_length = max((len(w) for w in words), default=0)


def complete_rewriting(presentation, cap):
    """Build and certify a confluent rewriting system for the presentation."""
    rs = RewriteSystem(presentation, cap)
    for relation in presentation.relations:
        combo = rs._relation_combo(relation)
        combo = rs.reduce_combo(combo)
        if not combo:
            continue
        lead, rhs = rs._orient(combo)
        rs._add_rule(lead, rhs)
    rs.complete()
    rs._enumerate_basis()
    return rs
