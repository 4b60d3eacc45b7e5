"""Dihedral Artin groups A(m) = <a, b | aba... = bab...> (m letters each side).

The word problem is solved with the left-greedy Garside normal form for type
I2(m). The Garside element D is the alternating word of length m (both
spellings are equal in the group); the simple elements are the alternating
words of length 0..m, so a simple is stored as (first letter, length). An
element is represented as

    D^k * s1 * s2 * ... * sl

where each s_i is a proper simple (length 1..m-1) and every adjacent pair is
left-weighted, which for I2(m) means: the first letter of s_{i+1} equals the
last letter of s_i. Right-multiplying by one atom either extends the last
factor (when it stays alternating), creates a fresh factor, or completes the
last factor to D, which then migrates to the front through the conjugation
automorphism tau (tau swaps the two atoms iff m is odd; D is central iff m is
even).
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import FinitePresentationData, GroupDescription
from .words import Word

Simple = tuple[int, int]  # (index of first letter in alphabet, length 1..m-1)


@dataclass(frozen=True)
class GarsideForm:
    delta_power: int
    factors: tuple[Simple, ...]

    def canonical_length(self) -> int:
        return len(self.factors)


class DihedralArtin(GroupDescription):
    def __init__(self, m: int, gens: tuple[str, str] = ("a", "b")):
        if m < 2:
            raise ValueError("label m must be >= 2")
        self.m = m
        self.alphabet = tuple(gens)

    # -- simple-element helpers ------------------------------------------

    def _last(self, s: Simple) -> int:
        first, length = s
        return first if length % 2 == 1 else 1 - first

    def _tau_simple(self, s: Simple) -> Simple:
        if self.m % 2 == 0:
            return s
        return (1 - s[0], s[1])

    def _simple_letters(self, s: Simple) -> list[int]:
        first, length = s
        return [(first + i) % 2 for i in range(length)]

    # -- core form arithmetic --------------------------------------------

    def _append_atom(self, k: int, factors: list[Simple], atom: int) -> int:
        """Right-multiply (k, factors) by a positive atom, in place; returns k."""
        if factors and self._last(factors[-1]) != atom:
            first, length = factors[-1]
            if length + 1 == self.m:
                factors.pop()
                for i, s in enumerate(factors):
                    factors[i] = self._tau_simple(s)
                return k + 1
            factors[-1] = (first, length + 1)
            return k
        factors.append((atom, 1))
        return k

    def _append_inverse_atom(self, k: int, factors: list[Simple], atom: int) -> int:
        # atom^-1 = D^-1 * w where w is the alternating word of length m-1
        # with w * atom = D, i.e. w ends in the other atom.
        k -= 1
        for i, s in enumerate(factors):
            factors[i] = self._tau_simple(s)
        end = 1 - atom
        first = end if (self.m - 1) % 2 == 1 else 1 - end
        for letter in self._simple_letters((first, self.m - 1)):
            k = self._append_atom(k, factors, letter)
        return k

    def garside_form(self, w: Word) -> GarsideForm:
        self.check_alphabet(w)
        index = {g: i for i, g in enumerate(self.alphabet)}
        k = 0
        factors: list[Simple] = []
        for gen, sign in w.letters():
            if sign > 0:
                k = self._append_atom(k, factors, index[gen])
            else:
                k = self._append_inverse_atom(k, factors, index[gen])
        return GarsideForm(k, tuple(factors))

    def form_to_word(self, form: GarsideForm) -> Word:
        delta = Word.from_pairs((self.alphabet[i % 2], 1) for i in range(self.m))
        pairs: list[tuple[str, int]] = []
        if form.delta_power > 0:
            for _ in range(form.delta_power):
                pairs.extend(delta.syllables)
        elif form.delta_power < 0:
            inv = ~delta
            for _ in range(-form.delta_power):
                pairs.extend(inv.syllables)
        for s in form.factors:
            pairs.extend((self.alphabet[letter], 1) for letter in self._simple_letters(s))
        return Word.from_pairs(pairs)

    # -- GroupDescription interface ---------------------------------------

    def normalize(self, w: Word) -> Word:
        return self.form_to_word(self.garside_form(w))

    def abelianization_basis(self) -> tuple[str, ...]:
        if self.m % 2 == 1:
            return (self.alphabet[0],)  # generators are conjugate for odd m
        return self.alphabet

    def abelianization_image(self, w: Word) -> tuple[int, ...]:
        if self.m % 2 == 1:
            return (self.height(w),)
        return tuple(w.exponent_sum(g) for g in self.alphabet)

    def presentation(self) -> FinitePresentationData:
        a, b = self.alphabet
        left = Word.from_pairs(((a, b)[i % 2], 1) for i in range(self.m))
        right = Word.from_pairs(((b, a)[i % 2], 1) for i in range(self.m))
        return FinitePresentationData(self.alphabet, (left * ~right,))

    def describe(self) -> dict:
        return {"variant": "dihedral-artin", "m": self.m, "generators": list(self.alphabet)}

    # -- extras used by the Artin pipeline --------------------------------

    def delta_power(self, w: Word) -> int:
        return self.garside_form(w).delta_power

    def canonical_length(self, w: Word) -> int:
        return self.garside_form(w).canonical_length()

    def center_generator(self) -> Word:
        """Generator of the center: D for even m, D^2 for odd m."""
        a, b = self.alphabet
        ab = Word.gen(a) * Word.gen(b)
        return ab ** (self.m // 2) if self.m % 2 == 0 else ab ** self.m
