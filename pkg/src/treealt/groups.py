"""Group descriptions with exact normal forms.

Every variant supplies a generator alphabet, a ``normalize`` that is a
canonical form (two words are equal in the group iff their normal forms are
identical), an identity test, and an abelianization image. The combination
variants (amalgams, HNN extensions) live in :mod:`treealt.amalgam`; dihedral
Artin groups in :mod:`treealt.garside`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import UnsupportedMembership, UnsupportedWordProblem
from .words import Word


class GroupDescription:
    """Base class: a group with a decidable word problem on its alphabet."""

    alphabet: tuple[str, ...]

    def normalize(self, w: Word) -> Word:
        raise NotImplementedError

    def is_identity(self, w: Word) -> bool:
        return self.normalize(w).is_identity()

    def equal(self, u: Word, v: Word) -> bool:
        return self.normalize(u * ~v).is_identity()

    def abelianization_basis(self) -> tuple[str, ...]:
        """Labels for the coordinates of abelianization_image."""
        return self.alphabet

    def abelianization_image(self, w: Word) -> tuple[int, ...]:
        raise NotImplementedError

    def height(self, w: Word) -> int:
        """Sum of all generator exponents (the all-generators-to-1 map)."""
        return sum(e for _, e in w.syllables)

    def presentation(self) -> Optional["FinitePresentationData"]:
        return None

    def check_alphabet(self, w: Word) -> None:
        bad = w.generators() - set(self.alphabet)
        if bad:
            raise UnsupportedWordProblem(f"generators {sorted(bad)} not in alphabet {self.alphabet}")

    def random_word(self, rng, length: int) -> Word:
        w = Word()
        for _ in range(length):
            gen = rng.choice(self.alphabet)
            w = w * Word.gen(gen, rng.choice((1, -1)))
        return w

    def describe(self) -> dict:
        """JSON-ready description; inverse of treealt.bass_serre.group_from_json."""
        raise NotImplementedError


@dataclass(frozen=True)
class FinitePresentationData:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]


class TrivialGroup(GroupDescription):
    alphabet: tuple[str, ...] = ()

    def normalize(self, w: Word) -> Word:
        return Word()

    def abelianization_image(self, w: Word) -> tuple[int, ...]:
        return ()

    def presentation(self) -> FinitePresentationData:
        return FinitePresentationData((), ())

    def describe(self) -> dict:
        return {"variant": "trivial"}


class FiniteCyclic(GroupDescription):
    def __init__(self, order: int, gen: str = "a"):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        self.alphabet = (gen,)

    def normalize(self, w: Word) -> Word:
        self.check_alphabet(w)
        e = w.exponent_sum(self.alphabet[0]) % self.order
        return Word.gen(self.alphabet[0], e) if e else Word()

    def abelianization_image(self, w: Word) -> tuple[int, ...]:
        return (w.exponent_sum(self.alphabet[0]) % self.order,)

    def presentation(self) -> FinitePresentationData:
        return FinitePresentationData(self.alphabet, (Word.gen(self.alphabet[0], self.order),))

    def describe(self) -> dict:
        return {"variant": "finite-cyclic", "order": self.order, "generators": list(self.alphabet)}


class FreeAbelian(GroupDescription):
    def __init__(self, rank: int, gens: Sequence[str] | None = None):
        self.rank = rank
        self.alphabet = tuple(gens) if gens else tuple(f"x{i + 1}" for i in range(rank))
        if len(self.alphabet) != rank:
            raise ValueError("generator list does not match rank")

    def normalize(self, w: Word) -> Word:
        self.check_alphabet(w)
        return Word.from_pairs((g, w.exponent_sum(g)) for g in self.alphabet)

    def abelianization_image(self, w: Word) -> tuple[int, ...]:
        return tuple(w.exponent_sum(g) for g in self.alphabet)

    def presentation(self) -> FinitePresentationData:
        from .words import commutator

        rels = tuple(
            commutator(Word.gen(a), Word.gen(b)) for a, b in itertools.combinations(self.alphabet, 2)
        )
        return FinitePresentationData(self.alphabet, rels)

    def describe(self) -> dict:
        return {"variant": "free-abelian", "rank": self.rank, "generators": list(self.alphabet)}


class FreeGroup(GroupDescription):
    def __init__(self, rank: int, gens: Sequence[str] | None = None):
        self.rank = rank
        self.alphabet = tuple(gens) if gens else tuple("abcdefgh"[i] for i in range(rank))
        if len(self.alphabet) != rank:
            raise ValueError("generator list does not match rank")

    def normalize(self, w: Word) -> Word:
        self.check_alphabet(w)
        return w  # Word construction already free-reduces.

    def abelianization_image(self, w: Word) -> tuple[int, ...]:
        return tuple(w.exponent_sum(g) for g in self.alphabet)

    def presentation(self) -> FinitePresentationData:
        return FinitePresentationData(self.alphabet, ())

    def describe(self) -> dict:
        return {"variant": "free", "rank": self.rank, "generators": list(self.alphabet)}


class GraphProductOfZ(GroupDescription):
    """Right-angled Artin group: generators commute iff joined by an edge.

    Normal form is the ShortLex-least shuffle: syllables with the same
    generator are merged across commuting blocks, then adjacent commuting
    syllables are sorted by generator name.
    """

    def __init__(self, gens: Sequence[str], edges: Iterable[tuple[str, str]]):
        self.alphabet = tuple(gens)
        self.edges = frozenset(frozenset(e) for e in edges)
        for e in self.edges:
            if len(e) != 2 or not e <= set(gens):
                raise ValueError(f"bad edge {set(e)}")

    def commutes(self, a: str, b: str) -> bool:
        return a == b or frozenset((a, b)) in self.edges

    def normalize(self, w: Word) -> Word:
        self.check_alphabet(w)
        sylls = list(w.syllables)
        changed = True
        while changed:
            changed = False
            # Merge: same generator with only commuting syllables in between.
            for i in range(len(sylls)):
                for j in range(i + 1, len(sylls)):
                    if sylls[j][0] == sylls[i][0]:
                        if all(self.commutes(sylls[k][0], sylls[i][0]) for k in range(i + 1, j)):
                            exp = sylls[i][1] + sylls[j][1]
                            del sylls[j]
                            if exp == 0:
                                del sylls[i]
                            else:
                                sylls[i] = (sylls[i][0], exp)
                            changed = True
                        break
                if changed:
                    break
            if changed:
                continue
            # Shuffle: bubble commuting out-of-order pairs into lex order.
            for i in range(len(sylls) - 1):
                a, b = sylls[i], sylls[i + 1]
                if a[0] > b[0] and self.commutes(a[0], b[0]):
                    sylls[i], sylls[i + 1] = b, a
                    changed = True
                    break
        return Word(tuple(sylls))

    def abelianization_image(self, w: Word) -> tuple[int, ...]:
        return tuple(w.exponent_sum(g) for g in self.alphabet)

    def presentation(self) -> FinitePresentationData:
        from .words import commutator

        rels = tuple(commutator(Word.gen(a), Word.gen(b)) for a, b in sorted(tuple(sorted(e)) for e in self.edges))
        return FinitePresentationData(self.alphabet, rels)

    def describe(self) -> dict:
        return {
            "variant": "graph-product-of-z",
            "generators": list(self.alphabet),
            "edges": sorted(sorted(e) for e in self.edges),
        }


class DirectProduct(GroupDescription):
    def __init__(self, factors: Sequence[GroupDescription]):
        self.factors = tuple(factors)
        alphabet: list[str] = []
        for f in self.factors:
            for g in f.alphabet:
                if g in alphabet:
                    raise ValueError(f"duplicate generator {g!r} across factors")
                alphabet.append(g)
        self.alphabet = tuple(alphabet)
        self._owner = {g: i for i, f in enumerate(self.factors) for g in f.alphabet}

    def normalize(self, w: Word) -> Word:
        self.check_alphabet(w)
        out = Word()
        for i, f in enumerate(self.factors):
            part = Word.from_pairs((g, e) for g, e in w.syllables if self._owner[g] == i)
            out = out * f.normalize(part)
        return out

    def abelianization_image(self, w: Word) -> tuple[int, ...]:
        out: tuple[int, ...] = ()
        for i, f in enumerate(self.factors):
            part = Word.from_pairs((g, e) for g, e in w.syllables if self._owner[g] == i)
            out = out + f.abelianization_image(part)
        return out

    def abelianization_basis(self) -> tuple[str, ...]:
        out: tuple[str, ...] = ()
        for f in self.factors:
            out = out + f.abelianization_basis()
        return out

    def describe(self) -> dict:
        return {"variant": "direct-product", "factors": [f.describe() for f in self.factors]}


# --- Subgroups -------------------------------------------------------------


@dataclass(frozen=True)
class SubgroupDescriptor:
    """Finitely many generator words plus a tag carrying the membership oracle.

    Tags: "whole-group", "trivial", "cyclic" (one generator word),
    "free-subgroup" (folded automaton membership inside a free group),
    "edge-subgroup" (resolved by the owning splitting), and
    "finite-quotient-kernel" (kernel of a map to Z/n given by gen -> image).
    """

    generators: tuple[Word, ...]
    tag: str = "untagged"
    data: tuple = ()

    @staticmethod
    def whole_group() -> "SubgroupDescriptor":
        return SubgroupDescriptor((), "whole-group")

    @staticmethod
    def trivial() -> "SubgroupDescriptor":
        return SubgroupDescriptor((), "trivial")

    @staticmethod
    def cyclic(w: Word) -> "SubgroupDescriptor":
        return SubgroupDescriptor((w,), "cyclic")


def subgroup_membership(G: GroupDescription, H: SubgroupDescriptor, w: Word) -> bool:
    """Exact membership for the supported subgroup tags."""
    w = G.normalize(w)
    if H.tag == "whole-group":
        return True
    if H.tag == "trivial":
        return w.is_identity()
    if H.tag == "cyclic":
        gen = G.normalize(H.generators[0])
        if gen.is_identity():
            return w.is_identity()
        exp = cyclic_membership_exponent(G, gen, w)
        return exp is not None
    if H.tag == "free-subgroup":
        if not isinstance(G, FreeGroup):
            raise UnsupportedMembership("free-subgroup tag requires a free group")
        return StallingsAutomaton.for_subgroup(G, H.generators).accepts(w)
    if H.tag == "finite-quotient-kernel":
        modulus, images = H.data
        total = sum(images.get(g, 0) * e for g, e in w.syllables)
        return total % modulus == 0
    raise UnsupportedMembership(f"no membership oracle for tag {H.tag!r}")


def cyclic_membership_exponent(G: GroupDescription, gen: Word, w: Word) -> int | None:
    """Return k with w = gen^k in G, or None.

    The candidate k is pinned by the abelianization: the only possible
    exponent must scale the image of gen onto the image of w, then a single
    exact identity check settles it. Falls back to a short search when the
    abelianization image of gen is zero.
    """
    img_g = G.abelianization_image(gen)
    img_w = G.abelianization_image(w)
    if any(img_g):
        candidates: list[int] = []
        ratio: int | None = None
        for cg, cw in zip(img_g, img_w):
            if cg == 0:
                if cw != 0:
                    return None
                continue
            if cw % cg != 0:
                return None
            r = cw // cg
            if ratio is None:
                ratio = r
            elif ratio != r:
                return None
        candidates = [ratio] if ratio is not None else []
    else:
        # Torsion or homologically invisible generator: bounded scan.
        candidates = [k for k in range(-64, 65)]
    for k in candidates:
        if G.equal(w, gen ** k):
            return k
    return None


# --- Stallings folding for f.g. subgroups of free groups -------------------


class StallingsAutomaton:
    """Folded core graph of a finitely generated subgroup of a free group."""

    def __init__(self):
        self.next_state = 1
        self.edges: dict[tuple[int, str], int] = {}  # (state, label) -> state, positive labels only
        self.back: dict[tuple[int, str], int] = {}

    @staticmethod
    def for_subgroup(F: FreeGroup, generators: Sequence[Word]) -> "StallingsAutomaton":
        auto = StallingsAutomaton()
        for w in generators:
            auto._add_loop(F.normalize(w))
        auto._fold()
        return auto

    def _add_loop(self, w: Word) -> None:
        state = 0
        letters = list(w.letters())
        for i, (gen, sign) in enumerate(letters):
            target = 0 if i == len(letters) - 1 else self.next_state
            if target != 0:
                self.next_state += 1
            if sign > 0:
                self.edges[(state, gen)] = target
                self.back[(target, gen)] = state
            else:
                self.edges[(target, gen)] = state
                self.back[(state, gen)] = target
            state = target

    def _fold(self) -> None:
        # Union-find identification of states forced by determinism.
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            while parent.get(x, x) != x:
                parent[x] = parent.get(parent[x], parent[x])
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                if rx == 0 or (ry != 0 and rx < ry):
                    parent[ry] = rx
                else:
                    parent[rx] = ry

        changed = True
        while changed:
            changed = False
            fwd: dict[tuple[int, str], int] = {}
            bwd: dict[tuple[int, str], int] = {}
            for (s, g), t in self.edges.items():
                s, t = find(s), find(t)
                if (s, g) in fwd and fwd[(s, g)] != t:
                    union(fwd[(s, g)], t)
                    changed = True
                else:
                    fwd[(s, g)] = t
                if (t, g) in bwd and bwd[(t, g)] != s:
                    union(bwd[(t, g)], s)
                    changed = True
                else:
                    bwd[(t, g)] = s
            if changed:
                self.edges = {(find(s), g): find(t) for (s, g), t in self.edges.items()}
        self.edges = {(find(s), g): find(t) for (s, g), t in self.edges.items()}

    def step(self, state: int, gen: str, sign: int) -> int | None:
        if sign > 0:
            return self.edges.get((state, gen))
        for (s, g), t in self.edges.items():
            if t == state and g == gen:
                return s
        return None

    def accepts(self, w: Word) -> bool:
        state = 0
        for gen, sign in w.letters():
            nxt = self.step(state, gen, sign)
            if nxt is None:
                return False
            state = nxt
        return state == 0


# --- Free group conjugacy utilities (cyclic words) --------------------------


def cyclically_reduce(w: Word) -> tuple[Word, Word]:
    """Return (conjugator c, core u) with w = c * u * c^-1 and u cyclically reduced."""
    conj = Word()
    core = w
    while True:
        letters = list(core.letters())
        if len(letters) >= 2 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
            head = Word.gen(*letters[0])
            conj = conj * head
            core = ~head * core * head
        else:
            return conj, core


def is_proper_power(w: Word) -> bool:
    """True iff the cyclic reduction of w is u^k for some k >= 2."""
    _, core = cyclically_reduce(w)
    letters = list(core.letters())
    n = len(letters)
    if n == 0:
        return True
    for period in range(1, n // 2 + 1):
        if n % period == 0 and all(letters[i] == letters[i % period] for i in range(n)):
            return True
    return False


def conjugate_in_free(u: Word, v: Word) -> bool:
    """Conjugacy in a free group: cyclic reductions rotate onto each other."""
    _, cu = cyclically_reduce(u)
    _, cv = cyclically_reduce(v)
    lu, lv = list(cu.letters()), list(cv.letters())
    if len(lu) != len(lv):
        return False
    if not lu:
        return True
    doubled = lv + lv
    return any(doubled[i : i + len(lu)] == lu for i in range(len(lv)))
