"""
Coxeter systems, canonical-form elements, Bruhat order, parabolic
decompositions and Poincare polynomials.

Conventions used throughout:

* Elements compose as functions, ``(x*y)(i) = x(y(i))``, and act on
  positions from the right: ``w*s_i`` swaps the window entries at
  positions i and i+1.
* Family "A" with rank n is the permutation group on n+1 letters in
  one-line notation (tuples of 1..n+1).  Families "B"/"C"/"D" use
  signed windows with the sign node at s_1; "AffineA" with rank n is
  the affine permutation group on n-periodic windows with generators
  s_0..s_{n-1}; "F4", "G2" and "FreeUniversal" use ShortLex-minimal
  reduced words as the canonical form.
* Finite crystallographic families carry an integer root backend:
  positive roots as coordinate vectors over the simple-root basis.

Everything here is an immutable value and every operation is pure, so
calls are safe from multiple threads; the per-system caches are
idempotent memo tables.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .polynomial import IntPolynomial, q_integer

FINITE_FAMILIES = ("A", "B", "C", "D", "F4", "G2")
FAMILIES = FINITE_FAMILIES + ("AffineA", "FreeUniversal")

# expected positive-root counts per finite crystallographic family
_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "F4": lambda n: 24,
    "G2": lambda n: 6,
}


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _identity_matrix(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


class RootBackend:
    """Integer root system in simple-root coordinates.

    ``cartan[i][j]`` holds 2(a_i,a_j)/(a_i,a_i) indexed from 0, so the
    simple reflection acts by s_i(v) = v - (sum_j cartan[i][j] v_j) a_i.
    """

    def __init__(self, cartan: Sequence[Sequence[int]]):
        self.cartan = tuple(tuple(row) for row in cartan)
        self.rank = len(cartan)
        self.gen_matrices = tuple(self._gen_matrix(i) for i in range(self.rank))
        self.positive_roots = self._generate_positive_roots()
        self.root_index = {r: k for k, r in enumerate(self.positive_roots)}

    def _gen_matrix(self, i):
        n = self.rank
        return tuple(tuple((1 if r == j else 0) - (self.cartan[i][j] if r == i else 0)
                           for j in range(n)) for r in range(n))

    def apply_simple(self, i: int, vec: tuple[int, ...]) -> tuple[int, ...]:
        c = sum(self.cartan[i][j] * vec[j] for j in range(self.rank))
        out = list(vec)
        out[i] -= c
        return tuple(out)

    def _generate_positive_roots(self):
        simples = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        roots = set(simples) | {tuple(-x for x in v) for v in simples}
        frontier = set(roots)
        while frontier:
            new = set()
            for v in frontier:
                for i in range(self.rank):
                    img = self.apply_simple(i, v)
                    if img not in roots:
                        new.add(img)
            roots |= new
            frontier = new
        pos = sorted(v for v in roots if all(c >= 0 for c in v))
        return tuple(pos)

    @staticmethod
    def is_negative(vec) -> bool:
        return all(c <= 0 for c in vec) and any(c < 0 for c in vec)


def _cartan_matrix(family: str, rank: int) -> list[list[int]]:
    m = [[2 * int(i == j) for j in range(rank)] for i in range(rank)]

    def chain(lo, hi):
        for i in range(lo, hi):
            m[i][i + 1] = m[i + 1][i] = -1

    if family == "A":
        chain(0, rank - 1)
    elif family in ("B", "C"):
        # sign node at s_1; for B it is the short root e_1, for C the long 2e_1
        chain(1, rank - 1)
        if family == "B":
            m[0][1], m[1][0] = -2, -1
        else:
            m[0][1], m[1][0] = -1, -2
    elif family == "D":
        # s_1 is the fork node attached to s_3; s_2..s_n form the chain
        chain(1, rank - 1)
        m[0][2] = m[2][0] = -1
    elif family == "F4":
        chain(0, 3)
        m[1][2], m[2][1] = -1, -2
    elif family == "G2":
        m[0][1], m[1][0] = -3, -1
    return m


class CoxeterSystem:
    """A Coxeter system of one of the supported families.

    Instances are interned by :func:`build_system`; compare with ``is``.
    """

    def __init__(self, family: str, rank: int):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        self.family = family
        self.rank = rank
        self._validate_rank()
        if family == "AffineA":
            self.generators = tuple(range(rank))
        else:
            self.generators = tuple(range(1, rank + 1))
        self.root_backend: Optional[RootBackend] = None
        if family in FINITE_FAMILIES:
            self.root_backend = RootBackend(_cartan_matrix(family, rank))
            expected = _ROOT_COUNTS[family](rank)
            got = len(self.root_backend.positive_roots)
            if got != expected:
                raise AssertionError(f"{family}_{rank}: {got} positive roots, expected {expected}")
        # caches (idempotent memo tables; safe under concurrent use)
        self._word_mats: dict = {}
        self._leq_cache: dict = {}
        self._longest_cache: dict = {}
        self._identity: Optional[GroupElement] = None

    def _validate_rank(self):
        family, rank = self.family, self.rank
        limits = {"A": 1, "B": 2, "C": 2, "D": 3, "AffineA": 2, "FreeUniversal": 1}
        if family in ("F4", "G2"):
            if rank != {"F4": 4, "G2": 2}[family]:
                raise ValueError(f"{family} fixes rank {4 if family == 'F4' else 2}")
        elif rank < limits[family]:
            raise ValueError(f"family {family} requires rank >= {limits[family]}")

    # --- basic structure ---------------------------------------------------

    @property
    def is_finite(self) -> bool:
        if self.family in FINITE_FAMILIES:
            return True
        return self.family == "FreeUniversal" and self.rank == 1

    def coxeter_m(self, s: int, t: int) -> float:
        """The order m_st of st (math.inf for infinite order)."""
        if s == t:
            return 1
        if self.family == "FreeUniversal":
            return math.inf
        if self.family == "AffineA":
            if self.rank == 2:
                return math.inf
            step = (s - t) % self.rank
            return 3 if step in (1, self.rank - 1) else 2
        i, j = s - 1, t - 1
        prod = self.root_backend.cartan[i][j] * self.root_backend.cartan[j][i]
        return {0: 2, 1: 3, 2: 4, 3: 6}[prod]

    def graph_edges(self) -> frozenset[frozenset]:
        return frozenset(frozenset((s, t))
                         for s, t in itertools.combinations(self.generators, 2)
                         if self.coxeter_m(s, t) >= 3)

    def neighbors(self, s: int) -> frozenset[int]:
        return frozenset(t for t in self.generators
                         if t != s and self.coxeter_m(s, t) >= 3)

    def _window_size(self) -> int:
        return {"A": self.rank + 1}.get(self.family, self.rank)

    @property
    def uses_words(self) -> bool:
        return self.family in ("F4", "G2", "FreeUniversal")

    # --- canonical forms ----------------------------------------------------

    def identity(self) -> GroupElement:
        if self._identity is None:
            if self.uses_words:
                canon = ()
            else:
                canon = tuple(range(1, self._window_size() + 1))
            self._identity = self._make(canon)
        return self._identity

    def generator(self, s: int) -> GroupElement:
        if s not in self.generators:
            raise ValueError(f"no generator {s} in {self}")
        if self.uses_words:
            return self._make((s,))
        win = list(range(1, self._window_size() + 1))
        if self.family == "A" or (self.family == "AffineA" and s > 0):
            win[s - 1], win[s] = win[s], win[s - 1]
        elif self.family == "AffineA":  # s == 0
            n = self.rank
            win[0], win[n - 1] = win[n - 1] - n, win[0] + n
        elif self.family in ("B", "C"):
            if s == 1:
                win[0] = -1
            else:
                win[s - 2], win[s - 1] = win[s - 1], win[s - 2]
        elif self.family == "D":
            if s == 1:
                win[0], win[1] = -2, -1
            else:
                win[s - 2], win[s - 1] = win[s - 1], win[s - 2]
        return self._make(tuple(win))

    def gens(self) -> tuple[GroupElement, ...]:
        return tuple(self.generator(s) for s in self.generators)

    def _make(self, canonical: tuple) -> GroupElement:
        return GroupElement(self, canonical, self._length(canonical))

    # --- family arithmetic on canonical forms -------------------------------

    def _length(self, c: tuple) -> int:
        fam = self.family
        if self.uses_words:
            return len(c)
        if fam == "A":
            return sum(1 for i in range(len(c)) for j in range(i + 1, len(c))
                       if c[i] > c[j])
        if fam in ("B", "C"):
            inv = sum(1 for i in range(len(c)) for j in range(i + 1, len(c))
                      if c[i] > c[j])
            return inv + sum(-v for v in c if v < 0)
        if fam == "D":
            inv = sum(1 for i in range(len(c)) for j in range(i + 1, len(c))
                      if c[i] > c[j])
            return inv + sum(-v - 1 for v in c if v < 0)
        # AffineA: count inversions across all periods
        n = self.rank
        total = 0
        for i in range(n):
            for j in range(i + 1, n):
                total += abs((c[j] - c[i]) // n)
        return total

    def _compose(self, a: tuple, b: tuple) -> tuple:
        """Canonical form of the product a*b (a after b)."""
        fam = self.family
        if fam == "FreeUniversal":
            out = list(a)
            for s in b:
                if out and out[-1] == s:
                    out.pop()
                else:
                    out.append(s)
            return tuple(out)
        if fam in ("F4", "G2"):
            ma, ia = self._mats(a)
            mb, ib = self._mats(b)
            return self._nf_from_matrices(_matmul(ma, mb), _matmul(ib, ia))
        if fam == "AffineA":
            n = self.rank
            return tuple(self._affine_apply(a, v) for v in b)
        if fam == "A":
            return tuple(a[v - 1] for v in b)
        # signed windows
        return tuple(a[v - 1] if v > 0 else -a[-v - 1] for v in b)

    def _affine_apply(self, window: tuple, i: int) -> int:
        n = self.rank
        r = (i - 1) % n + 1
        return window[r - 1] + (i - r)

    def _inverse(self, c: tuple) -> tuple:
        fam = self.family
        if fam == "FreeUniversal":
            return tuple(reversed(c))
        if fam in ("F4", "G2"):
            m, inv = self._mats(c)
            return self._nf_from_matrices(inv, m)
        if fam == "A":
            out = [0] * len(c)
            for i, v in enumerate(c, start=1):
                out[v - 1] = i
            return tuple(out)
        if fam == "AffineA":
            n = self.rank
            out = [0] * n
            for i, v in enumerate(c, start=1):
                r = (v - 1) % n + 1
                out[r - 1] = i + (r - v)
            return tuple(out)
        out = [0] * len(c)
        for i, v in enumerate(c, start=1):
            if v > 0:
                out[v - 1] = i
            else:
                out[-v - 1] = -i
        return tuple(out)

    # matrices for word-backed families

    def _mats(self, word: tuple):
        cached = self._word_mats.get(word)
        if cached is not None:
            return cached
        rb = self.root_backend
        m = inv = _identity_matrix(self.rank)
        for s in word:
            m = _matmul(m, rb.gen_matrices[s - 1])
        for s in reversed(word):
            inv = _matmul(inv, rb.gen_matrices[s - 1])
        self._word_mats[word] = (m, inv)
        return m, inv

    def _nf_from_matrices(self, m, inv) -> tuple:
        """ShortLex-minimal reduced word of the element with matrix m."""
        rb = self.root_backend
        ident = _identity_matrix(self.rank)
        word = []
        while m != ident:
            for s in self.generators:
                col = tuple(inv[r][s - 1] for r in range(self.rank))
                if RootBackend.is_negative(col):  # s is a left descent
                    word.append(s)
                    g = rb.gen_matrices[s - 1]
                    m = _matmul(g, m)
                    inv = _matmul(inv, g)
                    break
            else:
                raise AssertionError("no left descent found for non-identity matrix")
        return tuple(word)

    def __repr__(self):
        return f"CoxeterSystem({self.family}, {self.rank})"


@functools.lru_cache(maxsize=None)
def build_system(family: str, rank: int) -> CoxeterSystem:
    """Construct (and intern) the Coxeter system of the given family/rank.

    >>> build_system("A", 2).root_backend.positive_roots
    ((0, 1), (1, 0), (1, 1))
    >>> len(build_system("G2", 2).root_backend.positive_roots)
    6
    """
    return CoxeterSystem(family, rank)


@dataclass(frozen=True)
class GroupElement:
    """Element of a CoxeterSystem in canonical form with cached length."""

    system: CoxeterSystem
    canonical: tuple
    length: int

    def __mul__(self, other: GroupElement) -> GroupElement:
        return multiply(self, other)

    def inverse(self) -> GroupElement:
        return self.system._make(self.system._inverse(self.canonical))

    def is_identity(self) -> bool:
        return self.length == 0

    def __hash__(self):
        return hash((id(self.system), self.canonical))

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.system is other.system
                and self.canonical == other.canonical)

    def __lt__(self, other):  # stable deterministic ordering for sweeps
        return (self.length, self.canonical) < (other.length, other.canonical)

    def __repr__(self):
        return f"<{self.system.family}{self.system.rank}:{to_literal(self)}>"


def _check_same_system(x: GroupElement, y: GroupElement):
    if x.system is not y.system:
        raise ValueError("elements from different Coxeter systems")


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    """Product x*y; the length is recomputed from the canonical form.

    >>> s = build_system("A", 2)
    >>> s1, s2 = s.gens()
    >>> (s1 * s1).is_identity()
    True
    """
    _check_same_system(x, y)
    return x.system._make(x.system._compose(x.canonical, y.canonical))


def word_element(system: CoxeterSystem, word: Iterable[int]) -> GroupElement:
    """Element given by a (not necessarily reduced) word in the generators."""
    out = system.identity()
    for s in word:
        out = multiply(out, system.generator(s))
    return out


def descents(w: GroupElement, side: str) -> frozenset[int]:
    """Left or right descent set, D_L(w) = {s : l(sw) < l(w)}.

    >>> s = build_system("A", 3)
    >>> w = word_element(s, [1, 2, 1, 3])
    >>> sorted(descents(w, "left")), sorted(descents(w, "right"))
    ([1, 2], [1, 3])
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    sys = w.system
    fam = sys.family
    if fam == "FreeUniversal":
        if not w.canonical:
            return frozenset()
        return frozenset({w.canonical[0] if side == "left" else w.canonical[-1]})
    if fam in ("F4", "G2"):
        m, inv = sys._mats(w.canonical)
        mat = inv if side == "left" else m
        return frozenset(s for s in sys.generators
                         if RootBackend.is_negative(tuple(mat[r][s - 1]
                                                          for r in range(sys.rank))))
    if fam == "A":
        win = w.canonical if side == "right" else sys._inverse(w.canonical)
        return frozenset(i for i in sys.generators if win[i - 1] > win[i])
    # signed and affine windows: compare lengths directly
    out = []
    for s in sys.generators:
        g = sys.generator(s)
        other = multiply(g, w) if side == "left" else multiply(w, g)
        if other.length < w.length:
            out.append(s)
    return frozenset(out)


def support(w: GroupElement) -> frozenset[int]:
    """Generators occurring in any reduced word of w.

    >>> s = build_system("A", 3)
    >>> sorted(support(word_element(s, [2, 1, 3, 2])))
    [1, 2, 3]
    """
    if w.system.family == "A":
        win = w.canonical
        out, top = [], 0
        for i in range(1, len(win)):
            top = max(top, win[i - 1])
            if top > i:
                out.append(i)
        return frozenset(out)
    return frozenset(canonical_word(w))


def canonical_word(w: GroupElement) -> tuple[int, ...]:
    """ShortLex-minimal reduced word (greedy smallest left descent)."""
    if w.system.uses_words or w.system.family == "FreeUniversal":
        return w.canonical
    word = []
    x = w
    while not x.is_identity():
        s = min(descents(x, "left"))
        word.append(s)
        x = multiply(x.system.generator(s), x)
    return tuple(word)


# --- Bruhat order ----------------------------------------------------------

def bruhat_leq(u: GroupElement, w: GroupElement) -> bool:
    """Bruhat order test via the descent-lifting recursion.

    >>> s3 = build_system("A", 2)
    >>> s1, s2 = s3.gens()
    >>> bruhat_leq(s1, s1 * s2 * s1), bruhat_leq(s1 * s2, s2 * s1)
    (True, False)
    """
    _check_same_system(u, w)
    cache = u.system._leq_cache
    identity = u.system.identity()

    def rec(u, w):
        if u.length > w.length:
            return False
        if u.length == 0:
            return True
        if u.length == w.length:
            return u == w
        key = (u.canonical, w.canonical)
        hit = cache.get(key)
        if hit is not None:
            return hit
        s = min(descents(w, "left"))
        g = u.system.generator(s)
        sw = multiply(g, w)
        if s in descents(u, "left"):
            out = rec(multiply(g, u), sw)
        else:
            out = rec(u, sw)
        cache[key] = out
        return out

    return rec(u, w)


def bruhat_leq_subword(u: GroupElement, w: GroupElement) -> bool:
    """Independent oracle: subword property over one fixed reduced word."""
    _check_same_system(u, w)
    return u in subword_closure(w)


def subword_closure(w: GroupElement) -> frozenset[GroupElement]:
    """All elements with a reduced subword inside canonical_word(w).

    By the subword property this is exactly the lower interval [e,w],
    computed here by a different route than :func:`lower_interval`.
    """
    sys = w.system
    out = {sys.identity()}
    for s in canonical_word(w):
        g = sys.generator(s)
        grown = set()
        for x in out:
            xs = multiply(x, g)
            if xs.length > x.length:
                grown.add(xs)
        out |= grown
    return frozenset(out)


def lower_interval(w: GroupElement) -> frozenset[GroupElement]:
    """The lower Bruhat interval [e,w] as a set of elements.

    Uses the recursion [e,w] = [e,w'] u s[e,w'] along a reduced word
    w = s w'; ranks are the cached element lengths.

    >>> free3 = build_system("FreeUniversal", 3)
    >>> w = word_element(free3, [1, 2, 3, 1])
    >>> len(lower_interval(w))
    14
    """
    sys = w.system
    out = {sys.identity()}
    for s in reversed(canonical_word(w)):
        g = sys.generator(s)
        out |= {multiply(g, x) for x in out}
    return frozenset(out)


def rank_vector(elements: Iterable[GroupElement]) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for x in elements:
        counts[x.length] = counts.get(x.length, 0) + 1
    if not counts:
        return ()
    return tuple(counts.get(k, 0) for k in range(max(counts) + 1))


def interval_covers(elements: Iterable[GroupElement]) -> list[tuple[GroupElement, GroupElement]]:
    """Cover pairs (x, y) with x < y inside a given interval."""
    by_len: dict[int, list[GroupElement]] = {}
    for x in elements:
        by_len.setdefault(x.length, []).append(x)
    out = []
    for k in sorted(by_len):
        for y in by_len.get(k + 1, ()):
            for x in by_len[k]:
                if bruhat_leq(x, y):
                    out.append((x, y))
    return out


def is_min_coset_rep(v: GroupElement, j: frozenset[int]) -> bool:
    """True iff v is in W^J, i.e. vs > v for every s in J."""
    return not (descents(v, "right") & j)


@dataclass(frozen=True)
class ParabolicDecomposition:
    """Unique factorization w = v*u with v in W^J and u in W_J."""
    w: GroupElement
    v: GroupElement
    u: GroupElement
    j: frozenset[int]


def parabolic_decompose(w: GroupElement, j: Iterable[int]) -> ParabolicDecomposition:
    """Factor w = v*u with v in W^J, u in W_J, lengths additive.

    >>> s = build_system("A", 3)
    >>> w = word_element(s, [1, 2, 3, 2, 1])
    >>> d = parabolic_decompose(w, {1, 3})
    >>> to_literal(d.v), to_literal(d.u)
    ('2413', '2143')
    """
    j = frozenset(j)
    bad = j - set(w.system.generators)
    if bad:
        raise ValueError(f"generators {sorted(bad)} not in system")
    x = w
    u = w.system.identity()
    while True:
        ds = descents(x, "right") & j
        if not ds:
            break
        s = min(ds)
        g = w.system.generator(s)
        x = multiply(x, g)
        u = multiply(g, u)
    assert x.length + u.length == w.length
    return ParabolicDecomposition(w, x, u, j)


def relative_lower_interval(v: GroupElement, j: Iterable[int]) -> frozenset[GroupElement]:
    """The relative interval [e,v]^J = [e,v] intersected with W^J."""
    j = frozenset(j)
    if not is_min_coset_rep(v, j):
        raise ValueError("v is not a minimal coset representative for J")
    return frozenset(x for x in lower_interval(v) if is_min_coset_rep(x, j))


def poincare(w: GroupElement) -> IntPolynomial:
    """Rank generating polynomial of [e,w].

    >>> s = build_system("A", 2)
    >>> str(poincare(word_element(s, [1, 2, 1])))
    '1 + 2q + 2q^2 + q^3'
    """
    coeffs = rank_vector(lower_interval(w))
    return IntPolynomial.from_coeffs(coeffs)


def relative_poincare(v: GroupElement, j: Iterable[int]) -> IntPolynomial:
    return IntPolynomial.from_coeffs(rank_vector(relative_lower_interval(v, j)))


def longest_element(system: CoxeterSystem, j: Iterable[int]) -> GroupElement:
    """Longest element u_J of the parabolic subgroup W_J (must be finite)."""
    j = frozenset(j)
    bad = j - set(system.generators)
    if bad:
        raise ValueError(f"generators {sorted(bad)} not in system")
    cached = system._longest_cache.get(j)
    if cached is not None:
        return cached
    if system.family == "AffineA" and j == set(system.generators):
        raise ValueError("W_J is infinite: full affine generator set")
    if system.family == "FreeUniversal" and len(j) > 1:
        raise ValueError("W_J is infinite in the free Coxeter group")
    x = system.identity()
    while True:
        ups = [s for s in j if s not in descents(x, "right")]
        if not ups:
            break
        x = multiply(x, system.generator(ups[0]))
    assert descents(x, "right") & j == j and descents(x, "left") & j == j
    system._longest_cache[j] = x
    return x


def max_in_interval_parabolic(w: GroupElement, j: Iterable[int]) -> GroupElement:
    """Unique maximal element of [e,w] n W_J (uniqueness is asserted)."""
    j = frozenset(j)
    candidates = [x for x in lower_interval(w) if support(x) <= j]
    best = max(candidates, key=lambda x: (x.length, x.canonical))
    for x in candidates:
        if not bruhat_leq(x, best):
            raise AssertionError("non-unique maximum in [e,w] n W_J")
    return best


def enumerate_group(system: CoxeterSystem,
                    max_length: Optional[int] = None) -> Iterator[GroupElement]:
    """Yield each element exactly once in non-decreasing length order."""
    if not system.is_finite and max_length is None:
        raise ValueError("infinite system: max_length required")
    gens = system.gens()
    level = [system.identity()]
    seen = {system.identity()}
    length = 0
    while level:
        for x in sorted(level, key=lambda e: e.canonical):
            yield x
        if max_length is not None and length >= max_length:
            return
        nxt = set()
        for x in level:
            for g in gens:
                y = multiply(x, g)
                if y.length > x.length and y not in seen:
                    nxt.add(y)
        seen |= nxt
        level = list(nxt)
        length += 1


def group_poincare_series(system: CoxeterSystem) -> IntPolynomial:
    """Length generating function of a finite system."""
    return IntPolynomial.from_coeffs(rank_vector(enumerate_group(system)))


# --- fast type-A interval tables (numpy-backed sweep helper) ---------------

def symmetric_group_poincare_table(n: int) -> dict[tuple, IntPolynomial]:
    """Poincare polynomials of all w in S_n at once.

    Uses the rank-matrix dominance criterion for Bruhat order in type A
    (u <= w iff the dominance counts satisfy u[i,j] <= w[i,j] for all
    i,j), vectorized with numpy.  Validated against the generic
    recursion in the test suite.
    """
    import numpy as np

    perms = list(itertools.permutations(range(1, n + 1)))
    lengths = np.array([sum(1 for i in range(n) for j in range(i + 1, n)
                            if p[i] > p[j]) for p in perms])
    dom = np.zeros((len(perms), n * n), dtype=np.int8)
    for k, p in enumerate(perms):
        mat = np.zeros((n, n), dtype=np.int8)
        for i in range(n):
            for j in range(n):
                mat[i][j] = sum(1 for a in range(i + 1) if p[a] >= j + 1)
        dom[k] = mat.reshape(-1)
    table = {}
    for k, p in enumerate(perms):
        mask = (dom <= dom[k]).all(axis=1)
        coeffs = np.bincount(lengths[mask], minlength=int(lengths[k]) + 1)
        table[p] = IntPolynomial.from_coeffs(int(c) for c in coeffs)
    return table


# --- literals and serialization --------------------------------------------

def parse_element(system: CoxeterSystem, text: str) -> GroupElement:
    """Parse an element literal.

    Accepted forms: one-line "2431", signed "-2,1,-3", affine window
    "[8,1,-2,3]", word "s1 s2 s1", and "e" for the identity.
    """
    text = text.strip()
    if text in ("e", ""):
        return system.identity()
    if text.startswith("s") or " s" in text:
        word = []
        for token in text.replace(",", " ").split():
            if not token.startswith("s") or not token[1:].isdigit():
                raise ValueError(f"bad word literal {text!r}")
            word.append(int(token[1:]))
        return word_element(system, word)
    if text.startswith("["):
        if system.family != "AffineA":
            raise ValueError("window literal only valid for AffineA")
        window = tuple(int(t) for t in text.strip("[]").split(","))
        return affine_element(system, window)
    if "," in text or "-" in text:
        window = tuple(int(t) for t in text.split(","))
        if system.family == "A":
            return permutation_element(system, window)
        return signed_element(system, window)
    if not text.isdigit():
        raise ValueError(f"unrecognized element literal {text!r}")
    window = tuple(int(ch) for ch in text)
    return permutation_element(system, window)


def permutation_element(system: CoxeterSystem, window: Sequence[int]) -> GroupElement:
    if system.family != "A":
        raise ValueError("one-line literal only valid for family A")
    window = tuple(window)
    if sorted(window) != list(range(1, system.rank + 2)):
        raise ValueError(f"not a permutation of 1..{system.rank + 1}: {window}")
    return system._make(window)


def signed_element(system: CoxeterSystem, window: Sequence[int]) -> GroupElement:
    if system.family not in ("B", "C", "D"):
        raise ValueError("signed literal only valid for families B/C/D")
    window = tuple(window)
    if sorted(abs(v) for v in window) != list(range(1, system.rank + 1)):
        raise ValueError(f"not a signed permutation of 1..{system.rank}: {window}")
    if system.family == "D" and sum(1 for v in window if v < 0) % 2:
        raise ValueError("type D needs an even number of sign changes")
    return system._make(window)


def affine_element(system: CoxeterSystem, window: Sequence[int]) -> GroupElement:
    if system.family != "AffineA":
        raise ValueError("window literal only valid for AffineA")
    n = system.rank
    window = tuple(window)
    if len(window) != n or len({v % n for v in window}) != n:
        raise ValueError(f"window residues must be distinct mod {n}: {window}")
    if sum(window) != n * (n + 1) // 2:
        raise ValueError(f"window sum must be {n * (n + 1) // 2}: {window}")
    return system._make(window)


def to_literal(w: GroupElement) -> str:
    fam = w.system.family
    if fam == "A":
        if len(w.canonical) <= 9:
            return "".join(str(v) for v in w.canonical)
        return ",".join(str(v) for v in w.canonical)
    if fam in ("B", "C", "D"):
        return ",".join(str(v) for v in w.canonical)
    if fam == "AffineA":
        return "[" + ",".join(str(v) for v in w.canonical) + "]"
    if not w.canonical:
        return "e"
    return " ".join(f"s{s}" for s in w.canonical)


def element_json(w: GroupElement) -> dict:
    return {
        "schema": "1",
        "family": w.system.family,
        "rank": w.system.rank,
        "literal": to_literal(w),
        "length": w.length,
    }


def interval_json(w: GroupElement) -> dict:
    nodes = sorted(lower_interval(w))
    index = {x: k for k, x in enumerate(nodes)}
    covers = [[index[a], index[b]] for a, b in interval_covers(nodes)]
    return {
        "schema": "1",
        "element": to_literal(w),
        "nodes": [to_literal(x) for x in nodes],
        "covers": covers,
    }


def interval_dot(w: GroupElement) -> str:
    """DOT rendering of the Hasse diagram of [e,w]."""
    nodes = sorted(lower_interval(w))
    lines = ["graph bruhat_interval {", '  rankdir="BT";']
    for x in nodes:
        lines.append(f'  "{to_literal(x)}" [rank={x.length}];')
    for a, b in interval_covers(nodes):
        lines.append(f'  "{to_literal(a)}" -- "{to_literal(b)}";')
    lines.append("}")
    return "\n".join(lines)


if __name__ == "__main__":
    import doctest
    doctest.testmod()
