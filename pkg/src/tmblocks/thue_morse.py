"""Thue-Morse factors of length N = 2^m + 1 and their lexicographic structure.

The factor set A_m (3·2^m words, lexicographically ordered) is enumerated two
independent ways: by sliding a window over a fixed-point prefix, and by the
descendant recursion that maps each word u of A_m to the two length-(2N-1)
windows of theta(u). On top of the ordered set sit the quarter partition
Q_1..Q_4, its minima, the f_0/f_1 fixed-point prefixes, and executable
verifiers for the identities that tie them together.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .report import ReportBuilder, VerificationReport
from .substitution import Alphabet, Substitution
from .words import BinaryWord, word

MAX_M = 12

# recursion base: the six factors of length 3
A1_WORDS = ("001", "010", "011", "100", "101", "110")

_THETA_TR = str.maketrans({"0": "01", "1": "10"})


def theta() -> Substitution:
    """The Thue-Morse substitution 0 -> 01, 1 -> 10 on the binary alphabet."""
    return Substitution(Alphabet(("0", "1")), ((0, 1), (1, 0)))


def apply_theta(w: BinaryWord) -> BinaryWord:
    """theta on a packed binary word (0 -> 01, 1 -> 10), via C-level translate."""
    return BinaryWord.from_string(str(w).translate(_THETA_TR))


def thue_morse_prefix(first_letter: int, n: int) -> BinaryWord:
    """The length-n prefix of the Thue-Morse fixed point starting with
    ``first_letter`` (0 gives 0110..., 1 gives 1001...)."""
    if first_letter not in (0, 1):
        raise ValueError(f"first letter must be 0 or 1, got {first_letter!r}")
    if n < 0:
        raise ValueError(f"prefix length must be >= 0, got {n}")
    w = BinaryWord(1, first_letter)
    while len(w) < n:
        w = apply_theta(w)
    return w.prefix(n)


def descendants(w: BinaryWord) -> tuple[BinaryWord, BinaryWord]:
    """The two windows of theta(w) one letter shorter than the whole image:
    (prefix, suffix), each of length 2*len(w) - 1."""
    t = apply_theta(w)
    return t.prefix(t.length - 1), t.suffix(t.length - 1)


@dataclass(frozen=True)
class FactorSet:
    """The lexicographically sorted factors of length 2^m + 1."""

    m: int
    words: tuple[BinaryWord, ...]

    def __post_init__(self) -> None:
        n = 2 ** self.m + 1
        if len(self.words) != 3 * 2 ** self.m:
            raise ValueError(
                f"expected {3 * 2 ** self.m} factors for m={self.m}, got {len(self.words)}")
        for w in self.words:
            if len(w) != n:
                raise ValueError(f"factor {w} has length {len(w)}, expected {n}")
        for a, b in zip(self.words, self.words[1:]):
            if not a < b:
                raise ValueError("factors must be strictly increasing")

    @property
    def word_length(self) -> int:
        return 2 ** self.m + 1

    @property
    def size(self) -> int:
        return len(self.words)

    @cached_property
    def _positions(self) -> dict[BinaryWord, int]:
        return {w: i for i, w in enumerate(self.words)}

    def index(self, w: BinaryWord) -> int:
        """0-based position of w; raises ValueError for non-members."""
        try:
            return self._positions[w]
        except KeyError:
            raise ValueError(f"{w} is not a factor of length {self.word_length}") from None

    def __contains__(self, w: BinaryWord) -> bool:
        return w in self._positions

    @property
    def quarter_size(self) -> int:
        if self.size % 4:
            raise ValueError(f"|A_{self.m}| = {self.size} has no quarter partition (need m >= 2)")
        return self.size // 4

    def quarters(self) -> tuple[tuple[BinaryWord, ...], ...]:
        q = self.quarter_size
        return tuple(self.words[i * q:(i + 1) * q] for i in range(4))

    def quarter_of(self, index0: int) -> int:
        """1-based quarter number of a 0-based word index."""
        return index0 // self.quarter_size + 1

    def alphabet(self) -> Alphabet:
        return Alphabet(tuple(str(w) for w in self.words))


@dataclass(frozen=True)
class QuarterMarkers:
    """Minima of the four quarters plus the two fixed-point prefixes."""

    q1: BinaryWord
    q2: BinaryWord
    q3: BinaryWord
    q4: BinaryWord
    f0: BinaryWord
    f1: BinaryWord


def _check_m(m: int) -> None:
    if not 1 <= m <= MAX_M:
        raise ValueError(f"m must be in 1..{MAX_M}, got {m}")


@lru_cache(maxsize=None)
def enumerate_by_scan(m: int) -> FactorSet:
    """Collect the distinct width-N windows of a fixed-point prefix, doubling
    the prefix until the known cardinality 3*2^m is reached."""
    _check_m(m)
    n = 2 ** m + 1
    target = 3 * 2 ** m
    prefix_len = 16 * n
    while True:
        text = str(thue_morse_prefix(0, prefix_len))
        windows = {text[i:i + n] for i in range(len(text) - n + 1)}
        if len(windows) > target:
            raise RuntimeError(
                f"found {len(windows)} distinct factors of length {n}, "
                f"more than the expected {target}")
        if len(windows) == target:
            return FactorSet(m, tuple(sorted(BinaryWord.from_string(t) for t in windows)))
        prefix_len *= 2
        if prefix_len > (1 << 24):
            raise RuntimeError(f"factor collection did not saturate for m={m}")


@lru_cache(maxsize=None)
def enumerate_by_descendants(m: int) -> FactorSet:
    """Grow the factor sets from the hard-coded length-3 base by taking both
    descendants of every word, level by level."""
    _check_m(m)
    words = [word(t) for t in A1_WORDS]
    for _ in range(m - 1):
        nxt = set()
        for w in words:
            d, e = descendants(w)
            nxt.add(d)
            nxt.add(e)
        words = sorted(nxt)
    return FactorSet(m, tuple(words))


def factor_set(m: int, method: str = "scan") -> FactorSet:
    if method == "scan":
        return enumerate_by_scan(m)
    if method == "descend":
        return enumerate_by_descendants(m)
    raise ValueError(f"unknown enumeration method {method!r}")


def quarter_markers(factors: FactorSet) -> QuarterMarkers:
    q = factors.quarter_size
    n = factors.word_length
    return QuarterMarkers(
        q1=factors.words[0],
        q2=factors.words[q],
        q3=factors.words[2 * q],
        q4=factors.words[3 * q],
        f0=thue_morse_prefix(0, n),
        f1=thue_morse_prefix(1, n),
    )


def verify_quarter_minima(m: int, factors: FactorSet | None = None) -> VerificationReport:
    """Check that each quarter minimum is the stated rewrite of f_1:
    q1 = 1^{-1} f1 · 1, q2 = (10)^{-1} f1 · 11, q3 = f1, q4 = (100)^{-1} f1 · 110."""
    fs = factors or enumerate_by_scan(m)
    mk = quarter_markers(fs)
    f1 = mk.f1
    rb = ReportBuilder(m, "qandf")
    expected = {
        "q1": f1.strip_prefix(word("1")) + word("1"),
        "q2": f1.strip_prefix(word("10")) + word("11"),
        "q3": f1,
        "q4": f1.strip_prefix(word("100")) + word("110"),
    }
    for name, want in expected.items():
        got = getattr(mk, name)
        rb.check(name, got == want, f"{name}={got}, from f1={f1}")
    return rb.build()


def verify_quarter_descendants(m: int, factors: FactorSet | None = None,
                               factors_next: FactorSet | None = None) -> VerificationReport:
    """Check the four quarter image identities one level up:
    Q1' = eps(Q3 u Q4), Q2' = delta(Q1 u Q2), Q3' = delta(Q3 u Q4), Q4' = eps(Q1 u Q2)."""
    fs = factors or enumerate_by_scan(m)
    fs_next = factors_next or enumerate_by_scan(m + 1)
    q1, q2, q3, q4 = fs.quarters()
    p1, p2, p3, p4 = fs_next.quarters()
    delta = lambda ws: {descendants(w)[0] for w in ws}
    eps = lambda ws: {descendants(w)[1] for w in ws}
    checks = [
        ("Q1", eps(q3 + q4), p1),
        ("Q2", delta(q1 + q2), p2),
        ("Q3", delta(q3 + q4), p3),
        ("Q4", eps(q1 + q2), p4),
    ]
    rb = ReportBuilder(m, "quarters")
    for name, got, want in checks:
        rb.check(name, got == set(want), f"{len(got)} images vs quarter of size {len(want)}")
    return rb.build()


def verify_prefix_pairs(m: int, factors: FactorSet | None = None,
                        factors_next: FactorSet | None = None) -> VerificationReport:
    """Check that consecutive pairs of the next level share their length-N
    prefix with the corresponding word one level down:
    Pref_N(w'_{2i-1}) = Pref_N(w'_{2i}) = w_i for every i."""
    fs = factors or enumerate_by_scan(m)
    fs_next = factors_next or enumerate_by_scan(m + 1)
    n = fs.word_length
    bad = []
    for i, w in enumerate(fs.words):
        left = fs_next.words[2 * i].prefix(n)
        right = fs_next.words[2 * i + 1].prefix(n)
        if left != w or right != w:
            bad.append(i + 1)
    rb = ReportBuilder(m, "firsthalf")
    rb.check("pairs", not bad,
             f"all {fs.size} prefix pairs match" if not bad else f"mismatch at i={bad[:5]}")
    return rb.build()
