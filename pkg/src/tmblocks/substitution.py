"""General substitutions on a finite ordered alphabet.

Letters are opaque indices 0..k-1; display labels (e.g. the underlying
binary words of a block alphabet) live on the Alphabet. Images may have
different lengths, so non-constant-length substitutions are first-class.
Words over the alphabet are plain tuples of letter indices.

The incidence matrix follows the convention M[a][b] = number of occurrences
of letter a in the image of letter b, so each column b is the letter-count
vector of images[b] and column sums are the image lengths.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

Word = tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite alphabet; position in ``labels`` is the letter index."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.labels:
            raise ValueError("alphabet must contain at least one letter")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("alphabet labels must be distinct")

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class Substitution:
    alphabet: Alphabet
    images: tuple[Word, ...]

    def __post_init__(self) -> None:
        k = self.alphabet.size
        if len(self.images) != k:
            raise ValueError(f"expected {k} images, got {len(self.images)}")
        for b, img in enumerate(self.images):
            if not img:
                raise ValueError(f"image of letter {b} is empty")
            for a in img:
                if not 0 <= a < k:
                    raise ValueError(f"image of letter {b} uses unknown letter {a}")

    @property
    def size(self) -> int:
        return self.alphabet.size

    def constant_length(self) -> int | None:
        """The common image length L, or None for non-constant length."""
        lengths = {len(img) for img in self.images}
        return lengths.pop() if len(lengths) == 1 else None

    def image_lengths(self) -> tuple[int, ...]:
        return tuple(len(img) for img in self.images)

    def apply(self, w: Sequence[int]) -> Word:
        """Letter-wise image concatenation (monoid morphism)."""
        images = self.images
        k = self.size
        out: list[int] = []
        for a in w:
            if not 0 <= a < k:
                raise ValueError(f"letter {a} not in alphabet of size {k}")
            out.extend(images[a])
        return tuple(out)

    def iterate(self, letter: int, n: int) -> Word:
        """The n-th image word of a single letter; n = 0 gives (letter,)."""
        if n < 0:
            raise ValueError(f"iteration count must be >= 0, got {n}")
        w: Word = (letter,)
        for _ in range(n):
            w = self.apply(w)
        return w

    def is_growing_seed(self, letter: int) -> bool:
        img = self.images[letter]
        return img[0] == letter and len(img) >= 2

    def fixed_point_prefix(self, letter: int, min_len: int) -> Word:
        """A prefix (length >= min_len) of the one-sided fixed point at ``letter``.

        Requires images[letter] to start with ``letter`` and have length >= 2,
        which makes every iterate a prefix of the next.
        """
        if not self.is_growing_seed(letter):
            raise ValueError(
                f"letter {letter} is not a growing seed: its image must start "
                f"with the letter itself and have length >= 2")
        w: Word = (letter,)
        while len(w) < min_len:
            w = self.apply(w)
        return w

    def language(self, length: int, seed: int) -> tuple[Word, ...]:
        """All factors of the given length of the fixed point grown from ``seed``,
        sorted lexicographically by display labels.

        Iterates the seed until two consecutive iterates yield the same factor
        set and the iterate is longer than twice the factor length. Meaningful
        for primitive substitutions, where the factor sets stabilize.
        """
        if length < 1:
            raise ValueError(f"factor length must be >= 1, got {length}")
        if not self.is_growing_seed(seed):
            raise ValueError(f"letter {seed} is not a growing seed")
        w: Word = (seed,)
        prev: set[str] | None = None
        while True:
            w = self.apply(w)
            # windows are extracted over a codepoint string: C-speed slicing
            # and hashing, exact for any alphabet size we ever build
            s = "".join(map(chr, w))
            found = {s[i:i + length] for i in range(len(s) - length + 1)}
            if prev is not None and found == prev and len(w) > 2 * length:
                break
            prev = found
        labels = self.alphabet.labels
        factors = [tuple(map(ord, f)) for f in found]
        factors.sort(key=lambda f: tuple(labels[a] for a in f))
        return tuple(factors)

    def is_injective(self) -> bool:
        """True iff the letter images are pairwise distinct words."""
        return len(set(self.images)) == len(self.images)

    def incidence_matrix(self) -> "IncidenceMatrix":
        k = self.size
        counts = np.zeros((k, k), dtype=np.int64)
        for b, img in enumerate(self.images):
            for a in img:
                counts[a, b] += 1
        return IncidenceMatrix(counts)

    def is_primitive(self) -> bool:
        return _is_primitive_cached(self)

    def format_word(self, w: Sequence[int], one_based: bool = True) -> str:
        """Indexed rendering, e.g. 'w_4 w_10'."""
        off = 1 if one_based else 0
        return " ".join(f"w_{a + off}" for a in w)

    def to_json(self) -> str:
        return json.dumps({
            "alphabet": list(self.alphabet.labels),
            "images": [list(img) for img in self.images],
        })

    @classmethod
    def from_json(cls, text: str) -> "Substitution":
        data = json.loads(text)
        if not isinstance(data, dict) or "alphabet" not in data or "images" not in data:
            raise ValueError("substitution JSON must contain 'alphabet' and 'images'")
        labels = tuple(str(x) for x in data["alphabet"])
        images = tuple(tuple(int(a) for a in img) for img in data["images"])
        return cls(Alphabet(labels), images)

    def to_dot(self, name: str = "substitution") -> str:
        """Graphviz digraph: node per letter, edge b->a labeled with the
        number of occurrences of a in the image of b."""
        lines = [f"digraph {name} {{"]
        for i, label in enumerate(self.alphabet.labels):
            lines.append(f'  w{i + 1} [label="w{i + 1}:{label}"];')
        for b, img in enumerate(self.images):
            counts: dict[int, int] = {}
            for a in img:
                counts[a] = counts.get(a, 0) + 1
            for a in sorted(counts):
                lines.append(f'  w{b + 1} -> w{a + 1} [label="{counts[a]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def compose(outer: Substitution, inner: Substitution) -> Substitution:
    """The substitution a -> outer(inner(a)) on the shared alphabet."""
    if outer.alphabet != inner.alphabet:
        raise ValueError("composition requires a common alphabet")
    return Substitution(outer.alphabet,
                        tuple(outer.apply(img) for img in inner.images))


class IncidenceMatrix:
    """Square non-negative integer matrix of a substitution (read-only)."""

    def __init__(self, counts):
        arr = np.asarray(counts, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"incidence matrix must be square, got shape {arr.shape}")
        if (arr < 0).any():
            raise ValueError("incidence matrix entries must be non-negative")
        arr = arr.copy()
        arr.setflags(write=False)
        self.counts = arr

    @property
    def size(self) -> int:
        return self.counts.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, IncidenceMatrix) and np.array_equal(self.counts, other.counts)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.counts.sum(axis=0))

    def is_primitive(self) -> bool:
        """True iff some power of the matrix is entrywise positive.

        Checked with boolean (reachability) arithmetic: positivity of M^n is
        monotone in n once M has no zero row or column, so it suffices to
        square the boolean matrix until the exponent passes the Wielandt
        bound (k-1)^2 + 1.
        """
        a = self.counts > 0
        if (~a.any(axis=0)).any() or (~a.any(axis=1)).any():
            return False
        bound = (self.size - 1) ** 2 + 1
        power = 1
        b = a
        while not b.all():
            if power > bound:
                return False
            f = b.astype(np.float32)
            b = (f @ f) > 0
            power *= 2
        return True

    def image_length_sequence(self, letter: int, n_max: int) -> list[int]:
        """Exact lengths of the n-th image words of ``letter`` for n = 1..n_max,
        computed from the matrix alone: the letter's entry of 1^T M^n.

        Uses Python integers on the sparse columns, so arbitrarily deep powers
        stay exact.
        """
        k = self.size
        if not 0 <= letter < k:
            raise ValueError(f"letter {letter} out of range for size {k}")
        cols = [[(a, int(c)) for a, c in enumerate(self.counts[:, b]) if c] for b in range(k)]
        u = [1] * k  # u[b] = length of the n-th image of letter b
        out = []
        for _ in range(n_max):
            u = [sum(c * u[a] for a, c in cols[b]) for b in range(k)]
            out.append(u[letter])
        return out


def pf_eigenvalue(matrix: IncidenceMatrix | np.ndarray, tol: float = 1e-9,
                  max_iter: int = 10_000) -> float:
    """Dominant (Perron-Frobenius) eigenvalue by power iteration.

    Starts from the all-ones vector and stops when successive Rayleigh
    quotients differ by less than ``tol``. Raises ArithmeticError when the
    cap is hit, which usually signals a non-primitive input.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    m = matrix.counts if isinstance(matrix, IncidenceMatrix) else np.asarray(matrix)
    m = m.astype(np.float64)
    k = m.shape[0]
    x = np.ones(k) / np.sqrt(k)
    lam_prev = None
    for _ in range(max_iter):
        y = m @ x
        lam = float(x @ y)
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            raise ArithmeticError("power iteration collapsed to zero (nilpotent matrix?)")
        x = y / norm
        if lam_prev is not None and abs(lam - lam_prev) < tol:
            return lam
        lam_prev = lam
    raise ArithmeticError(
        f"power iteration did not converge within {max_iter} iterations "
        f"(is the matrix primitive?)")


def length_growth_check(s: Substitution, letter: int, n_max: int) -> bool:
    """True iff the iterates of ``letter`` double in length every step,
    i.e. len(s^n(letter)) == 2^n for n = 1..n_max."""
    w: Word = (letter,)
    for n in range(1, n_max + 1):
        w = s.apply(w)
        if len(w) != 2 ** n:
            return False
    return True


@lru_cache(maxsize=None)
def _is_primitive_cached(s: Substitution) -> bool:
    return s.incidence_matrix().is_primitive()
