"""Words over small integer alphabets and circular words (necklaces).

A word is a tuple of ints. Symbols of a k-letter alphabet are 0..k-1; when an
alphabet is enlarged by one symbol, the new symbol is the integer k.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass

Word = tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"alphabet needs at least 2 symbols, got k={self.k}")

    @property
    def new_symbol(self) -> int:
        return self.k

    def contains(self, word: Iterable[int], extended: bool = False) -> bool:
        size = self.k + 1 if extended else self.k
        return all(0 <= a < size for a in word)


@dataclass(frozen=True)
class Necklace:
    """Rotation class of a word, stored as its least rotation."""

    canon: Word
    period: int

    @property
    def length(self) -> int:
        return len(self.canon)

    def rotations(self) -> list[Word]:
        """The `period` distinct rotations, starting from the canonical one."""
        c = self.canon
        return [c[i:] + c[:i] for i in range(self.period)]

    def __str__(self):
        return "[" + "".join(map(str, self.canon)) + "]"


def least_rotation_offset(word: Sequence[int]) -> int:
    # Booth's algorithm
    s = list(word) * 2
    n = len(s)
    f = [-1] * n
    k = 0
    for j in range(1, n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def period(word: Sequence[int]) -> int:
    """Smallest p dividing len(word) such that rotating by p fixes the word."""
    n = len(word)
    pi = [0] * n
    for i in range(1, n):
        j = pi[i - 1]
        while j and word[i] != word[j]:
            j = pi[j - 1]
        if word[i] == word[j]:
            j += 1
        pi[i] = j
    p = n - pi[-1]
    return p if n % p == 0 else n


def canonical_rotation(word: Sequence[int]) -> Necklace:
    if len(word) == 0:
        raise ValueError("empty word has no canonical rotation")
    w = tuple(word)
    i = least_rotation_offset(w)
    canon = w[i:] + w[:i]
    return Necklace(canon, period(canon))


def rotations(word: Sequence[int]) -> list[Word]:
    w = tuple(word)
    if not w:
        raise ValueError("empty word")
    return [w[i:] + w[:i] for i in range(len(w))]


def count_symbol(word: Iterable[int], sym: int) -> int:
    return sum(1 for a in word if a == sym)


def iter_necklaces(length: int, k: int) -> Iterator[Necklace]:
    """Yield every necklace of the given length over k symbols, in lexicographic order.

    Iterative prenecklace generation; a prenecklace a_1..a_L with last Lyndon
    prefix length p is a necklace iff p divides L.
    """
    if length < 1:
        raise ValueError("necklace length must be >= 1")
    a = [0] * (length + 1)
    p = 1
    while True:
        if length % p == 0:
            canon = tuple(a[1:])
            # least period of a necklace is the length of its Lyndon root
            yield Necklace(canon, p)
        # next prenecklace
        i = length
        while i > 0 and a[i] == k - 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, length + 1):
            a[j] = a[j - i]
        p = i


def necklaces(
    length: int,
    k: int,
    where: Callable[[int], bool] | None = None,
    sym: int | None = None,
) -> list[Necklace]:
    """All necklaces of `length` over k symbols, lexicographic by canonical form.

    `where` filters on the number of occurrences of `sym` (default: the largest
    symbol k-1, i.e. the new symbol when k counts an enlarged alphabet).
    """
    if where is None:
        return list(iter_necklaces(length, k))
    if sym is None:
        sym = k - 1
    return [c for c in iter_necklaces(length, k) if where(count_symbol(c.canon, sym))]
