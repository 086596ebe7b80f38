"""Permutations of tensor legs written as words in adjacent transpositions."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Permutation:
    """``s = s_{i1} s_{i2} ... s_{ip}`` acting on ``{1, ..., n}``.

    As a map the rightmost letter acts first, so ``Permutation(3, (2, 1))``
    sends 1 to 3.  ``s_i`` swaps ``i`` and ``i + 1``.
    """

    n: int
    word: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(i) for i in self.word))
        for i in self.word:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"transposition s_{i} out of range for n={self.n}")

    @classmethod
    def from_one_line(cls, images):
        """Reduced word of the permutation ``k -> images[k-1]``.

        Leftmost-descent bubble sort, so the word is canonical.
        """
        perm = list(images)
        n = len(perm)
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images}")
        letters = []
        while True:
            for i in range(n - 1):
                if perm[i] > perm[i + 1]:
                    perm[i], perm[i + 1] = perm[i + 1], perm[i]
                    letters.append(i + 1)
                    break
            else:
                break
        return cls(n, tuple(reversed(letters)))

    def __call__(self, k):
        for i in reversed(self.word):
            if k == i:
                k = i + 1
            elif k == i + 1:
                k = i
        return k

    def one_line(self):
        return tuple(self(k) for k in range(1, self.n + 1))

    def apply_set(self, elements):
        return tuple(sorted(self(k) for k in elements))

    def __mul__(self, other):
        """Composition: ``(s * t)(k) == s(t(k))``."""
        if self.n != other.n:
            raise ValueError("permutations act on different arities")
        return Permutation(self.n, self.word + other.word)

    def inverse(self):
        return Permutation(self.n, tuple(reversed(self.word)))

    def reduced(self):
        return Permutation.from_one_line(self.one_line())

    def __len__(self):
        return len(self.word)


def shuffle_word(source, target, n):
    """Canonical word sending the sorted subset ``source`` onto ``target``.

    Elements keep their relative order and so do the remaining legs; the
    word is the reduced word of that permutation.
    """
    source, target = tuple(sorted(source)), tuple(sorted(target))
    if len(source) != len(target):
        raise ValueError("subsets of different sizes")
    rest_src = [k for k in range(1, n + 1) if k not in source]
    rest_tgt = [k for k in range(1, n + 1) if k not in target]
    images = [0] * n
    for a, b in zip(source + tuple(rest_src), target + tuple(rest_tgt)):
        images[a - 1] = b
    return Permutation.from_one_line(images)
