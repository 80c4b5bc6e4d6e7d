"""Words over the twin-group presentation and the word problem.

The twin group on n strands is generated by involutions s_1, ..., s_{n-1}
in which s_i and s_j commute exactly when |i - j| >= 2 (far commutativity).
Three elementary transformations connect words that represent the same
element: deleting a square s_i s_i, inserting one, and flipping an adjacent
commuting pair s_i s_j -> s_j s_i.

Conventions used throughout the package:

- generator indices are 1-based and every word carries its strand count, so
  cross-strand operations have to be explicit (see the markov module);
- the empty word is the identity element and prints as "e";
- a word is *reduced* when no chain of elementary transformations shortens
  it; equivalently, between any two occurrences of s_i there is at least
  one s_{i-1} or s_{i+1};
- reduced representatives of one element differ only by flips, and the
  *normal form* picks the lexicographically least of them; two words
  represent the same element iff their normal forms agree letterwise.

All values are immutable and all operations are pure functions, so
everything here is safe for unrestricted concurrent use.
"""

from __future__ import annotations

import dataclasses


def commutes(a: int, b: int) -> bool:
    """Whether the generators s_a and s_b commute."""
    return abs(a - b) >= 2


@dataclasses.dataclass(frozen=True)
class Word:
    """A word in the generators s_1 .. s_{n-1} of the twin group on n strands.

    ``letters`` holds 1-based generator indices; the empty tuple is the
    identity.  Multiplication is concatenation without reduction, and the
    inverse is the reversal (every generator is an involution).
    """

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be at least 1, got {self.n}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not 1 <= x <= self.n - 1:
                raise ValueError(f"letter s{x} out of range on {self.n} strands")

    @classmethod
    def identity(cls, n: int) -> Word:
        return cls(n, ())

    @classmethod
    def parse(cls, n: int, text: str) -> Word:
        """Parse the s-token grammar: "s1 s2 s1", bare digits, or "e"."""
        tokens = text.split()
        if tokens == ["e"]:
            return cls(n, ())
        letters = []
        for tok in tokens:
            body = tok[1:] if tok.startswith("s") else tok
            if not body.isdigit():
                raise ValueError(f"bad generator token {tok!r}")
            letters.append(int(body))
        return cls(n, tuple(letters))

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"s{x}" for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.n, self.letters * k)

    def inverse(self) -> Word:
        return Word(self.n, self.letters[::-1])


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """The canonical (lexicographically least reduced) word of an element."""

    word: Word

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def letters(self) -> tuple[int, ...]:
        return self.word.letters

    def __len__(self) -> int:
        return len(self.word.letters)

    def __str__(self) -> str:
        return str(self.word)


def multiply(u: Word, v: Word) -> Word:
    """Concatenate two words on the same strand count; no reduction."""
    if u.n != v.n:
        raise ValueError(f"strand counts differ: {u.n} vs {v.n}")
    return Word(u.n, u.letters + v.letters)


def inverse(w: Word) -> Word:
    """Letter-reversed word; generators are involutions."""
    return w.inverse()


def _reduce_letters(letters) -> list[int]:
    # Left-to-right stack scan: an incoming letter cancels the nearest equal
    # letter reachable backwards through commuting letters, else is appended.
    out: list[int] = []
    for x in letters:
        k = len(out) - 1
        cancel = -1
        while k >= 0:
            d = out[k] - x
            if d == 0:
                cancel = k
                break
            if -2 < d < 2:
                break
            k -= 1
        if cancel >= 0:
            del out[cancel]
        else:
            out.append(x)
    return out


def _canonical_letters(letters, n: int) -> tuple[int, ...]:
    # Greedy trace normal form of a reduced word: repeatedly emit the least
    # letter that commutes with everything before it.
    rem = list(letters)
    out: list[int] = []
    while rem:
        blocked = [False] * (n + 2)
        best = n
        best_pos = -1
        for pos, x in enumerate(rem):
            if not (blocked[x - 1] or blocked[x] or blocked[x + 1]) and x < best:
                best = x
                best_pos = pos
            blocked[x] = True
        out.append(rem[best_pos])
        del rem[best_pos]
    return tuple(out)


def normal_letters(letters, n: int) -> tuple[int, ...]:
    """Canonical letter tuple of the element spelled by ``letters``."""
    return _canonical_letters(_reduce_letters(letters), n)


def reduce(w: Word) -> NormalForm:
    """Canonical normal form of the element represented by ``w``."""
    return NormalForm(Word(w.n, normal_letters(w.letters, w.n)))


def _is_reduced_letters(letters) -> bool:
    last: dict[int, int] = {}
    for q, x in enumerate(letters):
        p = last.get(x)
        if p is not None:
            if not any(abs(letters[m] - x) == 1 for m in range(p + 1, q)):
                return False
        last[x] = q
    return True


def is_reduced(w: Word) -> bool:
    """Shortest-length criterion: between any two occurrences of s_i there
    is at least one s_{i-1} or s_{i+1}."""
    return _is_reduced_letters(w.letters)


def equal(u: Word, v: Word) -> bool:
    """Whether u and v represent the same group element."""
    if u.n != v.n:
        raise ValueError(f"strand counts differ: {u.n} vs {v.n}")
    return normal_letters(u.letters, u.n) == normal_letters(v.letters, v.n)


def flip_equivalent(u: Word, v: Word) -> bool:
    """Whether two reduced words differ by flips alone."""
    if u.n != v.n:
        raise ValueError(f"strand counts differ: {u.n} vs {v.n}")
    if not is_reduced(u) or not is_reduced(v):
        raise ValueError("flip equivalence is only defined for reduced words")
    if len(u.letters) != len(v.letters):
        return False
    return _canonical_letters(u.letters, u.n) == _canonical_letters(v.letters, v.n)


def support(w: Word) -> frozenset[int]:
    """Set of generator indices appearing in the reduced form of ``w``."""
    return frozenset(_reduce_letters(w.letters))


def parity_vector(w: Word) -> tuple[int, ...]:
    """Letter counts mod 2, one bit per generator; bit j-1 belongs to s_j.

    Invariant under all three elementary transformations, hence a function
    of the group element (the mod-2 abelianisation).
    """
    counts = [0] * (w.n - 1)
    for x in w.letters:
        counts[x - 1] ^= 1
    return tuple(counts)


@dataclasses.dataclass(frozen=True)
class Move:
    """One elementary transformation applied at a position.

    kind "delete" removes the equal pair at (pos, pos+1); "insert" puts the
    square s_letter s_letter at pos; "flip" swaps the commuting pair at
    (pos, pos+1).  Deletions record the removed letter so they invert.
    """

    kind: str
    pos: int
    letter: int | None = None

    def __str__(self) -> str:
        if self.kind == "flip":
            return f"flip@{self.pos}"
        return f"{self.kind}@{self.pos}(s{self.letter})"


def _apply_move(letters: list[int], move: Move) -> None:
    if move.kind == "delete":
        if move.pos + 1 >= len(letters) or letters[move.pos] != letters[move.pos + 1]:
            raise ValueError(f"illegal {move} on {letters}")
        del letters[move.pos : move.pos + 2]
    elif move.kind == "insert":
        if not 0 <= move.pos <= len(letters) or move.letter is None:
            raise ValueError(f"illegal {move} on {letters}")
        letters[move.pos : move.pos] = [move.letter, move.letter]
    elif move.kind == "flip":
        if move.pos + 1 >= len(letters) or not commutes(
            letters[move.pos], letters[move.pos + 1]
        ):
            raise ValueError(f"illegal {move} on {letters}")
        letters[move.pos], letters[move.pos + 1] = (
            letters[move.pos + 1],
            letters[move.pos],
        )
    else:
        raise ValueError(f"unknown move kind {move.kind!r}")


@dataclasses.dataclass(frozen=True)
class MoveCertificate:
    """An explicit chain of elementary transformations from source to target."""

    source: Word
    target: Word
    moves: tuple[Move, ...]

    def apply_to(self, w: Word) -> Word:
        """Replay the chain on ``w``, validating every move."""
        letters = list(w.letters)
        for move in self.moves:
            _apply_move(letters, move)
        return Word(w.n, tuple(letters))

    def __str__(self) -> str:
        return "; ".join(str(m) for m in self.moves) if self.moves else "(empty)"


def _moves_to_normal(letters) -> tuple[list[int], list[Move]]:
    # Phase 1: cancel equal pairs joined by commuting letters, realised as
    # flips that bring the pair together followed by one deletion.
    work = list(letters)
    moves: list[Move] = []
    while True:
        found = None
        for q in range(len(work)):
            for p in range(q - 1, -1, -1):
                if work[p] == work[q] and all(
                    commutes(work[m], work[q]) for m in range(p + 1, q)
                ):
                    found = (p, q)
                    break
            if found:
                break
        if not found:
            break
        p, q = found
        for m in range(p, q - 1):
            moves.append(Move("flip", m))
            work[m], work[m + 1] = work[m + 1], work[m]
        moves.append(Move("delete", q - 1, work[q - 1]))
        del work[q - 1 : q + 1]
    # Phase 2: sort into the canonical form with flips.
    for t in range(len(work)):
        best_pos = t
        best = None
        for pos in range(t, len(work)):
            x = work[pos]
            if all(commutes(work[j], x) for j in range(t, pos)):
                if best is None or x < best:
                    best = x
                    best_pos = pos
        for j in range(best_pos - 1, t - 1, -1):
            moves.append(Move("flip", j))
            work[j], work[j + 1] = work[j + 1], work[j]
    return work, moves


def certificate(u: Word, v: Word) -> MoveCertificate:
    """Explicit elementary-transformation chain turning ``u`` into ``v``.

    Both words are driven to the shared normal form while recording moves;
    the v-side moves are then inverted and reversed, so replaying the chain
    on ``u`` yields exactly the letter sequence of ``v``.
    """
    if not equal(u, v):
        raise ValueError("words are not equal as group elements")
    _, forward = _moves_to_normal(u.letters)
    _, backward = _moves_to_normal(v.letters)
    inverted = []
    for move in reversed(backward):
        if move.kind == "delete":
            inverted.append(Move("insert", move.pos, move.letter))
        elif move.kind == "insert":
            inverted.append(Move("delete", move.pos, move.letter))
        else:
            inverted.append(move)
    return MoveCertificate(u, v, tuple(forward) + tuple(inverted))
