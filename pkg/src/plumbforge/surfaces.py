"""Marked surfaces, Dehn-twist words, and the relator-signature ledger.

Curves are carried by name plus first-homology class only.  The class
lattice of a genus-g surface with b boundary components has rank 2g+b-1,
ordered (a_1, b_1, ..., a_g, b_g, d_1, ..., d_{b-1}): symplectic pairs
first, then boundary classes spanning the radical (the last boundary
class is -(d_1+...+d_{b-1}) and has no coordinate of its own).

Words are immutable tuples of letters; letters listed left to right are
composed right to left as mappings, so the homology action of a word is
the matrix product T(w_1) T(w_2) ... T(w_n) acting on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import DomainError, RelatorMismatchError


@dataclass(frozen=True)
class MarkedSurface:
    genus: int
    boundary: int

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise DomainError("genus and boundary count must be nonnegative")

    @property
    def rank(self) -> int:
        return max(2 * self.genus + self.boundary - 1, 0)

    def alpha(self, i: int) -> tuple[int, ...]:
        """Class of the i-th handle curve a_i (1-based)."""
        return self._unit(2 * (i - 1))

    def beta(self, i: int) -> tuple[int, ...]:
        return self._unit(2 * (i - 1) + 1)

    def delta(self, j: int) -> tuple[int, ...]:
        """Class of the j-th boundary circle (1-based); the last one is
        minus the sum of the others."""
        if not (1 <= j <= self.boundary):
            raise DomainError(f"boundary index {j} out of range")
        if j < self.boundary:
            return self._unit(2 * self.genus + j - 1)
        v = [0] * self.rank
        for k in range(2 * self.genus, self.rank):
            v[k] = -1
        return tuple(v)

    def _unit(self, k: int) -> tuple[int, ...]:
        v = [0] * self.rank
        v[k] = 1
        return tuple(v)

    def pair(self, x, y) -> int:
        """Intersection pairing: <a_i, b_i> = +1, boundary classes central."""
        total = 0
        for i in range(self.genus):
            total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]
        return total

    def is_central(self, x) -> bool:
        """True when x lies in the radical (pairs to zero with everything)."""
        return all(c == 0 for c in x[: 2 * self.genus])


def transvection(surface: MarkedSurface, x, c, exponent: int = 1):
    """Picard-Lefschetz action of t_c^exponent on the class x."""
    if len(x) != surface.rank or len(c) != surface.rank:
        raise DomainError("class dimension mismatch")
    p = surface.pair(x, c)
    return tuple(xi + exponent * p * ci for xi, ci in zip(x, c))


def transvection_matrix(surface: MarkedSurface, c, exponent: int = 1):
    n = surface.rank
    cols = []
    for k in range(n):
        e = tuple(1 if i == k else 0 for i in range(n))
        cols.append(transvection(surface, e, c, exponent))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class Letter:
    name: str
    exponent: int  # +1 or -1
    cls: tuple[int, ...]

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise DomainError("exponent must be +1 or -1")


@dataclass(frozen=True)
class TwistWord:
    surface: MarkedSurface
    letters: tuple[Letter, ...]
    ledger: tuple[tuple[str, int], ...] = ()  # (relator, signed count) entries

    def __post_init__(self):
        for l in self.letters:
            if len(l.cls) != self.surface.rank:
                raise DomainError(f"letter {l.name} has wrong class dimension")

    def __len__(self):
        return len(self.letters)

    @property
    def positive(self) -> bool:
        return all(l.exponent == 1 for l in self.letters)

    @property
    def allowable(self) -> bool:
        return all(any(c != 0 for c in l.cls) for l in self.letters)

    def classes_matrix(self) -> list[list[int]]:
        """Letter classes as columns (rank x length)."""
        n = self.surface.rank
        return [[l.cls[i] for l in self.letters] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [
        [sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
        for i in range(n)
    ]


def identity_matrix(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def word_action(word: TwistWord) -> list[list[int]]:
    """Homology action: product of letter transvections, rightmost first."""
    m = identity_matrix(word.surface.rank)
    for l in word.letters:
        m = mat_mul(m, transvection_matrix(word.surface, l.cls, l.exponent))
    return m


def apply_word_to_class(word_letters, surface: MarkedSurface, x, invert=False):
    """Image of the class x under the mapping class given by the letters."""
    seq = word_letters if invert else tuple(reversed(word_letters))
    for l in seq:
        x = transvection(surface, x, l.cls, -l.exponent if invert else l.exponent)
    return x


def hurwitz_move(word: TwistWord, i: int) -> TwistWord:
    """(..., a, b, ...) -> (..., a(b), a, ...) at 1-based position i.

    a(b) is the image class of b under t_a^(exp a); the homology action of
    the word is unchanged.
    """
    if not (1 <= i < len(word)):
        raise DomainError(f"hurwitz index {i} out of range")
    a, b = word.letters[i - 1], word.letters[i]
    moved = Letter(
        b.name, b.exponent, transvection(word.surface, b.cls, a.cls, a.exponent)
    )
    letters = word.letters[: i - 1] + (moved, a) + word.letters[i + 1:]
    return replace(word, letters=letters)


def hurwitz_move_inverse(word: TwistWord, i: int) -> TwistWord:
    """(..., a, b, ...) -> (..., b, b^{-1}(a), ...): inverse of hurwitz_move."""
    if not (1 <= i < len(word)):
        raise DomainError(f"hurwitz index {i} out of range")
    a, b = word.letters[i - 1], word.letters[i]
    moved = Letter(
        a.name, a.exponent, transvection(word.surface, a.cls, b.cls, -b.exponent)
    )
    letters = word.letters[: i - 1] + (b, moved) + word.letters[i + 1:]
    return replace(word, letters=letters)


def gather_commuting(word: TwistWord, indices: list[int]) -> tuple[TwistWord, int]:
    """Hurwitz-slide the letters at `indices` (0-based) into one contiguous
    block ending at the rightmost of them; every crossed pair must have zero
    pairing so classes are unchanged.  Returns (word, start of block)."""
    idx = sorted(indices)
    target = idx[-1]
    out = word
    # move each selected letter right, last selected first stays put
    positions = idx[:]
    for k in range(len(positions) - 2, -1, -1):
        pos = positions[k]
        dest = positions[k + 1] - 1
        while pos < dest:
            a = out.letters[pos]
            b = out.letters[pos + 1]
            if out.surface.pair(a.cls, b.cls) != 0:
                raise RelatorMismatchError(
                    f"letters {a.name} and {b.name} do not commute homologically"
                )
            out = hurwitz_move_inverse(out, pos + 1)
            pos += 1
        positions[k] = pos
    start = target - len(indices) + 1
    return out, start


def substitute(
    word: TwistWord,
    start: int,
    count: int,
    relator: str,
    replacement: list[Letter],
    inverse: bool = False,
) -> TwistWord:
    """Replace letters [start, start+count) by `replacement`, recording the
    relator in the ledger.  The removed segment and the replacement must act
    identically on homology; anything else is a relator mismatch."""
    if not (0 <= start and start + count <= len(word)):
        raise DomainError("substitution site out of range")
    removed = TwistWord(word.surface, word.letters[start: start + count])
    added = TwistWord(word.surface, tuple(replacement))
    if word_action(removed) != word_action(added):
        raise RelatorMismatchError(f"relator mismatch at site {start}")
    letters = word.letters[:start] + tuple(replacement) + word.letters[start + count:]
    delta = -1 if inverse else 1
    return TwistWord(word.surface, letters, word.ledger + ((relator, delta),))


# -- relator signatures -------------------------------------------------------

CHAIN_PREFIX = "C_"
DAISY_PREFIX = "DAISY_"
LANTERN = "L"
STAR = "STAR"


def relator_signature(name: str) -> int | None:
    """Signature contribution of one relator; None when not determined.

    Chain relators C_k (k odd, k = 2h+1) contribute -2h(h+2); the lantern
    contributes +1; a daisy derived from q lanterns contributes q.  The star
    relator's signature is deliberately left undetermined.
    """
    if name == LANTERN:
        return 1
    if name == STAR:
        return None
    if name.startswith(CHAIN_PREFIX):
        k = int(name[len(CHAIN_PREFIX):])
        if k < 3 or k % 2 == 0:
            raise DomainError(f"chain relator {name} must have odd length >= 3")
        h = (k - 1) // 2
        return -2 * h * (h + 2)
    if name.startswith(DAISY_PREFIX):
        q = int(name[len(DAISY_PREFIX):])
        return q
    raise DomainError(f"unknown relator {name!r}")


def ledger_signature(ledger) -> int | None:
    """Signed sum of relator signatures; None if any entry is undetermined."""
    total = 0
    for name, count in ledger:
        if count == 0:
            continue
        sig = relator_signature(name)
        if sig is None:
            return None
        total += sig * count
    return total


# -- word file format ---------------------------------------------------------
#
#   surface g <g> b <b>
#   twist <name> exp <+1|-1> class <c_1> ... <c_{2g+b-1}>
#   ledger <relator> <count>


def word_to_text(word: TwistWord) -> str:
    s = word.surface
    lines = [f"surface g {s.genus} b {s.boundary}"]
    for l in word.letters:
        cls = " ".join(str(c) for c in l.cls)
        exp = "+1" if l.exponent == 1 else "-1"
        lines.append(f"twist {l.name} exp {exp} class {cls}".rstrip())
    for name, count in word.ledger:
        lines.append(f"ledger {name} {count}")
    return "\n".join(lines) + "\n"


def word_from_text(text: str) -> TwistWord:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("surface "):
        raise DomainError("word file must start with 'surface g <g> b <b>'")
    head = lines[0].split()
    if len(head) != 5 or head[1] != "g" or head[3] != "b":
        raise DomainError(f"bad surface line: {lines[0]!r}")
    surface = MarkedSurface(int(head[2]), int(head[4]))
    letters = []
    ledger = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "twist":
            if parts[2] != "exp" or parts[4] != "class":
                raise DomainError(f"bad twist line: {ln!r}")
            cls = tuple(int(x) for x in parts[5:])
            letters.append(Letter(parts[1], int(parts[3]), cls))
        elif parts[0] == "ledger":
            if len(parts) != 3:
                raise DomainError(f"bad ledger line: {ln!r}")
            ledger.append((parts[1], int(parts[2])))
        else:
            raise DomainError(f"unrecognized line: {ln!r}")
    return TwistWord(surface, tuple(letters), tuple(ledger))
