"""Black-box checks of an extension (v, w): order, circular subsequence, window.

Nothing here looks at how w was built.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Check, is_de_bruijn


def verify_order(seq: Sequence[int], k: int, n: int) -> Check:
    return is_de_bruijn(seq, k, n)


def _greedy_embed(v: Sequence[int], w: Sequence[int], offset: int) -> list[int] | None:
    """Leftmost embedding of v into the rotation of w starting at `offset`."""
    N = len(w)
    pos = []
    t = 0
    for a in v:
        while t < N and w[(offset + t) % N] != a:
            t += 1
        if t == N:
            return None
        pos.append(t)
        t += 1
    return pos


def verify_subsequence(
    v: Sequence[int], w: Sequence[int], witness: Sequence[int] | None = None
) -> Check:
    """Is the circular word [v] a subsequence of the circular word [w]?

    It suffices to try v itself against every rotation of w: an embedding of
    any rotation of v can be re-rooted at the image of v[0]. Rotations of w
    not starting with v[0] can be skipped, since greedy would move past them.
    The witness returned is (offset, positions relative to that offset).

    A `witness` of strictly increasing positions into the linear w is checked
    first and, when it holds, returned unchanged with offset 0.
    """
    v, w = tuple(v), tuple(w)
    if not v:
        return Check(True, witness=(0, []))
    if len(v) > len(w):
        return Check(False, f"|v| = {len(v)} > |w| = {len(w)}")
    if witness is not None and _valid_witness(v, w, witness):
        return Check(True, witness=(0, list(witness)))
    for o in range(len(w)):
        if w[o] != v[0]:
            continue
        pos = _greedy_embed(v, w, o)
        if pos is not None:
            return Check(True, witness=(o, pos))
    return Check(False, "no rotation of w contains v as a subsequence")


def _valid_witness(v, w, positions) -> bool:
    if len(positions) != len(v):
        return False
    prev = -1
    for a, p in zip(v, positions):
        if not (prev < p < len(w)) or w[p] != a:
            return False
        prev = p
    return True


def verify_window(w: Sequence[int], sym: int, window: int) -> Check:
    """Does every circular window of `window` consecutive symbols contain `sym`?

    On failure the witness is the first offset whose window misses `sym`.
    """
    w = tuple(w)
    N = len(w)
    if not 1 <= window <= N:
        raise ValueError(f"window {window} must lie in 1..{N}")
    if sym not in w:
        return Check(False, f"symbol {sym} never occurs", witness=0)
    # gap[i] = steps from offset i to the next occurrence of sym, circularly
    gap = [0] * N
    last = None
    for i in range(2 * N - 1, -1, -1):
        if w[i % N] == sym:
            last = i
        if i < N:
            gap[i] = last - i
    for i in range(N):
        if gap[i] >= window:
            return Check(False, f"window at offset {i} has no {sym}", witness=i)
    return Check(True)


@dataclass(frozen=True)
class ExtensionReport:
    de_bruijn: Check
    subsequence: Check
    window: Check
    window_bound: int

    @property
    def passed(self) -> bool:
        return bool(self.de_bruijn and self.subsequence and self.window)

    def checks(self) -> dict[str, bool]:
        return {
            "de_bruijn": self.de_bruijn.ok,
            "subsequence": self.subsequence.ok,
            "window": self.window.ok,
        }

    def summary(self) -> str:
        lines = []
        for name, c in (
            ("de_bruijn", self.de_bruijn),
            ("subsequence", self.subsequence),
            ("window", self.window),
        ):
            lines.append(f"{name}: {'PASS' if c.ok else 'FAIL'}" + (f" ({c.detail})" if c.detail else ""))
        return "\n".join(lines)


def verify_extension(
    v: Sequence[int],
    w: Sequence[int],
    k: int,
    n: int,
    witness: Sequence[int] | None = None,
) -> ExtensionReport:
    """Check w against the three guarantees for extending v (order n, k symbols).

    The window is n+2k-1, clamped to |w| when w is shorter (only for n = 1).
    """
    bound = n + 2 * k - 1
    order = verify_order(w, k + 1, n)
    sub = verify_subsequence(v, w, witness)
    if len(w) == 0:
        win = Check(False, "empty output")
    else:
        win = verify_window(w, k, min(bound, len(w)))
    return ExtensionReport(order, sub, win, bound)
