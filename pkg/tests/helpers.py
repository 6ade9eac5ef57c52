"""Shared test helpers: independent slow-path oracles and random data.

The evaluators here deliberately avoid the library's lookup code: plain
linear scans over breakpoint data, and window representatives instead of
anchored lifts for the circle, so they can serve as oracles.
"""

from fractions import Fraction as F

from plgroups import PLMapLine, Word

# the calibrated reference bump on (0, 2), written out by hand
BUMP_DATA = ((F(0), F(0)), (F(1, 2), F(1)), (F(1), F(3, 2)), (F(2), F(2)))

DEN = 64


def naive_line_eval(bps, tl, tr, x):
    """Per-segment affine interpolation by linear scan."""
    if not bps or x <= bps[0][0]:
        return x + tl
    if x >= bps[-1][0]:
        return x + tr
    for (x0, y0), (x1, y1) in zip(bps, bps[1:]):
        if x0 <= x <= x1:
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    raise AssertionError("scan fell through")


def naive_map_eval(m, x):
    return naive_line_eval(m.breakpoints, m.left_offset, m.right_offset, x)


def shifted_bump_data(shift):
    return tuple((x + shift, y + shift) for x, y in BUMP_DATA)


def ring_gen_eval(i, x):
    """Standard five-ring generator ``i`` at circle point ``x``.

    Uses the window representative in ``[i, i+5)`` and the shifted bump,
    no lifts involved.
    """
    L = F(5)
    rep = x % L
    while rep < i:
        rep += L
    val = naive_line_eval(shifted_bump_data(F(i)), F(0), F(0), rep)
    return val % L


def ring_word_eval(letters, x):
    """Apply ring generator letters right to left at a circle point."""
    for i in reversed(letters):
        x = ring_gen_eval(i, x)
    return x


# --------------------------------------------------------------------------
# random data

def rnd_dyadics(rng, k, lo=-8, hi=8):
    pts = rng.sample(range(lo * DEN, hi * DEN + 1), k)
    return sorted(F(p, DEN) for p in pts)


def random_line_map(rng, max_bps=16):
    k = rng.randint(0, max_bps)
    if k < 2:
        return PLMapLine.translation(F(rng.randint(-4 * DEN, 4 * DEN), DEN))
    xs = rnd_dyadics(rng, k)
    ys = rnd_dyadics(rng, k)
    return PLMapLine.make(tuple(zip(xs, ys)))


def random_small_map(rng, max_interior=8):
    """A random map supported inside ``(0, 1/2)``."""
    k = rng.randint(0, max_interior)
    xs = sorted(rng.sample(range(1, 32), k))
    ys = sorted(rng.sample(range(1, 32), k))
    bps = [(F(0), F(0))]
    bps += [(F(a, DEN), F(b, DEN)) for a, b in zip(xs, ys)]
    bps += [(F(1, 2), F(1, 2))]
    return PLMapLine.make(bps)


def random_word(rng, names, max_len=6):
    letters = []
    last = None
    for _ in range(rng.randint(0, max_len)):
        options = [(n, s) for n in names for s in (1, -1)
                   if not (last and last[0] == n and last[1] == -s)]
        last = rng.choice(options)
        letters.append(last)
    return Word.make(letters)


def perturbed_bumps():
    """Calibrated variants of the reference bump: same support ``(0,2)``,
    same values at ``1/2`` and ``1``, extra or moved interior breakpoints."""
    variants = [
        ((F(0), F(0)), (F(1, 4), F(5, 8)), (F(1, 2), F(1)), (F(1), F(3, 2)), (F(2), F(2))),
        ((F(0), F(0)), (F(1, 2), F(1)), (F(3, 4), F(9, 8)), (F(1), F(3, 2)), (F(2), F(2))),
        ((F(0), F(0)), (F(1, 2), F(1)), (F(1), F(3, 2)), (F(3, 2), F(15, 8)), (F(2), F(2))),
    ]
    return [PLMapLine.make(v) for v in variants]
