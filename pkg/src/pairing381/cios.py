"""Word-array Montgomery arithmetic (CIOS form).

This is the measured execution path: values are little-endian limb tuples and
the word counters are accumulated from the loops that actually ran, not from a
closed formula. One multiplication performs s(2s+1) word multiplications and
2(2s^2+2s+1) word additions, where the trailing 2(s+1) additions are the
constant-time final correction (a full borrow-propagating subtract of the
modulus followed by a masked add-back). All selection is mask arithmetic;
nothing branches on data.

Accounting conventions, used identically by the big-integer path:
  mont mul   s(2s+1) word muls, 2(2s^2+2s+1) word adds
  mod add    2s+1 word adds (sum pass, subtract pass with top word)
  mod sub    2s   word adds (subtract pass, masked add-back pass)
The word-wise select that follows mod_add's two passes is pure bit logic and
is not charged as addition.
"""


def to_limbs(x: int, spec) -> tuple[int, ...]:
    w = spec.word_size
    return tuple((x >> (i * w)) & spec.word_mask for i in range(spec.limbs))


def from_limbs(limbs, spec) -> int:
    w = spec.word_size
    return sum(v << (i * w) for i, v in enumerate(limbs))


def cios_mont_mul(a, b, spec, ctr):
    s, w, mask = spec.limbs, spec.word_size, spec.word_mask
    n, np0 = spec.mod_limbs, spec.np0
    t = [0] * (s + 2)
    wm = 0
    wa = 0
    for i in range(s):
        bi = b[i]
        c = 0
        for j in range(s):
            v = t[j] + a[j] * bi + c
            t[j] = v & mask
            c = v >> w
        v = t[s] + c
        t[s] = v & mask
        t[s + 1] = v >> w
        wm += s
        wa += 2 * s + 1
        m = (t[0] * np0) & mask
        v = t[0] + m * n[0]
        c = v >> w
        for j in range(1, s):
            v = t[j] + m * n[j] + c
            t[j - 1] = v & mask
            c = v >> w
        v = t[s] + c
        t[s - 1] = v & mask
        t[s] = t[s + 1] + (v >> w)
        wm += s + 1
        wa += 2 * s + 1
    # result t < 2n fits in s+1 words; one masked correction
    u = [0] * s
    borrow = 0
    for j in range(s):
        v = t[j] - n[j] - borrow
        u[j] = v & mask
        borrow = -(v >> w)      # arithmetic shift: 1 on underflow, else 0
    borrow = -((t[s] - borrow) >> w)
    wa += s + 1
    addmask = (-borrow) & mask  # all ones iff t < n: add n back
    c = 0
    out = [0] * s
    for j in range(s):
        v = u[j] + (n[j] & addmask) + c
        out[j] = v & mask
        c = v >> w
    wa += s + 1                 # top-word carry fold is the (s+1)th addition
    ctr.word_mul += wm
    ctr.word_add += wa
    return tuple(out)


def word_mod_add(a, b, spec, ctr):
    s, w, mask = spec.limbs, spec.word_size, spec.word_mask
    n = spec.mod_limbs
    r = [0] * s
    c = 0
    for j in range(s):
        v = a[j] + b[j] + c
        r[j] = v & mask
        c = v >> w
    u = [0] * s
    borrow = 0
    for j in range(s):
        v = r[j] - n[j] - borrow
        u[j] = v & mask
        borrow = -(v >> w)
    borrow = -((c - borrow) >> w)
    ctr.word_add += 2 * s + 1
    # borrow set means r+carry < n: keep the unsubtracted sum
    keep = (-borrow) & mask
    return tuple((r[j] & keep) | (u[j] & ~keep & mask) for j in range(s))


def word_mod_sub(a, b, spec, ctr):
    s, w, mask = spec.limbs, spec.word_size, spec.word_mask
    n = spec.mod_limbs
    u = [0] * s
    borrow = 0
    for j in range(s):
        v = a[j] - b[j] - borrow
        u[j] = v & mask
        borrow = -(v >> w)
    addmask = (-borrow) & mask
    out = [0] * s
    c = 0
    for j in range(s):
        v = u[j] + (n[j] & addmask) + c
        out[j] = v & mask
        c = v >> w
    ctr.word_add += 2 * s
    return tuple(out)
