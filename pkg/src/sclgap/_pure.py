"""Pure-Python word kernels.

Words in the rank-2 free group are strings over ``a A b B`` where the
uppercase letter is the inverse of the lowercase one.  The compiled
module ``sclgap._speedups`` implements the same five functions; the
dispatcher in ``sclgap._kernels`` picks whichever is available.
"""

_INV = {"a": "A", "A": "a", "b": "B", "B": "b"}

# eta0 scores a length-2 window: +1 for ab and AB, -1 for ba and BA.
_PAIR_SCORE = {"ab": 1, "AB": 1, "ba": -1, "BA": -1}


def reduce_word(s: str) -> str:
    """Freely reduce a word, cancelling adjacent inverse pairs."""
    out: list[str] = []
    for ch in s:
        if out and out[-1] == _INV[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def eta0(s: str) -> int:
    """Value of the counting quasimorphism ab-minus-ba on a reduced word."""
    total = 0
    for i in range(len(s) - 1):
        total += _PAIR_SCORE.get(s[i : i + 2], 0)
    return total


def _collapse(s: str, block: str, seps: str) -> str:
    out: list[str] = []
    i = 0
    if s and s[0] in seps:
        out.append(s[0])
        i = 1
    run_sign = ""
    prev_sep = ""
    for j in range(i, len(s)):
        ch = s[j]
        if ch in block:
            if not run_sign:
                run_sign = ch
            elif ch != run_sign:
                out.append(run_sign)
                out.append(prev_sep)
                run_sign = ch
        else:
            prev_sep = ch
    if run_sign:
        out.append(run_sign)
        if s[-1] in seps:
            out.append(s[-1])
    return "".join(out)


def alpha_word(s: str) -> str:
    """Collapse each maximal single-sign a-block of an alternating word."""
    return _collapse(s, "aA", "bB")


def beta_word(s: str) -> str:
    """Collapse each maximal single-sign b-block of an alternating word."""
    return _collapse(s, "bB", "aA")


def _enumerate_reduced(maxlen: int) -> list[str]:
    words = [""]
    frontier = [""]
    for _ in range(maxlen):
        nxt = []
        for w in frontier:
            last = w[-1] if w else ""
            for ch in "aAbB":
                if last and ch == _INV[last]:
                    continue
                nxt.append(w + ch)
        words.extend(nxt)
        frontier = nxt
    return words


def eta0_exhaustive_defect(maxlen: int) -> int:
    """Max of |eta0(g) + eta0(h) - eta0(gh)| over all reduced words of
    length at most maxlen.  Quadratic in the number of words; the
    compiled twin is the one meant for maxlen 8."""
    words = _enumerate_reduced(maxlen)
    # Per-word pair scores, prefix sums of eta0 over prefixes/suffixes.
    pres = []
    sufs = []
    totals = []
    for w in words:
        n = len(w)
        sc = [_PAIR_SCORE.get(w[i : i + 2], 0) for i in range(n - 1)]
        pre = [0] * (n + 1)
        for i in range(1, n + 1):
            pre[i] = pre[i - 1] + (sc[i - 2] if i >= 2 else 0)
        suf = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            suf[i] = suf[i + 1] + (sc[i] if i <= n - 2 else 0)
        pres.append(pre)
        sufs.append(suf)
        totals.append(pre[n])
    best = 0
    inv = _INV
    for gi, g in enumerate(words):
        lg = len(g)
        eg = totals[gi]
        pre_g = pres[gi]
        for hi, h in enumerate(words):
            lh = len(h)
            k = 0
            m = lg if lg < lh else lh
            while k < m and g[lg - 1 - k] == inv[h[k]]:
                k += 1
            left = lg - k
            if left and lh - k:
                val = pre_g[left] + _PAIR_SCORE.get(g[left - 1] + h[k], 0) + sufs[hi][k]
            elif left:
                val = pre_g[left]
            else:
                val = sufs[hi][k]
            d = eg + totals[hi] - val
            if d < 0:
                d = -d
            if d > best:
                best = d
    return best
