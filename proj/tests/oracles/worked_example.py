"""Independent oracle for the frozen values in the C++ tests.

Shares no code with the library: the parse is a plain predict/attach stack
machine, rectangles are the inf/sup of the Goedel series over all
continuations, and fixed points come from mpmath root finding.

    python3 tests/oracles/worked_example.py
"""
from fractions import Fraction as F

import mpmath

GRAMMAR = {"S": ["NP", "VP"], "VP": ["V", "NP"]}
TERMINALS = {"NP", "V"}
STACK_CODE = {"NP": 0, "V": 1, "VP": 2, "S": 3}
INPUT_CODE = {"NP": 0, "V": 1}
BL, BR = 4, 2


def parse(stack, word):
    """stack is top-first; yields (stack, input, op) rows."""
    rows = []
    stack, word = list(stack), list(word)
    while True:
        if not stack and not word:
            rows.append((stack, word, "accept"))
            return rows
        if stack and stack[0] in GRAMMAR:
            lhs = stack[0]
            rows.append((stack, word, f"predict ({lhs} -> {' '.join(GRAMMAR[lhs])})"))
            stack = GRAMMAR[lhs] + stack[1:]
        elif stack and word and stack[0] in TERMINALS and stack[0] == word[0]:
            rows.append((stack, word, "attach"))
            stack, word = stack[1:], word[1:]
        else:
            rows.append((stack, word, "reject"))
            return rows


def interval(prefix, code, base, offset):
    """[inf, sup) of sum code(w_k) base^-(k+offset) over all continuations."""
    lo = sum(F(code[s], base ** (k + offset)) for k, s in enumerate(prefix))
    return lo, lo + F(1, base ** (len(prefix) + offset - 1))


def rect(stack, word):
    return interval(stack, STACK_CODE, BL, 1), interval(word, INPUT_CODE, BR, 1)


def fmt(r):
    (a, b), (c, d) = r
    return f"[{a}, {b}) x [{c}, {d})"


if __name__ == "__main__":
    rows = parse(["S"], ["NP", "V", "NP"])
    for t, (s, w, op) in enumerate(rows):
        print(t, " ".join(reversed(s)) or "ε", ".", " ".join(w) or "ε", op)
    print("reject case:", [r[2] for r in parse(["S"], ["V", "NP"])])
    for t, (s, w, _) in enumerate(rows):
        r = rect(s, w)
        area = (r[0][1] - r[0][0]) * (r[1][1] - r[1][0])
        print("orbit", t, fmt(r), "weight", 1 / area)
    x = sum(F(STACK_CODE[s], BL ** (k + 1)) for k, s in enumerate(["S"]))
    y = sum(F(INPUT_CODE[s], BR ** (k + 1)) for k, s in enumerate(["NP", "V", "NP"]))
    print("encode(S . NP V NP) =", x, y)

    mpmath.mp.dps = 30
    beta, theta = 10, mpmath.mpf("0.5")
    f = lambda u: 1 / (1 + mpmath.exp(-beta * (u - theta)))
    df = lambda u: beta * f(u) * (1 - f(u))
    for guess in (0.0, 0.5, 1.0):
        u0 = mpmath.findroot(lambda u: f(u) - u, guess)
        print("fixed point", mpmath.nstr(u0, 17), "criterion", mpmath.nstr(df(u0), 17))
    print("f(0) =", mpmath.nstr(f(0), 17))
