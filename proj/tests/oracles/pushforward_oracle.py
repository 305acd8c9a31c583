# Independent sympy oracle: builds the induced matrix straight from
# chi(F A) ch(B) + chi(F C) ch(D) - ch(F C D) with symbolic inputs.
# The matrices below are the values frozen into the C++ unit tests; running
# this script re-derives them and fails loudly on any drift.
import sys

import sympy as sp


def matrix(G, A, B, C, D):
    G = sp.Matrix(G); n = G.shape[0]
    r, t = sp.symbols('r t'); f = sp.Matrix(sp.symbols('f0:%d' % n))
    dot = lambda x, y: (sp.Matrix(x).T * G * sp.Matrix(y))[0]
    A, B, C, D = [sp.Matrix(v) for v in (A, B, C, D)]
    def twist(ch, l):
        r_, f_, t_ = ch
        return (r_, f_ + r_ * l, t_ + dot(f_, l) + r_ * dot(l, l) / 2)
    chi = lambda ch: ch[2] + 2 * ch[0]
    line = lambda l: (1, l, dot(l, l) / 2)
    F = (r, f, t)
    a, b = chi(twist(F, A)), chi(twist(F, C))
    lb, ld = line(B), line(D)
    fcd = twist(twist(F, C), D)
    out0 = a * lb[0] + b * ld[0] - fcd[0]
    out1 = a * lb[1] + b * ld[1] - fcd[1]
    out2 = a * lb[2] + b * ld[2] - fcd[2]
    outs = [sp.expand(out0)] + [sp.expand(x) for x in out1] + [sp.expand(out2)]
    ins = [r] + list(f) + [t]
    return sp.Matrix([[sp.diff(o, v) for v in ins] for o in outs])


FROZEN = [
    ("no-cohomology on [[-4]]",
     ([[-4]], [0], [0], [1], [-1]),
     [[1, -4, 2], [0, 3, -1], [0, 8, -3]], -1),
    ("nondegenerate reflexive",
     ([[2, 0], [0, -12]], [-1, 0], [7, 3], [1, 1], [5, 2]),
     [[-1, 0, -12, 2], [0, -5, -60, 12], [0, -2, -25, 5], [0, 0, 24, -5]], 1),
    ("type I",
     ([[2, 2, 2], [2, -2, 0], [2, 0, -2]], [-1, 1, 0], [1, -1, 0], [-1, 0, 1], [1, 0, -1]),
     [[-1, 0, -6, -6, 2], [0, -1, -6, -6, 2], [0, 0, 3, 2, -1], [0, 0, 2, 3, -1], [0, 0, 12, 12, -5]], -1),
    ("type II",
     ([[2, 1, 3], [1, -2, 0], [3, 0, -2]], [-1, 1, 0], [1, -2, 1], [-1, 0, 1], [1, -1, 0]),
     [[-1, 0, -4, -8, 2], [0, -1, -4, -8, 2], [0, 1, 6, 11, -3], [0, -1, -3, -4, 1], [0, 0, 8, 16, -5]], -1),
]

failed = False
for name, args, expected, det in FROZEN:
    M = matrix(*args)
    ok = M.tolist() == expected and M.det() == det
    failed |= not ok
    print(("ok   " if ok else "FAIL ") + name, M.tolist(), "det", M.det())
sys.exit(1 if failed else 0)
