"""Independent type-sequence computation for rings generated over Q(i).

Works over Q with the real basis {1, i} and plain sympy linear algebra, then
compares with the report produced by the typeseq CLI:

    qi_type_sequence.py <document.json> <report.json>

Only documents of the form {"base": "Q", "tower": [i: i^2 + 1], "ring": {"generators": [...]}}
are supported. Exit status 0 when n-list, type sequence and associated-GSR
type sequence all agree.
"""

import itertools
import json
import sys

import sympy as sp

I = sp.I
X = sp.Symbol("X")


def coeffs(p, N):
    p = sp.expand(p)
    out = []
    for d in range(N):
        c = p.coeff(X, d)
        out += [sp.re(c), sp.im(c)]
    return out


def to_poly(row, N):
    return sum((row[2 * d] + I * row[2 * d + 1]) * X**d for d in range(N))


def rank(rows):
    return sp.Matrix(rows).rank() if rows else 0


def row_basis(rows):
    if not rows:
        return []
    M = sp.Matrix(rows).rref()[0]
    return [list(M.row(r)) for r in range(M.rows) if any(M.row(r))]


def ring_rows(gens, N):
    """Rows spanning R / X^N K[[X]] for R = Q-algebra generated by gens."""
    vals = [min(d for d in range(200) if sp.expand(g).coeff(X, d) != 0) for g in gens]
    useful = [(g, v) for g, v in zip(gens, vals) if v < N]
    rows = [coeffs(sp.Integer(1), N)]
    ranges = [range(N // v + 1) for _, v in useful]
    for exps in itertools.product(*ranges):
        if sum(exps) == 0 or sum(e * v for e, (_, v) in zip(exps, useful)) >= N:
            continue
        p = sp.Integer(1)
        for e, (g, _) in zip(exps, useful):
            p *= g**e
        rows.append(coeffs(p, N))
    return row_basis(rows)


def conductor(gens, M=30):
    """Smallest c with X^d, i*X^d in R modulo X^M for every c <= d < M."""
    rows = ring_rows(gens, M)
    r = rank(rows)
    c = M
    while c > 0 and all(rank(rows + [coeffs(u * X**(c - 1), M)]) == r for u in (1, I)):
        c -= 1
    return c


def tail(rows, s, N):
    """R ∩ X^s K[[X]] modulo X^N."""
    if s == 0:
        return rows
    A = sp.Matrix(rows)[:, : 2 * s]
    out = [list(sp.Matrix(v).T * sp.Matrix(rows)) for v in A.T.nullspace()]
    return row_basis(out)


def colon_rank(W, ideal, N):
    """dim_Q (R : I) modulo X^N."""
    phis = sp.Matrix.hstack(*sp.Matrix(W).nullspace())
    basis = [c * X**d for d in range(N) for c in (1, I)]
    blocks = []
    for r in ideal:
        u = to_poly(r, N)
        blocks.append(sp.Matrix([coeffs(sp.expand(b * u), N) for b in basis]) * phis)
    return 2 * N - sp.Matrix.hstack(*blocks).rank()


def leading_rows(W, N):
    """Rows of the associated graded ring: leading coefficient spaces times X^d."""
    out = []
    for d in range(N):
        T = tail(W, d, N)
        lead = [[r[2 * d], r[2 * d + 1]] for r in T if r[2 * d] != 0 or r[2 * d + 1] != 0]
        for v in row_basis(lead):
            row = [0] * (2 * N)
            row[2 * d], row[2 * d + 1] = v
            out.append(row)
    return out


def analyse(W, N):
    s = [d for d in range(N) if any(r[2 * d] != 0 or r[2 * d + 1] != 0 for r in tail(W, d, N))] + [N]
    n_list = []
    for d in s[:-1]:
        T = tail(W, d, N)
        n_list.append(rank([[r[2 * d], r[2 * d + 1]] for r in T]))
    prev = rank(W)
    ts = []
    for si in s[1:]:
        cur = colon_rank(W, tail(W, si, N), N)
        ts.append(cur - prev)
        prev = cur
    return n_list, ts


def main():
    doc = json.load(open(sys.argv[1]))
    report = json.load(open(sys.argv[2]))
    assert doc.get("base", "Q") == "Q" and [t["poly"] for t in doc["tower"]] == ["i^2 + 1"]
    gens = [sp.sympify(g.replace("^", "**"), locals={"i": I, "X": X}) for g in doc["ring"]["generators"]]
    N = conductor(gens)
    W = ring_rows(gens, N)
    n_list, ts = analyse(W, N)
    _, gsr_ts = analyse(leading_rows(W, N), N)
    got = {"conductor": report["conductor"], "n": report["n"], "type_sequence": report["type_sequence"],
           "gsr": report["associated_gsr"]["type_sequence"]}
    want = {"conductor": N, "n": n_list, "type_sequence": ts, "gsr": gsr_ts}
    print("oracle:", want)
    print("report:", got)
    sys.exit(0 if got == want else 1)


if __name__ == "__main__":
    main()
