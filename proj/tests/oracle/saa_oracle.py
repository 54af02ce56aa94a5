#!/usr/bin/env python3
"""Independent reference for the C++ library, written from the definitions.

Dense lists, no shared code with src/. Used to derive the values frozen in
the unit tests and, under ctest, to cross-check `saa verify` on the catalog.

  saa_oracle.py series FILE          lower/upper dims, class, rank
  saa_oracle.py fingerprint FILE     series dims, dim L^2L^2, isotropy flags
  saa_oracle.py scaling P SRC DST    first diagonal scaling SRC -> DST, or none
  saa_oracle.py crosscheck SAA FILE...
"""
import itertools
import subprocess
import sys


def read(path):
    n = p = None
    triples = []
    for raw in open(path):
        w = raw.split()
        if not w or w[0].startswith("#"):
            continue
        if w[0] == "n":
            n = int(w[1])
        elif w[0] == "p":
            p = int(w[1])
        elif w[0] == "triple":
            triples.append((w[1], w[2], w[3], int(w[4])))
    return n, p, triples


def coord(tok):
    i = int(tok[1:])
    return 2 * (i - 1) + (0 if tok[0] == "x" else 1)


def gamma(n, p, triples):
    g = {}
    for a, b, c, v in triples:
        a, b, c = coord(a), coord(b), coord(c)
        for (u, w, z), s in (((a, b, c), 1), ((b, c, a), 1), ((c, a, b), 1),
                             ((b, a, c), -1), ((a, c, b), -1), ((c, b, a), -1)):
            g[(u, w, z)] = (s * v) % p
    return g


def table(n, p, g):
    # u.v = sum_k g(u,v,y_k) x_k - sum_k g(u,v,x_k) y_k
    d = 2 * n
    t = {}
    for i in range(d):
        for j in range(d):
            vec = [0] * d
            for k in range(n):
                vec[2 * k] = g.get((i, j, 2 * k + 1), 0)
                vec[2 * k + 1] = (-g.get((i, j, 2 * k), 0)) % p
            t[(i, j)] = vec
    return t


def rref(rows, p, d):
    m = [list(r) for r in rows]
    r = 0
    for c in range(d):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return m[:r]


def kernel(rows, p, d):
    """Vectors v with row . v = 0 for every row."""
    red = rref(rows, p, d)
    pivots = []
    for row in red:
        pivots.append(next(c for c in range(d) if row[c]))
    basis = []
    for free in (c for c in range(d) if c not in pivots):
        v = [0] * d
        v[free] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[free]) % p
        basis.append(v)
    return basis


def mul(t, a, b, p, d):
    out = [0] * d
    for i in range(d):
        if a[i]:
            for j in range(d):
                if b[j]:
                    f = a[i] * b[j]
                    for k, tv in enumerate(t[(i, j)]):
                        if tv:
                            out[k] = (out[k] + f * tv) % p
    return out


def unit(d, i):
    v = [0] * d
    v[i] = 1
    return v


def lower(t, p, d):
    whole = [unit(d, i) for i in range(d)]
    terms = [whole]
    while terms[-1]:
        nxt = rref([mul(t, a, b, p, d) for a in terms[-1] for b in whole], p, d)
        if len(nxt) == len(terms[-1]):
            break
        terms.append(nxt)
    return terms


def upper(t, p, d):
    """Z_{i+1}: solve v.u_k in Z_i for all k, with Z_i given by its
    annihilator (equations), so no quotient coordinates are needed."""
    terms = [[]]
    while len(terms[-1]) < d:
        z = terms[-1]
        eqs = kernel(z, p, d) if z else [unit(d, i) for i in range(d)]
        # condition: for each k and each annihilator e: e . (v . u_k) = 0, linear in v
        rows = []
        for k in range(d):
            for e in eqs:
                rows.append([sum(e[c] * t[(i, k)][c] for c in range(d)) % p for i in range(d)])
        nxt = rref(kernel(rows, p, d), p, d)
        if len(nxt) == len(z):
            break
        terms.append(nxt)
    return terms


def form(u, v, n, p):
    return sum(u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i] for i in range(n)) % p


def series(path):
    n, p, triples = read(path)
    d = 2 * n
    t = table(n, p, gamma(n, p, triples))
    lo, up = lower(t, p, d), upper(t, p, d)
    nil = not lo[-1]
    return n, p, t, lo, up, nil


def cmd_series(path):
    n, p, t, lo, up, nil = series(path)
    print("lower_dims:", " ".join(str(len(s)) for s in lo))
    print("upper_dims:", " ".join(str(len(s)) for s in up))
    print("class:", len(lo) - 1 if nil else "none")
    print("rank:", 2 * n - len(lo[1]) if nil else "none")


def cmd_fingerprint(path):
    n, p, t, lo, up, nil = series(path)
    d = 2 * n
    sq = lo[1] if len(lo) > 1 else lo[0]
    sqsq = rref([mul(t, a, b, p, d) for a in sq for b in sq], p, d)
    iso = "".join("1" if all(form(a, b, n, p) == 0 for a in s for b in s) else "0" for s in lo)
    cmd_series(path)
    print("square2:", len(sqsq))
    print("isotropic:", iso)


def cmd_scaling(p, src, dst):
    _, _, ta = read(src)
    n, _, tb = read(dst)
    ga, gb = gamma(n, p, ta), gamma(n, p, tb)
    ga = {k: v for k, v in ga.items() if v}
    gb = {k: v for k, v in gb.items() if v}
    for digits in itertools.product(range(1, p), repeat=n):
        s = []
        for a in digits:
            s += [a, pow(a, p - 2, p)]
        pushed = {}
        for (i, j, k), v in ga.items():
            pushed[(i, j, k)] = v * pow(s[i] * s[j] * s[k], p - 2, p) % p
        if pushed == gb:
            print("witness:", " ".join(map(str, digits)))
            return
    print("witness: none")


def cmd_crosscheck(exe, paths):
    bad = 0
    for path in paths:
        n, p, t, lo, up, nil = series(path)
        want = {
            "lower_dims": " ".join(str(len(s)) for s in lo),
            "upper_dims": " ".join(str(len(s)) for s in up),
            "class": str(len(lo) - 1) if nil else "none",
            "rank": str(2 * n - len(lo[1])) if nil else "none",
        }
        out = subprocess.run([exe, "verify", path], capture_output=True, text=True).stdout
        got = dict(line.split(": ", 1) for line in out.splitlines() if ": " in line)
        for key, value in want.items():
            if got.get(key) != value:
                print(f"MISMATCH {path} {key}: oracle {value!r} vs saa {got.get(key)!r}")
                bad += 1
        print(f"checked {path}: {want['lower_dims']} / {want['upper_dims']}")
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    cmd = sys.argv[1]
    if cmd == "series":
        cmd_series(sys.argv[2])
    elif cmd == "fingerprint":
        cmd_fingerprint(sys.argv[2])
    elif cmd == "scaling":
        cmd_scaling(int(sys.argv[2]), sys.argv[3], sys.argv[4])
    elif cmd == "crosscheck":
        cmd_crosscheck(sys.argv[2], sys.argv[3:])
    else:
        sys.exit("unknown command " + cmd)
