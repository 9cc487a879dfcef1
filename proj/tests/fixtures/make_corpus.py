#!/usr/bin/env python3
"""Regenerates tests/fixtures/corpus and tests/fixtures/underresolved.

Every point is checked for exact feasibility with fractions.  Expected answers
come from the known component structure of each set, not from the grid oracle:

  ball, shell, circle, cap  connected (balls, spherical shells, a circle, a
                            ball cut by a half-space)
  split                     two convex pieces, told apart by the sign of p1
  arcs2                     circle minus two arcs; pieces told apart by the
                            sign of x2 - x1
  arcs3                     three caps of the unit sphere around e1, e2, e3;
                            the piece is the index of the largest coordinate.
                            Checked here by sampling the sphere.
  empty                     no points

Run from the repository root: python3 tests/fixtures/make_corpus.py
"""
import itertools
import json
import math
import random
from fractions import Fraction as F
from pathlib import Path

ROOT = Path(__file__).resolve().parent
rng = random.Random(20261017)


def p(x, k):
    return sum(v**k for v in x)


def term(exps, q):
    q = F(q)
    return list(exps) + [q.numerator, q.denominator]


def rat(q):
    q = F(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def feasible(x, checks):
    return all(c(x) for c in checks)


def random_point(n, lo, hi, den, checks, tries=100000):
    for _ in range(tries):
        x = [F(rng.randint(lo * den, hi * den), den) for _ in range(n)]
        if feasible(x, checks):
            return x
    raise RuntimeError("no feasible point found")


def make_pairs(points, label, count, checks):
    """Half the pairs are random, a quarter compare x with a permutation of x."""
    pairs = []
    for x in points:
        assert feasible(x, checks), x
    while len(pairs) < count:
        x = rng.choice(points)
        if len(pairs) % 4 == 3:
            y = list(x)
            rng.shuffle(y)
        else:
            y = rng.choice(points)
        if x == y:
            continue
        pairs.append({"x": [rat(v) for v in x], "y": [rat(v) for v in y],
                      "expected": label(x) == label(y)})
    return pairs


def fixture(name, n, d, constraints, box, pairs, oracle=None):
    fx = {"name": name, "n": n, "d": d, "constraints": constraints,
          "box": [[box[0]] * n, [box[1]] * n], "pairs": pairs}
    if oracle:
        fx["oracle"] = oracle
    return fx


def signed_perms(base):
    out = set()
    for perm in itertools.permutations(base):
        for signs in itertools.product([1, -1], repeat=len(base)):
            out.add(tuple(s * v for s, v in zip(signs, perm)))
    return [list(v) for v in sorted(out)]


def ball(n):
    checks = [lambda x: p(x, 2) <= 1]
    pts = [random_point(n, -1, 1, 4, checks) for _ in range(12)]
    return fixture(f"ball{n}", n, 2, [{"coeffs": [term([0, 0], 1), term([0, 1], -1)], "rel": "ge"}],
                   [-2, 2], make_pairs(pts, lambda x: 0, 10, checks))


def shell(n):
    checks = [lambda x: p(x, 2) >= 1, lambda x: p(x, 2) <= 4]
    pts = [random_point(n, -2, 2, 4, checks) for _ in range(12)]
    return fixture(f"shell{n}", n, 2,
                   [{"coeffs": [term([0, 1], 1), term([0, 0], -1)], "rel": "ge"},
                    {"coeffs": [term([0, 0], 4), term([0, 1], -1)], "rel": "ge"}],
                   [-2, 2], make_pairs(pts, lambda x: 0, 10, checks))


def split(n):
    # keep |x| <= 2 so every point of the fiber through x stays in the box
    checks = [lambda x: p(x, 1) ** 2 >= 1, lambda x: p(x, 2) <= 4]
    pos = [random_point(n, -1, 2, 4, checks + [lambda x: p(x, 1) > 0]) for _ in range(6)]
    neg = [[-v for v in x] for x in pos]
    pts = pos + neg
    if n == 3:
        pts += [[F(1)] * 3, [F(-1)] * 3]
    constraints = [{"coeffs": [term([2, 0], 1), term([0, 0], -1)], "rel": "ge"}]
    if n == 4:
        constraints.append({"coeffs": [term([0, 0], 3), term([0, 1], -1)], "rel": "ge"})
        checks.append(lambda x: p(x, 2) <= 3)
        pts = [x for x in pts if p(x, 2) <= 3]
    pairs = make_pairs(pts, lambda x: p(x, 1) > 0, 10, [checks[0]])
    if n == 3:
        pairs[0] = {"x": [1, 1, 1], "y": [-1, -1, -1], "expected": False}
    return fixture(f"split{n}", n, 2, constraints, [-2, 2], pairs)


def circle_points():
    triples = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29)]
    out = set()
    for a, b, c in triples:
        out.update(tuple(v) for v in signed_perms([F(a, c), F(b, c)]))
    out.update([(F(1), F(0)), (F(0), F(1)), (F(-1), F(0)), (F(0), F(-1))])
    return [list(v) for v in sorted(out)]


def arcs2():
    checks = [lambda x: p(x, 2) == 1, lambda x: p(x, 1) ** 2 <= F(1, 2)]
    pts = [x for x in circle_points() if feasible(x, checks)]
    return fixture("arcs2", 2, 2,
                   [{"coeffs": [term([0, 1], 1), term([0, 0], -1)], "rel": "eq"},
                    {"coeffs": [term([0, 0], F(1, 2)), term([2, 0], -1)], "rel": "ge"}],
                   [-2, 2], make_pairs(pts, lambda x: x[1] > x[0], 10, checks))


def circle2():
    checks = [lambda x: p(x, 2) == 1]
    pts = circle_points()
    return fixture("circle2", 2, 2,
                   [{"coeffs": [term([0, 1], 1), term([0, 0], -1)], "rel": "eq"},
                    {"coeffs": [term([0, 0], 3), term([2, 0], -1)], "rel": "ge"}],
                   [-2, 2], make_pairs(pts, lambda x: 0, 10, checks))


def sphere_components(threshold, samples=200000, step=0.05):
    """Components of {|x| = 1, p3 >= threshold} from a Fibonacci sampling of the sphere."""
    pts = []
    golden = math.pi * (3 - math.sqrt(5))
    for i in range(samples):
        z = 1 - 2 * (i + 0.5) / samples
        r = math.sqrt(1 - z * z)
        x, y = r * math.cos(golden * i), r * math.sin(golden * i)
        if x**3 + y**3 + z**3 >= threshold:
            pts.append((x, y, z))
    cells = {}
    for idx, q in enumerate(pts):
        cells.setdefault(tuple(int(math.floor(c / step)) for c in q), []).append(idx)
    parent = list(range(len(pts)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for key, members in cells.items():
        for off in itertools.product([-1, 0, 1], repeat=3):
            other = cells.get(tuple(k + o for k, o in zip(key, off)), [])
            for a in members:
                for b in other:
                    if math.dist(pts[a], pts[b]) < step:
                        parent[find(a)] = find(b)
    comps = {}
    for i, q in enumerate(pts):
        comps.setdefault(find(i), []).append(q)
    return list(comps.values())


def arcs3():
    threshold = F(9, 10)
    comps = sphere_components(float(threshold))
    assert len(comps) == 3, len(comps)
    for c in comps:  # each cap keeps one axis as its largest coordinate
        assert len({max(range(3), key=lambda i: q[i]) for q in c}) == 1
    checks = [lambda x: p(x, 2) == 1, lambda x: p(x, 3) >= threshold]
    cand = set()
    for base in ([F(1), F(0), F(0)], [F(24, 25), F(7, 25), F(0)], [F(40, 41), F(9, 41), F(0)],
                 [F(60, 61), F(11, 61), F(0)]):
        cand.update(tuple(v) for v in signed_perms(base))
    pts = [list(v) for v in sorted(cand) if feasible(list(v), checks)]
    return fixture("arcs3", 3, 3,
                   [{"coeffs": [term([0, 1, 0], 1), term([0, 0, 0], -1)], "rel": "eq"},
                    {"coeffs": [term([0, 0, 1], 1), term([0, 0, 0], -threshold)], "rel": "ge"}],
                   [-2, 2], make_pairs(pts, lambda x: x.index(max(x)), 10, checks),
                   # at pitch 1/8 the slab around the sphere reaches radius 1.06, where the caps touch
                   oracle={"h": "1/16"})


def cap4():
    checks = [lambda x: p(x, 2) <= 1, lambda x: p(x, 1) >= 1]
    pts = [random_point(4, -1, 1, 4, checks) for _ in range(12)]
    return fixture("cap4", 4, 3,
                   [{"coeffs": [term([0, 0, 0], 1), term([0, 1, 0], -1)], "rel": "ge"},
                    {"coeffs": [term([1, 0, 0], 1), term([0, 0, 0], -1)], "rel": "ge"}],
                   [-2, 2], make_pairs(pts, lambda x: 0, 10, checks))


def empty3():
    return fixture("empty3", 3, 2,
                   [{"coeffs": [term([0, 1], -1), term([0, 0], -1)], "rel": "ge"}], [-2, 2], [])


def gap4():
    # p1 in (-1/10, 1/10) is excluded: thinner than any cell the oracle can afford at n = 4
    checks = [lambda x: p(x, 1) ** 2 >= F(1, 100), lambda x: p(x, 2) <= 3]
    pos = [random_point(4, -1, 1, 4, checks + [lambda x: p(x, 1) > 0]) for _ in range(5)]
    pts = pos + [[-v for v in x] for x in pos]
    return fixture("gap4", 4, 2,
                   [{"coeffs": [term([2, 0], 1), term([0, 0], F(-1, 100))], "rel": "ge"},
                    {"coeffs": [term([0, 0], 3), term([0, 1], -1)], "rel": "ge"}],
                   [-2, 2], make_pairs(pts, lambda x: p(x, 1) > 0, 6, [checks[0]]))


def write(dirname, fx):
    out = ROOT / dirname
    out.mkdir(exist_ok=True)
    (out / f"{fx['name']}.json").write_text(json.dumps(fx, indent=1) + "\n")
    return len(fx["pairs"])


if __name__ == "__main__":
    total = 0
    for fx in [ball(2), ball(3), ball(4), shell(2), shell(3), split(3), split(4),
               arcs2(), circle2(), arcs3(), cap4(), empty3()]:
        total += write("corpus", fx)
    write("underresolved", gap4())
    print(f"{total} pairs")
