"""Independent high-precision oracle for the two-child decomposition.

Computes child masses from the angle picks by intersecting rays (line
through origin at inner angle, line through parent endpoint at outer
angle) using mpmath, then prints the frozen values used by the C++ tests.
"""
from mpmath import mp, mpf, atan, tan, pi

mp.dps = 50


def split(a, b, c, d):
    th0, et0 = atan(a / b), atan(c / d)
    if a / (a + b) > c / (c + d):
        t1, e1, t2, e2 = et0 / 4, et0 / 2, pi / 4 + th0 / 2, 3 * pi / 8 + th0 / 4
    else:
        t1, e1, t2, e2 = th0 / 2, th0 / 4, 3 * pi / 8 + et0 / 4, pi / 4 + et0 / 2

    def inter(y0, x0, inner, outer):
        # y = m1 x ; y - y0 = m2 (x - x0)
        m1, m2 = tan(inner), tan(outer)
        x = (y0 - m2 * x0) / (m1 - m2)
        return m1 * x, x

    a1, b1 = inter(a, b, t1, t2)
    c1, d1 = inter(c, d, e1, e2)
    return (a1, b1, c1, d1), (a - a1, b - b1, c - c1, d - d1), (tan(t1), tan(t2), tan(e1), tan(e2))


def build(q, n, prefix=""):
    out = {prefix: q}
    if n == 0:
        return out
    c1, c2, _ = split(*q)
    out.update(build(c1, n - 1, prefix + "1"))
    out.update(build(c2, n - 1, prefix + "0"))
    return out


if __name__ == "__main__":
    seed = tuple(mpf(x) for x in ("0.8", "0.2", "0.6", "0.4"))
    c1, c2, slopes = split(*seed)
    print("slopes", [mp.nstr(s, 17) for s in slopes])
    print("child1", [mp.nstr(v, 17) for v in c1])
    print("child2", [mp.nstr(v, 17) for v in c2])
    print("angles", mp.nstr(atan(seed[2] / seed[3]) / 4, 17), mp.nstr(atan(seed[2] / seed[3]) / 2, 17),
          mp.nstr(pi / 4 + atan(4) / 2, 17), mp.nstr(3 * pi / 8 + atan(4) / 4, 17))
    tree = build(seed, 3)
    for k in sorted(tree, key=lambda s: (len(s), [-int(ch) for ch in s])):
        a, b, c, d = tree[k]
        print(f"{k or '()':4s} a={mp.nstr(a,17)} b={mp.nstr(b,17)} c={mp.nstr(c,17)} d={mp.nstr(d,17)} "
              f"p1={mp.nstr(a/(a+b),17)} p0={mp.nstr(c/(c+d),17)}")
    s2 = tuple(mpf(x) for x in ("0.6", "0.4", "0.8", "0.2"))
    t2 = build(s2, 2)
    for k in sorted(t2, key=len):
        a, b, c, d = t2[k]
        print("rev", k or "()", ">" if a/(a+b) > c/(c+d) else "<", mp.nstr(a/(a+b)-c/(c+d), 10))
