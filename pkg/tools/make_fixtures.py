"""Regenerate the group-spec corpus in src/realforms/fixtures/.

Each file is one (B, theta, normal A) configuration in the group-spec JSON
format.  Groups are built from permutation generators; actions are
conjugation by a normalising involution of the ambient symmetric group,
inversion (abelian groups only), or multiplication maps on cyclic groups.

    python tools/make_fixtures.py
"""
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "realforms" / "fixtures"


def compose(p, q):
    # apply p then q
    return tuple(q[i] for i in p)


def closure(gens, deg):
    e = tuple(range(deg))
    elems = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return [e] + sorted(elems - {e})


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def table(elems):
    idx = {p: i for i, p in enumerate(elems)}
    return [[idx[compose(x, y)] for y in elems] for x in elems], idx


def cyc(deg, *cycles):
    p = list(range(deg))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            p[a] = b
    return tuple(p)


def conj_action(elems, idx, g):
    gi = inverse(g)
    return [idx[compose(compose(gi, x), g)] for x in elems]


def normal_stable_subgroups(elems, mul, action):
    n = len(elems)
    inv = [row.index(0) for row in mul]
    found = set()
    for a in range(n):
        for b in range(a, n):
            H = {0}
            frontier = [0]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in (a, b):
                        y = mul[x][g]
                        if y not in H:
                            H.add(y)
                            nxt.append(y)
                frontier = nxt
            if all(mul[mul[g][h]][inv[g]] in H for g in range(n) for h in H) \
                    and all(action[h] in H for h in H):
                found.add(tuple(sorted(H)))
    return sorted(found, key=lambda s: (len(s), s))


def write(name, mul, action, normal):
    rec = {"n": len(mul), "identity": 0, "mul": mul, "action": action, "normal": list(normal)}
    (OUT / f"{name}.json").write_text(json.dumps(rec, separators=(",", ":")) + "\n")


def emit(name, elems, action_list, max_normals=None):
    mul, idx = table(elems)
    count = 0
    for tag, action in action_list:
        normals = normal_stable_subgroups(elems, mul, action)
        if max_normals is not None:
            normals = normals[:max_normals]
        for k, N in enumerate(normals):
            write(f"{name}_{tag}_n{len(N)}_{k}", mul, action, N)
            count += 1
    return count


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for f in OUT.glob("*.json"):
        f.unlink()
    total = 0

    # cyclic groups with multiplication-by-u actions, u^2 = 1 mod n
    for n in (2, 3, 4, 5, 6, 8, 9, 12):
        elems = closure([cyc(n, list(range(n)))], n)
        mul, idx = table(elems)
        gen = idx[cyc(n, list(range(n)))]
        power = {0: 0}
        x = 0
        for k in range(1, n):
            x = mul[x][gen]
            power[k] = x
        log = {v: k for k, v in power.items()}
        acts = []
        for u in range(1, n):
            if (u * u) % n == 1:
                acts.append((f"u{u}", [power[(u * log[e]) % n] for e in range(n)]))
        total += emit(f"z{n}", elems, acts)

    # Klein four and (Z/2)^3 with coordinate permutations
    v4 = closure([cyc(4, [0, 1], [2, 3]), cyc(4, [0, 2], [1, 3])], 4)
    mul, idx = table(v4)
    total += emit("klein", v4, [("triv", list(range(4))),
                                ("swap", conj_action(v4, idx, cyc(4, [1, 2])))])
    z2cube = closure([cyc(6, [0, 1]), cyc(6, [2, 3]), cyc(6, [4, 5])], 6)
    mul, idx = table(z2cube)
    total += emit("z2cube", z2cube, [("swap", conj_action(z2cube, idx, cyc(6, [0, 2], [1, 3])))],
                  max_normals=6)

    # symmetric, alternating and dihedral groups, conjugation actions
    s3 = closure([cyc(3, [0, 1]), cyc(3, [0, 1, 2])], 3)
    mul, idx = table(s3)
    total += emit("s3", s3, [("triv", list(range(6))),
                             ("conj", conj_action(s3, idx, cyc(3, [0, 1])))])
    for m in (4, 5, 6):
        dm = closure([cyc(m, list(range(m))), tuple((-i) % m for i in range(m))], m)
        mul, idx = table(dm)
        refl = tuple((-i) % m for i in range(m))
        total += emit(f"d{m}", dm, [("triv", list(range(len(dm)))),
                                    ("conj", conj_action(dm, idx, refl))], max_normals=4)
    q8 = closure([cyc(8, [0, 1, 2, 3], [4, 5, 6, 7]), cyc(8, [0, 4, 2, 6], [1, 7, 3, 5])], 8)
    mul, idx = table(q8)
    total += emit("q8", q8, [("triv", list(range(8)))])
    a4 = [p for p in closure([cyc(4, [0, 1, 2]), cyc(4, [1, 2, 3])], 4)]
    mul, idx = table(a4)
    total += emit("a4", a4, [("conj", conj_action(a4, idx, cyc(4, [0, 1])))])
    s4 = closure([cyc(4, [0, 1]), cyc(4, [0, 1, 2, 3])], 4)
    mul, idx = table(s4)
    total += emit("s4", s4, [("triv", list(range(24))),
                             ("conj", conj_action(s4, idx, cyc(4, [0, 1])))])
    # S4 x Z/2, order 48
    s4z2 = closure([cyc(6, [0, 1]), cyc(6, [0, 1, 2, 3]), cyc(6, [4, 5])], 6)
    mul, idx = table(s4z2)
    total += emit("s4xz2", s4z2, [("conj", conj_action(s4z2, idx, cyc(6, [0, 1])))], max_normals=3)
    print(f"wrote {total} fixtures to {OUT}")


if __name__ == "__main__":
    main()
