"""Independent brute-force oracles used to freeze expected values.

These deliberately share no code with the package's search paths.
"""

from itertools import permutations


def reduced_latin_squares(n):
    """All reduced Latin squares of order n, built a whole row at a time from
    ``itertools.permutations``; row i must start with i."""
    if n == 1:
        return [((0,),)]
    first = tuple(range(n))
    rows_for = {i: [p for p in permutations(range(n)) if p[0] == i] for i in range(1, n)}
    out = []

    def extend(rows):
        i = len(rows)
        if i == n:
            out.append(tuple(rows))
            return
        for cand in rows_for[i]:
            if all(cand[j] != r[j] for r in rows for j in range(n)):
                extend(rows + [cand])

    extend([first])
    return out


def brute_isomorphic(t1, t2):
    """True iff some bijection p has p[t1[x][y]] == t2[p[x]][p[y]]."""
    n = len(t1)
    if n != len(t2):
        return False
    for p in permutations(range(n)):
        if all(p[t1[x][y]] == t2[p[x]][p[y]] for x in range(n) for y in range(n)):
            return True
    return False


def brute_min_relabel(table, identity):
    """Lexicographic minimum table over all relabelings sending identity to 0."""
    n = len(table)
    others = [x for x in range(n) if x != identity]
    best = None
    for rest in permutations(range(1, n)):
        p = [0] * n
        p[identity] = 0
        for x, lab in zip(others, rest):
            p[x] = lab
        inv = [0] * n
        for x, lab in enumerate(p):
            inv[lab] = x
        cand = tuple(tuple(p[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        if best is None or cand < best:
            best = cand
    return best
