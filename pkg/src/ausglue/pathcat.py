"""Path categories of bound quivers.

category_from_presentation turns a BoundPresentation into a FinCategory:
objects are the vertices, hom(x,y) is spanned by the paths x -> y reduced
modulo the two-sided ideal generated by the relations, and composition is
path concatenation followed by reduction.
"""

from .linalg import row_space_basis
from .fincat import FinCategory
from .errors import InfiniteDimensional

_HARD_LENGTH_CAP = 30


def _path_str(path):
    return "e" if not path else ".".join(str(a) for a in path)


def category_from_presentation(pres, field):
    q = pres.quiver
    acyclic = q.is_acyclic
    max_len = len(q.vertices) - 1 if acyclic else _HARD_LENGTH_CAP

    # enumerate paths by length, grouped by (source, target)
    paths = {}  # (x, y) -> ordered path list
    for x in q.vertices:
        paths[(x, x)] = [()]
        for y in q.vertices:
            paths.setdefault((x, y), [])
    cur = {x: [((), x)] for x in q.vertices}  # by source: (path, endpoint)
    all_paths = {x: [((), x)] for x in q.vertices}
    length = 0
    while True:
        length += 1
        if length > max_len + 1:
            break
        new = {x: [] for x in q.vertices}
        any_new = False
        for x in q.vertices:
            for path, end in cur[x]:
                for aid, s, t in q.arrows:
                    if s == end:
                        np = path + (aid,)
                        new[x].append((np, t))
                        paths[(x, t)].append(np)
                        any_new = True
        if not any_new:
            break
        if length > max_len:
            raise InfiniteDimensional(
                "path classes did not stabilize within length %d" % max_len)
        for x in q.vertices:
            all_paths[x].extend(new[x])
        cur = new

    index = {}  # (x, y) -> {path: position}
    for key, plist in paths.items():
        index[key] = {p: i for i, p in enumerate(plist)}

    # two-sided ideal: p . r . q for every relation r and all paths p, q
    ideal_rows = {key: [] for key in paths}
    for rel in pres.relations:
        u = q.path_source(rel[0][1])
        v = q.path_target(rel[0][1])
        for x in q.vertices:
            for p, pend in all_paths[x]:
                if pend != u:
                    continue
                for qq, qend in all_paths[v]:
                    y = qend
                    vec = [0] * len(paths[(x, y)])
                    ok = True
                    for coeff, rp in rel:
                        full = p + rp + qq
                        pos = index[(x, y)].get(full)
                        if pos is None:
                            ok = False
                            break
                        vec[pos] += coeff
                    if ok:
                        ideal_rows[(x, y)].append([field(c) for c in vec])

    # reduce: basis = paths at non-pivot positions of the ideal's RREF
    basis = {}
    reducer = {}
    for key, plist in paths.items():
        rows = row_space_basis(field, ideal_rows[key], len(plist))
        piv = []
        j = 0
        for r in rows:
            while r[j] == field.zero:
                j += 1
            piv.append(j)
        free = [j for j in range(len(plist)) if j not in piv]
        basis[key] = [plist[j] for j in free]
        reducer[key] = (rows, piv, free)

    def reduce_path(x, y, path):
        """Coordinates of a single path in the chosen hom(x,y) basis."""
        rows, piv, free = reducer[(x, y)]
        n = len(paths[(x, y)])
        pos = index[(x, y)].get(path)
        v = [field.zero] * n
        if pos is not None:
            v[pos] = field.one
        for r, j in zip(rows, piv):
            cv = v[j]
            if cv != field.zero:
                v = [a - cv * b for a, b in zip(v, r)]
                if field.p is not None:
                    v = [a % field.p for a in v]
        return [v[j] for j in free]

    objects = list(q.vertices)
    homdim = {(x, y): len(basis[(x, y)]) for x in objects for y in objects}
    comp = {}
    for x in objects:
        for y in objects:
            if homdim[(x, y)] == 0:
                continue
            for z in objects:
                if homdim[(y, z)] == 0 or homdim[(x, z)] == 0:
                    continue
                t = []
                for g in basis[(y, z)]:
                    row = []
                    for f in basis[(x, y)]:
                        row.append(reduce_path(x, z, f + g))
                    t.append(row)
                comp[(x, y, z)] = t
    names = {(x, y): [_path_str(p) for p in basis[(x, y)]]
             for x in objects for y in objects if homdim[(x, y)]}
    return FinCategory(field, objects, homdim, comp, names)
