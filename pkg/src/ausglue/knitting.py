"""Enumeration of the AR quiver of a representation-directed algebra.

Vertices are found as the tau^{-1}-orbits of the indecomposable
projectives (for a representation-directed algebra every indecomposable
is tau^{-j} of a projective, and knitting these orbits terminates).
Arrows carry irreducible-map multiplicities dim rad/rad^2, computed from
hom spaces rather than middle-term bookkeeping; the mesh property ties
the two together and is checked exhaustively in the tests.
"""

from .linalg import row_space_basis
from .quiver import Quiver
from .fincat import (projective_module, injective_module, simple_module,
                     hom_modules, modules_isomorphic)
from .homology import tau_inv
from .errors import BudgetExceeded, NonSchurianVertex


class ARQuiver:
    """vertices[i] = (module, dim_vector); arrows = (src, dst, mult) index
    triples; tau maps non-projective vertex indices to their translates."""

    def __init__(self, cat, vertices, arrows, tau, projective_of, injective_flags):
        self.cat = cat
        self.vertices = vertices
        self.arrows = arrows
        self.tau = tau
        self.projective_of = projective_of  # index -> object label or None
        self.injective_flags = injective_flags

    @property
    def count(self):
        return len(self.vertices)

    def module(self, i):
        return self.vertices[i][0]

    def arrows_into(self, i):
        return sorted((s, m) for s, d, m in self.arrows if d == i)

    def arrows_out_of(self, i):
        return sorted((d, m) for s, d, m in self.arrows if s == i)

    def check_mesh(self):
        """At every non-projective vertex Z the multiset of arrow sources
        into Z must match the multiset of arrow targets out of tau(Z)."""
        for z, tz in self.tau.items():
            if self.arrows_into(z) != self.arrows_out_of(tz):
                return False, z
        return True, None

    def labels(self):
        return [vertex_label(self.cat, self.module(i)) for i in range(self.count)]


def vertex_label(cat, M):
    """A readable canonical name: P_x / I_x / S_x when applicable, else the
    dimension vector."""
    for x in cat.objects:
        if modules_isomorphic(M, projective_module(cat, x)):
            return "P_%s" % (x,)
    for x in cat.objects:
        if modules_isomorphic(M, injective_module(cat, x)):
            return "I_%s" % (x,)
    for x in cat.objects:
        if modules_isomorphic(M, simple_module(cat, x)):
            return "S_%s" % (x,)
    return "M%s" % (M.dim_vector(),)


def _seed_order(cat):
    """Objects in a topological order of the Gabriel quiver (sources first),
    ties broken by object list position."""
    arrows = cat.gabriel_arrows()
    q = Quiver(cat.objects, [("g%d" % i, s, t)
                             for i, ((s, t), _) in enumerate(sorted(
                                 arrows.items(),
                                 key=lambda kv: (cat.obj_index[kv[0][0]],
                                                 cat.obj_index[kv[0][1]])))])
    order = q.topological_order()
    return order if order is not None else list(cat.objects)


def knit(cat, budget=512):
    """Full list of indecomposables with irreducible-map multiplicities.
    Raises BudgetExceeded when the orbit enumeration passes the budget
    (the algebra is then likely not representation-finite)."""
    mods = []
    dimvecs = []
    tau_map = {}
    proj_of = {}

    def find(M):
        dv = M.dim_vector()
        for i, v in enumerate(dimvecs):
            if v == dv and modules_isomorphic(mods[i], M):
                return i
        return None

    for x in _seed_order(cat):
        P = projective_module(cat, x)
        idx = find(P)
        if idx is not None:
            continue
        mods.append(P)
        dimvecs.append(P.dim_vector())
        proj_of[len(mods) - 1] = x
        cur = len(mods) - 1
        while True:
            nxt = tau_inv(mods[cur])
            if nxt.total_dim() == 0:
                break
            idx = find(nxt)
            if idx is not None:
                tau_map[idx] = cur
                break
            if len(mods) >= budget:
                raise BudgetExceeded("more than %d indecomposables" % budget)
            mods.append(nxt)
            dimvecs.append(nxt.dim_vector())
            tau_map[len(mods) - 1] = cur
            cur = len(mods) - 1

    homs = {}
    for i, Mi in enumerate(mods):
        for j, Mj in enumerate(mods):
            homs[(i, j)] = hom_modules(Mi, Mj)
        if len(homs[(i, i)]) != 1:
            raise NonSchurianVertex(
                "vertex %d has End of dimension %d" % (i, len(homs[(i, i)])))

    arrows = []
    n = len(mods)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            basis = homs[(i, j)]
            if not basis:
                continue
            flat_len = None
            vecs = []
            for k in range(n):
                if k == i or k == j:
                    continue
                for f in homs[(i, k)]:
                    for g in homs[(k, j)]:
                        v = g.compose(f).flatten()
                        flat_len = len(v)
                        vecs.append(v)
            if flat_len is None:
                flat_len = len(basis[0].flatten())
            r2 = len(row_space_basis(cat.field, vecs, flat_len))
            m = len(basis) - r2
            if m > 0:
                arrows.append((i, j, m))

    # every non-injective vertex was continued to its tau^{-1}, so the
    # injectives are exactly the vertices that are nobody's translate
    translated = set(tau_map.values())
    inj_flags = [i not in translated for i in range(n)]
    vertices = [(mods[i], dimvecs[i]) for i in range(n)]
    return ARQuiver(cat, vertices, arrows,
                    tau_map, {i: proj_of.get(i) for i in range(n)}, inj_flags)


def aus_rank(spec, field):
    """Aus(Q): the number of indecomposables of the path algebra of the
    Dynkin quiver, i.e. the rank of its Auslander algebra."""
    from .quiver import hereditary_presentation
    from .pathcat import category_from_presentation
    cat = category_from_presentation(hereditary_presentation(spec), field)
    ar = knit(cat)
    assert ar.count == spec.positive_root_count()
    return ar.count
