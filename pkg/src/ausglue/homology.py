"""Minimal resolutions, Ext with explicit Yoneda cocycles, syzygies, the
AR translate (as DTr on minimal projective presentations) and its higher
analogues, the Nakayama functor, and the two dimension statistics gldim
and domdim.

Injective-side computations are routed through the opposite category via
the duality D, so only projective resolutions are ever built.
"""

from .linalg import Mat, NoSolution, row_space_basis
from .fincat import (FreeModule, CatMat, InjSum, ModuleMap, CatModule,
                     kernel, cokernel, dual_module, top_generators,
                     simple_module, projective_module, injective_module,
                     hom_modules, modules_isomorphic, zero_module)
from .errors import Truncated

INFINITY = float("inf")


def default_max_len(cat):
    return cat.total_dimension() + 2


class Resolution:
    """A minimal projective resolution ... -> F_1 -> F_0 -> M -> 0.

    terms[i]: summand-object list of F_i; frees[i]: its FreeModule
    realization; diffs[i]: the CatMat F_{i+1} -> F_i; eps: F_0 -> M.
    """

    def __init__(self, module, terms, frees, diffs, eps):
        self.module = module
        self.terms = terms
        self.frees = frees
        self.diffs = diffs
        self.eps = eps
        self.truncated = False

    @property
    def length(self):
        return len(self.terms) - 1

    def check_minimal(self):
        """Every differential image must lie in the radical: in Yoneda
        coordinates, no entry may contain an identity component."""
        for d in self.diffs:
            for i, b in enumerate(d.dst_objs):
                for j, a in enumerate(d.src_objs):
                    if b == a and any(v != self.module.cat.field.zero
                                      for v in d.entries[i][j]):
                        return False
        return True

    def check_complex(self):
        for i in range(len(self.diffs) - 1):
            hi = self.diffs[i].realize(self.frees[i + 1], self.frees[i])
            lo = self.diffs[i + 1].realize(self.frees[i + 2], self.frees[i + 1])
            if not hi.compose(lo).is_zero():
                return False
        if self.diffs:
            d0 = self.diffs[0].realize(self.frees[1], self.frees[0])
            if not self.eps.compose(d0).is_zero():
                return False
        return True


def min_proj_resolution(M, max_len=None, stop_at=None):
    """Minimal projective resolution of M.  Raises Truncated past max_len;
    stop_at truncates silently (for Ext, which only needs a prefix)."""
    cat = M.cat
    if max_len is None:
        max_len = default_max_len(cat)
    if M.total_dim() == 0:
        F = FreeModule(cat, [])
        return Resolution(M, [[]], [F], [], F.yoneda_map(M, []))
    gens = top_generators(M)
    F0 = FreeModule(cat, [x for x, _ in gens])
    eps = F0.yoneda_map(M, [v for _, v in gens])
    terms = [list(F0.summands)]
    frees = [F0]
    diffs = []
    K = kernel(eps)
    emb = K.inclusion
    degree = 0
    res = Resolution(M, terms, frees, diffs, eps)
    while K.module.total_dim() > 0:
        degree += 1
        if stop_at is not None and degree > stop_at:
            res.truncated = True
            return res
        if degree > max_len:
            raise Truncated(max_len)
        kgens = top_generators(K.module)
        F = FreeModule(cat, [x for x, _ in kgens])
        prev = frees[-1]
        entries = [[None] * len(kgens) for _ in prev.summands]
        for jcol, (y, v) in enumerate(kgens):
            w = emb.mats[y].apply(v)
            for irow, s in enumerate(prev.summands):
                o = prev.offsets[y][irow]
                d = cat.homdim[(s, y)]
                entries[irow][jcol] = w[o:o + d]
        diffs.append(CatMat(cat, list(F.summands), list(prev.summands), entries))
        frees.append(F)
        terms.append(list(F.summands))
        cover = F.yoneda_map(K.module, [v for _, v in kgens])
        K = kernel(cover)
        emb = K.inclusion
    return res


def pdim(M, max_len=None):
    if M.total_dim() == 0:
        return -1
    return min_proj_resolution(M, max_len=max_len).length


def syzygy(M):
    """Omega(M): kernel of the projective cover."""
    if M.total_dim() == 0:
        return M
    gens = top_generators(M)
    F0 = FreeModule(M.cat, [x for x, _ in gens])
    eps = F0.yoneda_map(M, [v for _, v in gens])
    return kernel(eps).module


def cosyzygy(M):
    return dual_module(syzygy(dual_module(M)))


def min_inj_coresolution(M, max_len=None, stop_at=None):
    """Minimal injective coresolution of M, computed as the projective
    resolution of D(M) over the opposite category.  terms[i] lists the
    socle labels: term i is the sum of I_x over its entries."""
    return min_proj_resolution(dual_module(M), max_len=max_len, stop_at=stop_at)


def idim(M, max_len=None):
    return pdim(dual_module(M), max_len=max_len)


def gldim(cat, max_len=None):
    """Global dimension: max projective dimension over the simples."""
    best = 0
    for x in cat.objects:
        best = max(best, pdim(simple_module(cat, x), max_len=max_len))
    return best


def projective_injective_objects(cat):
    """Objects x such that I_x is projective (equivalently labels of the
    projective-injective indecomposables)."""
    out = []
    for x in cat.objects:
        I = injective_module(cat, x)
        gens = top_generators(I)
        if len(gens) != 1:
            continue
        y = gens[0][0]
        if modules_isomorphic(I, projective_module(cat, y)):
            out.append(x)
    return out


def injective_labels_projective(cat):
    """Map x -> y for each projective-injective: I_x isomorphic to P_y."""
    out = {}
    for x in cat.objects:
        I = injective_module(cat, x)
        gens = top_generators(I)
        if len(gens) != 1:
            continue
        y = gens[0][0]
        if modules_isomorphic(I, projective_module(cat, y)):
            out[x] = y
    return out


def domdim(cat, max_len=None):
    """Dominant dimension: minimum over indecomposable projectives of the
    number of leading projective-injective terms in the minimal injective
    coresolution.  Returns INFINITY for self-injective input."""
    projinj = set(projective_injective_objects(cat))
    best = INFINITY
    for x in cat.objects:
        P = projective_module(cat, x)
        res = min_inj_coresolution(P, max_len=max_len)
        t = 0
        for term in res.terms:
            if all(z in projinj for z in term):
                t += 1
            else:
                break
        if t > res.length and not res.truncated:
            t = INFINITY  # coresolution entirely projective-injective
        best = min(best, t)
        if best == 0:
            break
    return best


# ---------------------------------------------------------------------------
# Ext with explicit cocycles


class ExtSpace:
    """A basis of Ext^n(X, Y) with Yoneda-cocycle representatives.

    A cocycle is a vector in Hom(F_n, Y) coordinates: the concatenation of
    one Y(b) block per summand b of term n of X's minimal resolution.
    reduce() maps any cocycle to coordinates over the chosen representative
    basis, discarding coboundaries.
    """

    def __init__(self, X, Y, n, resolution, reps, cob_rows):
        self.X = X
        self.Y = Y
        self.n = n
        self.resolution = resolution
        self.reps = reps
        self.cob_rows = cob_rows
        self.field = X.cat.field

    @property
    def dim(self):
        return len(self.reps)

    def reduce(self, vec):
        """Coordinates of a cocycle modulo coboundaries, in the rep basis."""
        f = self.field
        if not self.reps and not self.cob_rows:
            if any(v != f.zero for v in vec):
                raise NoSolution()
            return []
        A = Mat.from_cols(f, list(self.cob_rows) + list(self.reps))
        sol = A.solve(Mat.from_cols(f, [vec]))
        return [sol[len(self.cob_rows) + i, 0] for i in range(len(self.reps))]

    def cocycle_as_map(self, vec):
        """Realize a cocycle vector as a ModuleMap F_n -> Y."""
        F = self.resolution.frees[self.n]
        elements = []
        o = 0
        for b in F.summands:
            d = self.Y.dims[b]
            elements.append(vec[o:o + d])
            o += d
        return F.yoneda_map(self.Y, elements)


def ext_space(X, Y, n, resolution=None):
    """Ext^n(X, Y) with explicit representatives; n >= 1.  Use hom_modules
    for n = 0."""
    f = X.cat.field
    if resolution is None:
        resolution = min_proj_resolution(X, stop_at=n + 1)
    res = resolution
    if n > res.length:
        return ExtSpace(X, Y, n, res, [], [])
    hom_n = sum(Y.dims[b] for b in res.terms[n])
    # cocycles: kernel of Hom(F_n, Y) -> Hom(F_{n+1}, Y)
    if n < res.length or res.truncated and n + 1 <= len(res.diffs):
        U = res.diffs[n].hom_into(Y)
        Z = U.kernel_basis()
        zvecs = [Z.col(j) for j in range(Z.ncols)]
    else:
        zvecs = [_unit(f, hom_n, i) for i in range(hom_n)]
    # coboundaries: image of Hom(F_{n-1}, Y) -> Hom(F_n, Y)
    if n >= 1 and len(res.diffs) >= n:
        V = res.diffs[n - 1].hom_into(Y)
        bvecs = [V.col(j) for j in range(V.ncols)]
    else:
        bvecs = []
    cob_rows = row_space_basis(f, bvecs, hom_n)
    reps = []
    span = list(cob_rows)
    rank = len(span)
    for zv in zvecs:
        trial = row_space_basis(f, span + [zv], hom_n)
        if len(trial) > rank:
            reps.append(zv)
            span = trial
            rank += 1
    return ExtSpace(X, Y, n, res, reps, cob_rows)


def _unit(f, n, i):
    v = [f.zero] * n
    v[i] = f.one
    return v


def ext_dim(X, Y, n):
    if n == 0:
        return len(hom_modules(X, Y))
    return ext_space(X, Y, n).dim


# ---------------------------------------------------------------------------
# transpose, AR translates, Nakayama functor


def transpose_module(M):
    """Tr(M): cokernel of the dualized minimal projective presentation; a
    module over the opposite category."""
    cat = M.cat
    op = cat.opposite()
    res = min_proj_resolution(M, stop_at=1)
    if not res.diffs:
        return zero_module(op)
    d = res.diffs[0].op()  # F_op(terms[0]) -> F_op(terms[1])
    src = FreeModule(op, d.src_objs)
    dst = FreeModule(op, d.dst_objs)
    return cokernel(d.realize(src, dst)).module


def tau(M):
    """AR translate DTr; zero on projectives."""
    return dual_module(transpose_module(M))


def tau_inv(M):
    """Inverse AR translate TrD; zero on injectives."""
    return transpose_module(dual_module(M))


def tau_n(M, n):
    """Higher translate tau Omega^{n-1}."""
    for _ in range(n - 1):
        M = syzygy(M)
    return tau(M)


def tau_n_inv(M, n):
    """Inverse higher translate tau^{-1} Omega^{-(n-1)}."""
    for _ in range(n - 1):
        M = cosyzygy(M)
    return tau_inv(M)


def nakayama_functor(M):
    """nu = D Hom(-, regular): sends the presentation's projectives to the
    matching injectives and takes the cokernel; nu(P_x) = I_x."""
    cat = M.cat
    res = min_proj_resolution(M, stop_at=1)
    inj0 = InjSum(cat, res.terms[0])
    if not res.diffs:
        return inj0.module
    inj1 = InjSum(cat, res.terms[1])
    return cokernel(res.diffs[0].on_injectives(inj1, inj0)).module


def nakayama_inverse(M):
    """nu^{-1}; on injectives, nu^{-1}(I_x) = P_x."""
    return dual_module(nakayama_functor(dual_module(M)))


# ---------------------------------------------------------------------------
# chain-map lifting (for Yoneda composition of Ext with Hom)


def lift_chain_map(f, res_src, res_dst, upto):
    """Lift f: res_src.module -> res_dst.module to a chain map between the
    resolutions, as CatMats lifts[i]: F_i(src) -> F_i(dst), i = 0..upto.
    Any two lifts differ by a homotopy, which dies in Ext."""
    cat = f.src.cat
    lifts = []
    prev = None
    for m in range(upto + 1):
        if m > res_src.length:
            break
        Fs = res_src.frees[m]
        if m > res_dst.length:
            # target resolution ended; the lift is forced to be zero
            lifts.append(None)
            prev = None
            continue
        Fd = res_dst.frees[m]
        if m == 0:
            target = f.compose(res_src.eps)          # F_0(src) -> dst module
            post = res_dst.eps                       # F_0(dst) -> dst module
            lifted = _solve_catmat(cat, Fs, Fd, post, target)
        else:
            if prev is None:
                lifts.append(None)
                continue
            dd = res_dst.diffs[m - 1].realize(res_dst.frees[m], res_dst.frees[m - 1])
            ds = res_src.diffs[m - 1].realize(res_src.frees[m], res_src.frees[m - 1])
            prev_map = prev.realize(res_src.frees[m - 1], res_dst.frees[m - 1])
            target = prev_map.compose(ds)            # F_m(src) -> F_{m-1}(dst)
            lifted = _solve_catmat(cat, Fs, Fd, dd, target)
        lifts.append(lifted)
        prev = lifted
    return lifts


def _solve_catmat(cat, Fs, Fd, post, target):
    """Find a CatMat u: Fs -> Fd with post o realize(u) = target, solving in
    the coefficient space of all possible entries."""
    f = cat.field
    coords = []   # (i, j, basis index)
    cols = []
    for i, b in enumerate(Fd.summands):
        for j, a in enumerate(Fs.summands):
            d = cat.homdim[(b, a)]
            for t in range(d):
                entries = [[[f.zero] * cat.homdim[(bb, aa)]
                            for aa in Fs.summands] for bb in Fd.summands]
                entries[i][j][t] = f.one
                cm = CatMat(cat, list(Fs.summands), list(Fd.summands), entries)
                cols.append(post.compose(cm.realize(Fs, Fd)).flatten())
                coords.append((i, j, t))
    rhs = target.flatten()
    if not cols:
        if any(v != f.zero for v in rhs):
            raise NoSolution()
        return CatMat(cat, list(Fs.summands), list(Fd.summands),
                      [[[f.zero] * cat.homdim[(b, a)] for a in Fs.summands]
                       for b in Fd.summands])
    A = Mat.from_cols(f, cols)
    sol = A.solve(Mat.from_cols(f, [rhs]))
    entries = [[[f.zero] * cat.homdim[(b, a)] for a in Fs.summands]
               for b in Fd.summands]
    for idx, (i, j, t) in enumerate(coords):
        entries[i][j][t] = sol[idx, 0]
    return CatMat(cat, list(Fs.summands), list(Fd.summands), entries)


def compose_hom_with_ext(g, ext, vec):
    """Postcompose: g in Hom(Y, Z), vec a cocycle for Ext^n(X, Y); returns
    the cocycle vector of g o vec in Ext^n(X, Z) coordinates."""
    F = ext.resolution.frees[ext.n]
    out = []
    o = 0
    for b in F.summands:
        d = ext.Y.dims[b]
        out.extend(g.mats[b].apply(vec[o:o + d]))
        o += d
    return out


def compose_ext_with_hom(ext, vec, f, res_src):
    """Precompose: vec a cocycle for Ext^n(Y, Z) (ext over Y), f: X -> Y;
    returns the cocycle vector over X's resolution res_src."""
    lifts = lift_chain_map(f, res_src, ext.resolution, ext.n)
    n = ext.n
    hom_dim = sum(ext.Y.dims[b] for b in res_src.terms[n]) \
        if n <= res_src.length else 0
    if n >= len(lifts) or lifts[n] is None:
        return [ext.field.zero] * hom_dim
    U = lifts[n].hom_into(ext.Y)
    return U.apply(vec)
