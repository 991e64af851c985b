"""Modules of enumerated matrix groups over small finite fields.

The decomposition engine is a classical randomized meataxe: singular
elements of the group algebra supply kernel vectors, spinning either
splits the module or, through Norton's two-sided test, certifies
irreducibility.  A search that exhausts its budget surfaces as
InconclusiveError, never as a wrong answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from chardeg.fields import Field, field_make, field_from_json
from chardeg.groups import CapExceeded, GroupTable, Subgroup, group_from_json, whole_group
from chardeg.linalg import (
    Subspace,
    identity_matrix,
    kron,
    mat_inv,
    mat_mul,
    mat_sub,
    nullspace,
    rref,
    trace,
)
from chardeg.numtheory import is_prime

CHOP_DIM_CAP = 512
PERM_DOMAIN_CAP = 4096
ALGEBRA_BUDGET = 200
LINE_ENUM_LIMIT = 600


class InconclusiveError(RuntimeError):
    """The randomized search budget ran out before a certificate was found."""


class ModuleError(ValueError):
    pass


class GModule:
    """A representation of a GroupTable, given by invertible generator images."""

    def __init__(self, group: GroupTable, field: Field, gen_images, check: bool = True):
        self.group = group
        self.field = field
        imgs = [np.ascontiguousarray(m, dtype=np.int64) for m in gen_images]
        if len(imgs) != len(group.gens):
            raise ModuleError("one image per group generator is required")
        self.dim = int(imgs[0].shape[0]) if imgs else 0
        for m in imgs:
            if m.shape != (self.dim, self.dim):
                raise ModuleError("generator images must be square of equal size")
            m.flags.writeable = False
        if self.dim < 1:
            raise ModuleError("module dimension must be >= 1")
        if check:
            for m in imgs:
                try:
                    mat_inv(field, m)
                except ZeroDivisionError:
                    raise ModuleError("generator image is singular") from None
        self.gen_images = tuple(imgs)
        self._cache: dict = {}

    # -- element images --------------------------------------------------------

    def image_of(self, idx: int) -> np.ndarray:
        """Image of group element idx, by replaying its generator word."""
        out = identity_matrix(self.dim)
        for gi in self.group.word(idx):
            out = mat_mul(self.field, out, self.gen_images[gi])
        return out

    @cached_property
    def element_images(self) -> np.ndarray:
        """Images of all elements, in canonical element order (small dims)."""
        if self.dim > 64:
            raise ModuleError("full image table is restricted to dim <= 64")
        n = self.group.order
        out = np.empty((n, self.dim, self.dim), dtype=np.int64)
        out[0] = identity_matrix(self.dim)
        parent = self.group.parent
        pgen = self.group.parent_gen
        for i in range(1, n):
            out[i] = mat_mul(self.field, out[parent[i]], self.gen_images[pgen[i]])
        out.flags.writeable = False
        return out

    @cached_property
    def kernel_indices(self) -> tuple[int, ...]:
        """Indices of group elements acting as the identity."""
        ident = identity_matrix(self.dim)
        flat = (self.element_images == ident).all(axis=(1, 2))
        return tuple(int(i) for i in np.flatnonzero(flat))

    @property
    def is_faithful(self) -> bool:
        return len(self.kernel_indices) == 1

    def fingerprint(self, count: int = 20) -> tuple[int, ...]:
        """Sorted traces of the images of the first `count` canonical elements."""
        n = min(count, self.group.order)
        return tuple(sorted(trace(self.field, self.image_of(i)) for i in range(n)))

    @cached_property
    def class_traces(self) -> tuple[int, ...]:
        """Trace of the image of one representative per conjugacy class.

        Isomorphic modules agree here, so a mismatch is a cheap
        non-isomorphism certificate; equality still needs the hom solve.
        """
        cls = self.group.conjugacy_classes
        n_classes = int(cls.max()) + 1
        reps = [-1] * n_classes
        for i in range(self.group.order):
            c = int(cls[i])
            if reps[c] < 0:
                reps[c] = i
        return tuple(trace(self.field, self.image_of(rep)) for rep in reps)

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "field": self.field.to_json(),
            "dim": self.dim,
            "gen_images": [[int(x) for x in m.reshape(-1)] for m in self.gen_images],
        }


def module_from_json(data: dict, group: GroupTable | None = None) -> GModule:
    if group is None:
        group = group_from_json(data["group"])
    F = field_from_json(data["field"])
    d = int(data["dim"])
    imgs = [np.asarray(flat, dtype=np.int64).reshape(d, d) for flat in data["gen_images"]]
    return GModule(group, F, imgs)


def validate_homomorphism(m: GModule, samples: int = 100, seed: int = 42) -> bool:
    """Spot-check image(xy) == image(x)image(y) on random element pairs."""
    rng = np.random.default_rng(seed)
    n = m.group.order
    for _ in range(samples):
        x = int(rng.integers(n))
        y = int(rng.integers(n))
        lhs = m.image_of(m.group.mult(x, y))
        rhs = mat_mul(m.field, m.image_of(x), m.image_of(y))
        if not np.array_equal(lhs, rhs):
            return False
    return True


# -- constructors --------------------------------------------------------------


def trivial_module(group: GroupTable, r: int) -> GModule:
    F = field_make(r)
    one = np.asarray([[1]], dtype=np.int64)
    return GModule(group, F, [one] * len(group.gens), check=False)


def perm_module(group: GroupTable, action: str, r: int) -> GModule:
    """Permutation module over F_r on nonzero vectors or projective points."""
    if not is_prime(r):
        raise ModuleError("permutation modules are built over prime fields")
    F = group.field
    q = F.order
    if action == "nonzero-vectors":
        domain = [(x, y) for x in range(q) for y in range(q) if (x, y) != (0, 0)]

        def act(g, pt):
            x, y = pt
            return (
                F.add(F.mul(int(g[0, 0]), x), F.mul(int(g[0, 1]), y)),
                F.add(F.mul(int(g[1, 0]), x), F.mul(int(g[1, 1]), y)),
            )

    elif action == "projective-points":
        domain = [(1, y) for y in range(q)] + [(0, 1)]

        def act(g, pt):
            x, y = pt
            nx = F.add(F.mul(int(g[0, 0]), x), F.mul(int(g[0, 1]), y))
            ny = F.add(F.mul(int(g[1, 0]), x), F.mul(int(g[1, 1]), y))
            if nx != 0:
                s = F.inv(nx)
                return (1, F.mul(s, ny))
            return (0, 1)

    else:
        raise ModuleError(f"unknown action {action!r}")
    if len(domain) > PERM_DOMAIN_CAP:
        raise CapExceeded(f"action domain of size {len(domain)} exceeds {PERM_DOMAIN_CAP}")
    domain = sorted(domain)
    index = {pt: i for i, pt in enumerate(domain)}
    n = len(domain)
    images = []
    for g in group.gens:
        M = np.zeros((n, n), dtype=np.int64)
        for i, pt in enumerate(domain):
            M[index[act(g, pt)], i] = 1
        images.append(M)
    return GModule(group, field_make(r), images, check=False)


def _scalar_embedding(F: Field, s: int) -> np.ndarray:
    """Multiplication by s on F as a k x k matrix over the prime field.

    Column j holds the coefficient vector of s * x^j in the power basis.
    """
    k = F.k
    p = F.p
    out = np.zeros((k, k), dtype=np.int64)
    for j in range(k):
        prod = F.mul(s, p**j)
        for i in range(k):
            out[i, j] = prod % p
            prod //= p
    return out


def natural_restricted(q: int, group: GroupTable | None = None) -> GModule:
    """The 2-dimensional standard module written over the prime field.

    Every generator entry is replaced by the k x k matrix of
    multiplication by that scalar, giving a 2k-dimensional module over
    F_t for q = t^k.
    """
    from chardeg.groups import sl2_group

    if group is None:
        group = sl2_group(q)
    F = group.field
    if F.order != q:
        raise ModuleError("group field does not match q")
    k = F.k
    images = []
    for g in group.gens:
        M = np.zeros((2 * k, 2 * k), dtype=np.int64)
        for bi in range(2):
            for bj in range(2):
                M[bi * k : (bi + 1) * k, bj * k : (bj + 1) * k] = _scalar_embedding(
                    F, int(g[bi, bj])
                )
        images.append(M)
    return GModule(group, field_make(F.p), images)


def tensor(m1: GModule, m2: GModule) -> GModule:
    if m1.group is not m2.group or m1.field != m2.field:
        raise ModuleError("tensor requires the same group and field")
    images = [kron(m1.field, a, b) for a, b in zip(m1.gen_images, m2.gen_images)]
    return GModule(m1.group, m1.field, images, check=False)


def dual(m: GModule) -> GModule:
    images = [mat_inv(m.field, g).T.copy() for g in m.gen_images]
    return GModule(m.group, m.field, images, check=False)


# -- spinning and the meataxe ---------------------------------------------------


class _SpinBasis:
    """Semi-echelon row basis with pivot bookkeeping."""

    def __init__(self, F: Field, dim: int):
        self.F = F
        self.dim = dim
        self.rows = np.zeros((dim, dim), dtype=np.int64)
        self.pivot_of_row: list[int] = []
        self.row_of_pivot: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_of_row)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        F = self.F
        v = v.copy()
        while True:
            nz = np.flatnonzero(v)
            if nz.size == 0:
                return v
            lead = int(nz[0])
            row_idx = self.row_of_pivot.get(lead)
            if row_idx is None:
                return v
            c = int(v[lead])
            if F.is_prime_field:
                v = (v - c * self.rows[row_idx]) % F.p
            else:
                add_t, mul_t, neg_t, _ = F.tables
                v = add_t[v, mul_t[neg_t[c], self.rows[row_idx]]]

    def insert(self, v: np.ndarray) -> bool:
        """Reduce v and add it to the basis; False if v was dependent."""
        v = self.reduce(v)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        lead = int(nz[0])
        F = self.F
        inv = F.inv(int(v[lead]))
        if F.is_prime_field:
            v = (v * inv) % F.p
        else:
            v = F.tables[1][inv, v]
        idx = self.rank
        self.rows[idx] = v
        self.pivot_of_row.append(lead)
        self.row_of_pivot[lead] = idx
        return True

    def matrix(self) -> np.ndarray:
        return self.rows[: self.rank].copy()


def spin(F: Field, seeds, action_mats, dim: int) -> np.ndarray:
    """Closure of the seed row vectors under right action by the matrices."""
    basis = _SpinBasis(F, dim)
    queue: list[np.ndarray] = []
    for v in seeds:
        if basis.insert(np.asarray(v, dtype=np.int64)):
            queue.append(basis.rows[basis.rank - 1].copy())
    while queue and basis.rank < dim:
        v = queue.pop()
        for M in action_mats:
            if F.is_prime_field:
                w = (v @ M) % F.p
            else:
                add_t, mul_t = F.tables[0], F.tables[1]
                acc = mul_t[v[0], M[0]]
                for kk in range(1, dim):
                    acc = add_t[acc, mul_t[v[kk], M[kk]]]
                w = acc
            if basis.insert(w):
                queue.append(basis.rows[basis.rank - 1].copy())
    return basis.matrix()


def _random_algebra_element(rng, F: Field, gen_images) -> np.ndarray:
    """Random 3-term combination of short words in the generator images."""
    d = gen_images[0].shape[0]
    A = np.zeros((d, d), dtype=np.int64)
    g = len(gen_images)
    for _ in range(3):
        word = identity_matrix(d)
        for _ in range(int(rng.integers(1, 4))):
            word = mat_mul(F, word, gen_images[int(rng.integers(g))])
        c = int(rng.integers(F.order))
        if c:
            if F.is_prime_field:
                A = (A + c * word) % F.p
            else:
                A = F.tables[0][A, F.tables[1][c, word]]
    return A


def _kernel_lines(F: Field, ker: np.ndarray, limit: int = LINE_ENUM_LIMIT):
    """All projective lines of the row span of ker, or None if too many."""
    nullity = ker.shape[0]
    q = F.order
    n_lines = (q**nullity - 1) // (q - 1)
    if n_lines > limit:
        return None
    lines = []
    for coeffs in itertools.product(range(q), repeat=nullity):
        first = next((c for c in coeffs if c), None)
        if first != 1:
            continue
        v = np.zeros(ker.shape[1], dtype=np.int64)
        for c, row in zip(coeffs, ker):
            if c:
                if F.is_prime_field:
                    v = (v + c * row) % F.p
                else:
                    v = F.tables[0][v, F.tables[1][c, row]]
        lines.append(v)
    return lines


def _meataxe_step(m: GModule, rng, budget: int = ALGEBRA_BUDGET):
    """One irreducibility decision: ('irr', None) or ('sub', basis rows)."""
    F, d = m.field, m.dim
    act = [g.T.copy() for g in m.gen_images]  # row action for module submodules
    act_t = [g.copy() for g in m.gen_images]  # row action for transpose module
    # cyclic-vector fast path; also the only route for scalar-like actions,
    # whose algebra has no nonzero singular elements for the kernel search
    e0 = np.zeros(d, dtype=np.int64)
    e0[0] = 1
    W0 = spin(F, [e0], act, d)
    if W0.shape[0] < d:
        return "sub", W0
    for _ in range(budget):
        A = _random_algebra_element(rng, F, m.gen_images)
        ker = nullspace(F, A)
        nullity = ker.shape[0]
        if nullity == 0 or nullity == d:
            continue
        lines = _kernel_lines(F, ker)
        vecs = lines if lines is not None else list(ker)
        for v in vecs:
            W = spin(F, [v], act, d)
            if W.shape[0] < d:
                return "sub", W
        if lines is None:
            continue  # cannot certify from a partial kernel sweep
        ker_t = nullspace(F, A.T.copy())
        Wt = spin(F, [ker_t[0]], act_t, d)
        if Wt.shape[0] < d:
            return "sub", nullspace(F, Wt)
        return "irr", None
    raise InconclusiveError(f"no decision for a {d}-dimensional module within {budget} tries")


def split_module(m: GModule, basis_rows: np.ndarray) -> tuple[GModule, GModule]:
    """Restriction to an invariant subspace and the quotient action."""
    F, d = m.field, m.dim
    res = rref(F, basis_rows)
    w = res.rank
    if not 0 < w < d:
        raise ModuleError("split needs a proper nonzero subspace")
    comp = [c for c in range(d) if c not in res.pivots]
    C = np.zeros((d, d), dtype=np.int64)
    C[:, :w] = res.reduced[:w].T
    for j, c in enumerate(comp):
        C[c, w + j] = 1
    Ci = mat_inv(F, C)
    subs, quots = [], []
    for M in m.gen_images:
        Mp = mat_mul(F, mat_mul(F, Ci, M), C)
        if Mp[w:, :w].any():
            raise ModuleError("subspace is not invariant")
        subs.append(Mp[:w, :w].copy())
        quots.append(Mp[w:, w:].copy())
    return (
        GModule(m.group, F, subs, check=False),
        GModule(m.group, F, quots, check=False),
    )


def is_irreducible(m: GModule, seed: int = 42) -> bool:
    """Norton-certified irreducibility; may raise InconclusiveError."""
    if m.dim > CHOP_DIM_CAP:
        raise CapExceeded(f"dimension {m.dim} exceeds the chop cap {CHOP_DIM_CAP}")
    if m.dim == 1:
        return True
    verdict, _ = _meataxe_step(m, np.random.default_rng(seed))
    return verdict == "irr"


def chop(m: GModule, seed: int = 42) -> list[GModule]:
    """Composition factors with multiplicity; each factor is certified."""
    if m.dim > CHOP_DIM_CAP:
        raise CapExceeded(f"dimension {m.dim} exceeds the chop cap {CHOP_DIM_CAP}")
    rng = np.random.default_rng(seed)
    factors: list[GModule] = []
    stack = [m]
    while stack:
        cur = stack.pop()
        if cur.dim == 1:
            factors.append(cur)
            continue
        verdict, W = _meataxe_step(cur, rng)
        if verdict == "irr":
            factors.append(cur)
        else:
            sub, quot = split_module(cur, W)
            stack.append(quot)
            stack.append(sub)
    return factors


# -- hom spaces, isomorphism, endomorphisms -------------------------------------


def hom_space_dim(m1: GModule, m2: GModule) -> int:
    """dim of {X : image2(g) X = X image1(g) for all generators}."""
    if m1.group is not m2.group or m1.field != m2.field:
        raise ModuleError("hom spaces need the same group and field")
    F = m1.field
    d1, d2 = m1.dim, m2.dim
    i1 = identity_matrix(d1)
    i2 = identity_matrix(d2)
    blocks = []
    for M1, M2 in zip(m1.gen_images, m2.gen_images):
        blocks.append(mat_sub(F, kron(F, M2, i1), kron(F, i2, M1.T.copy())))
    big = np.concatenate(blocks, axis=0)
    return int(nullspace(F, big).shape[0])


def endo_dim(m: GModule) -> int:
    """Dimension of the commuting algebra; the splitting multiplier for irreducibles."""
    return hom_space_dim(m, m)


def is_isomorphic(m1: GModule, m2: GModule) -> bool:
    if m1.dim != m2.dim:
        return False
    return hom_space_dim(m1, m2) > 0


def fixed_subspace(m: GModule, sub: Subgroup) -> Subspace:
    """Common fixed vectors of a subgroup, as the intersection of kernels."""
    if sub.parent is not m.group:
        raise ModuleError("subgroup belongs to a different group")
    gens = sub.generating_set()
    if not gens:
        basis = rref(m.field, identity_matrix(m.dim)).reduced
        return Subspace(m.field, m.dim, basis)
    ident = identity_matrix(m.dim)
    blocks = [mat_sub(m.field, m.image_of(g), ident) for g in gens]
    basis = nullspace(m.field, np.concatenate(blocks, axis=0))
    return Subspace(m.field, m.dim, basis)


def fixed_subspace_group(m: GModule) -> Subspace:
    return fixed_subspace(m, whole_group(m.group))


# -- catalogs -------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    module: GModule
    dim: int
    ell: int
    faithful: bool
    fingerprint: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "ell": self.ell,
            "faithful": self.faithful,
            "fingerprint": list(self.fingerprint),
        }


@dataclass(frozen=True)
class Catalog:
    group: GroupTable
    char: int
    dim_cap: int
    entries: tuple[CatalogEntry, ...]
    complete: bool
    expected_count: int

    def nontrivial_dims(self) -> list[int]:
        return sorted(e.dim for e in self.entries if e.dim > 1)

    def select(self, dim: int | None = None, faithful: bool | None = None, ell: int | None = None):
        out = []
        for e in self.entries:
            if dim is not None and e.dim != dim:
                continue
            if faithful is not None and e.faithful != faithful:
                continue
            if ell is not None and e.ell != ell:
                continue
            out.append(e)
        return out

    def to_json(self) -> dict:
        return {
            "group_order": self.group.order,
            "char": self.char,
            "dim_cap": self.dim_cap,
            "complete": self.complete,
            "expected_count": self.expected_count,
            "entries": [e.to_json() for e in self.entries],
        }


def irreducible_count(group: GroupTable, r: int) -> int:
    """Number of irreducible F_r-modules: r-regular classes mod r-th powers."""
    cls = group.conjugacy_classes
    orders = group.element_orders
    n_classes = int(cls.max()) + 1
    reps = [-1] * n_classes
    for i in range(group.order):
        c = int(cls[i])
        if reps[c] < 0:
            reps[c] = i
    regular = [c for c in range(n_classes) if int(orders[reps[c]]) % r != 0]
    reg_set = set(regular)
    from chardeg.groups import _power_index

    step = {c: int(cls[_power_index(group, reps[c], r)]) for c in regular}
    seen: set[int] = set()
    orbits = 0
    for c in regular:
        if c in seen:
            continue
        orbits += 1
        while c not in seen:
            seen.add(c)
            c = step[c]
            if c not in reg_set:
                raise RuntimeError("power map left the regular classes")
    return orbits


def irreducible_catalog(
    group: GroupTable,
    r: int,
    dim_cap: int,
    seed: int = 42,
    work_cap: int = 256,
    max_rounds: int = 8,
) -> Catalog:
    """All irreducibles over F_r up to dim_cap, from permutation seeds.

    Seed modules are chopped, then the found set is closed under dual and
    pairwise tensor (tensor inputs limited to product dimension work_cap;
    the cap on reported entries is dim_cap).  The search stops as soon as
    the abstract irreducible count is reached, which certifies
    completeness.
    """
    if not is_prime(r):
        raise ModuleError("catalogs are built over prime fields")
    expected = irreducible_count(group, r)
    keep_cap = max(dim_cap, 32)
    q = group.field.order
    seeds = [perm_module(group, "projective-points", r)]
    if q * q - 1 <= CHOP_DIM_CAP:
        seeds.append(perm_module(group, "nonzero-vectors", r))
    found: list[GModule] = [trivial_module(group, r)]
    pending: list[GModule] = list(seeds)

    def register(mod: GModule) -> bool:
        if mod.dim > keep_cap:
            return False
        for have in found:
            if (
                have.dim == mod.dim
                and have.class_traces == mod.class_traces
                and is_isomorphic(have, mod)
            ):
                return False
        found.append(mod)
        return True

    tensored: set[tuple[int, int]] = set()
    dualed: set[int] = set()
    for _ in range(max_rounds):
        progress = False
        for mod in pending:
            for factor in chop(mod, seed=seed):
                progress |= register(factor)
            if len(found) >= expected:
                break
        pending = []
        if len(found) >= expected:
            break
        for i in range(len(found)):
            if i not in dualed:
                dualed.add(i)
                progress |= register(dual(found[i]))
        if len(found) >= expected:
            break
        candidates = []
        for ai, bi in itertools.combinations_with_replacement(range(len(found)), 2):
            da, db = found[ai].dim, found[bi].dim
            if (ai, bi) in tensored or da == 1 or db == 1 or da * db > work_cap:
                continue
            candidates.append((da * db, ai, bi))
        candidates.sort()
        for _, ai, bi in candidates[:8]:
            tensored.add((ai, bi))
            pending.append(tensor(found[ai], found[bi]))
        if not pending and not progress:
            break
    entries = []
    for mod in found:
        if mod.dim > dim_cap:
            continue
        entries.append(
            CatalogEntry(
                module=mod,
                dim=mod.dim,
                ell=endo_dim(mod),
                faithful=mod.is_faithful,
                fingerprint=mod.fingerprint(),
            )
        )
    entries.sort(key=lambda e: (e.dim, e.ell, not e.faithful, e.fingerprint))
    complete = len(found) == expected
    return Catalog(group, r, dim_cap, tuple(entries), complete, expected)
