"""Fully enumerated matrix groups SL2(q) and their subgroup queries.

A GroupTable stores every element as a 2x2 matrix of scalar indices,
closed by breadth-first search from a fixed generator set.  The BFS
parent links double as generator words, so any representation defined on
the generators extends to all elements by replaying the closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from chardeg.fields import Field, field_make
from chardeg.numtheory import factorize, p_part, prime_power_split

ENUMERATION_CAP = 10**6
SYLOW_RESTARTS = 64


class GroupError(RuntimeError):
    """A verified invariant failed or the arguments are unusable."""


class CapExceeded(RuntimeError):
    """An enumeration or size cap would be exceeded."""


class BudgetExceeded(RuntimeError):
    """A randomized search ran out of restarts."""


def _batch_mul(F: Field, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Product of stacks of 2x2 matrices (broadcasting over the stack axis)."""
    if F.is_prime_field:
        return np.einsum("...ik,...kj->...ij", A, B) % F.p
    add_t, mul_t = F.tables[0], F.tables[1]
    t0 = mul_t[A[..., :, 0:1], B[..., 0:1, :]]
    t1 = mul_t[A[..., :, 1:2], B[..., 1:2, :]]
    return add_t[t0, t1]


def _batch_inv_det1(F: Field, A: np.ndarray) -> np.ndarray:
    """Inverse of stacks of 2x2 matrices of determinant 1 (adjugate)."""
    neg = F.tables[2] if not F.is_prime_field else None
    out = np.empty_like(A)
    out[..., 0, 0] = A[..., 1, 1]
    out[..., 1, 1] = A[..., 0, 0]
    if F.is_prime_field:
        out[..., 0, 1] = (-A[..., 0, 1]) % F.p
        out[..., 1, 0] = (-A[..., 1, 0]) % F.p
    else:
        out[..., 0, 1] = neg[A[..., 0, 1]]
        out[..., 1, 0] = neg[A[..., 1, 0]]
    return out


class GroupTable:
    """An enumerated 2x2 matrix group over a small finite field."""

    def __init__(self, field: Field, gens: np.ndarray):
        self.field = field
        self.dim = 2
        self.gens = np.ascontiguousarray(gens, dtype=np.int64)
        self._close()
        self._cache: dict = {}

    # -- closure --------------------------------------------------------------

    def _key(self, m) -> int:
        q = self.field.order
        return ((int(m[0, 0]) * q + int(m[0, 1])) * q + int(m[1, 0])) * q + int(m[1, 1])

    def _close(self) -> None:
        F = self.field
        if F.is_prime_field:
            p = F.p

            def mul(a, b):
                return (a @ b) % p

        else:
            add_l = F.tables[0]
            mul_l = F.tables[1]

            def mul(a, b):
                return add_l[mul_l[a[:, 0:1], b[0:1, :]], mul_l[a[:, 1:2], b[1:2, :]]]

        ident = np.eye(2, dtype=np.int64)
        elems = [ident]
        key_index = {self._key(ident): 0}
        parent = [-1]
        parent_gen = [-1]
        gens = [np.ascontiguousarray(g) for g in self.gens]
        pos = 0
        while pos < len(elems):
            cur = elems[pos]
            for gi, g in enumerate(gens):
                prod = mul(cur, g)
                k = self._key(prod)
                if k not in key_index:
                    key_index[k] = len(elems)
                    elems.append(prod)
                    parent.append(pos)
                    parent_gen.append(gi)
                    if len(elems) > ENUMERATION_CAP:
                        raise CapExceeded(f"closure exceeded the cap {ENUMERATION_CAP}")
            pos += 1
        self.elems = np.ascontiguousarray(np.stack(elems), dtype=np.int64)
        self.elems.flags.writeable = False
        self.key_index = key_index
        self.parent = np.asarray(parent, dtype=np.int64)
        self.parent_gen = np.asarray(parent_gen, dtype=np.int64)

    # -- basic queries ----------------------------------------------------------

    @property
    def order(self) -> int:
        return int(self.elems.shape[0])

    def __len__(self) -> int:
        return self.order

    def index_of(self, mat: np.ndarray) -> int:
        return self.key_index[self._key(np.asarray(mat, dtype=np.int64))]

    def mult(self, i: int, j: int) -> int:
        F = self.field
        a, b = self.elems[i], self.elems[j]
        if F.is_prime_field:
            return self.index_of((a @ b) % F.p)
        return self.index_of(_batch_mul(F, a, b))

    @cached_property
    def inverse(self) -> np.ndarray:
        """inverse[i] = index of elems[i]^-1."""
        inv_mats = _batch_inv_det1(self.field, self.elems)
        return self.indices_of_matrices(inv_mats)

    def indices_of_matrices(self, mats: np.ndarray) -> np.ndarray:
        q = self.field.order
        keys = ((mats[:, 0, 0] * q + mats[:, 0, 1]) * q + mats[:, 1, 0]) * q + mats[:, 1, 1]
        return np.asarray([self.key_index[int(k)] for k in keys], dtype=np.int64)

    def word(self, i: int) -> tuple[int, ...]:
        """Generator word (indices into gens) whose product is element i."""
        out = []
        while i != 0:
            out.append(int(self.parent_gen[i]))
            i = int(self.parent[i])
        return tuple(reversed(out))

    @cached_property
    def element_orders(self) -> np.ndarray:
        F = self.field
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        orders[0] = 1
        ident = np.eye(2, dtype=np.int64)
        power = self.elems.copy()
        alive = np.flatnonzero(orders == 0)
        step = 1
        while alive.size:
            done = alive[(power[alive] == ident).all(axis=(1, 2))]
            orders[done] = step
            alive = np.flatnonzero(orders == 0)
            if alive.size:
                power[alive] = _batch_mul(F, power[alive], self.elems[alive])
                step += 1
            if step > 4 * self.order:
                raise GroupError("element order computation did not terminate")
        return orders

    @cached_property
    def conjugacy_classes(self) -> np.ndarray:
        """class_id per element; ids numbered by least member position."""
        n = self.order
        cls = np.full(n, -1, dtype=np.int64)
        gen_idx = self.indices_of_matrices(self.gens)
        nxt = 0
        for start in range(n):
            if cls[start] >= 0:
                continue
            cls[start] = nxt
            stack = [start]
            while stack:
                x = stack.pop()
                for g in gen_idx:
                    y = self.mult(self.mult(int(self.inverse[g]), x), int(g))
                    if cls[y] < 0:
                        cls[y] = nxt
                        stack.append(y)
            nxt += 1
        return cls

    def conjugate_index(self, x: int, g: int) -> int:
        """Index of g^-1 x g."""
        return self.mult(self.mult(int(self.inverse[g]), x), g)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "generators": [[int(x) for x in g.reshape(-1)] for g in self.gens],
        }


def group_from_json(data: dict) -> GroupTable:
    from chardeg.fields import field_from_json

    F = field_from_json(data["field"])
    gens = np.asarray(data["generators"], dtype=np.int64).reshape(-1, 2, 2)
    return GroupTable(F, gens)


def sl2_group(q: int) -> GroupTable:
    """Enumerate SL2(q) from elementary and diagonal generators.

    The verified order q(q^2 - 1) is a hard postcondition; a mismatch
    means the generator set does not reach the whole group for this q.
    """
    if q < 4 or q > 49:
        raise CapExceeded(f"sl2_group supports 4 <= q <= 49, got {q}")
    p, k = prime_power_split(q)
    F = field_make(p, k)
    w = F.generator
    one = 1
    gens = np.asarray(
        [
            [[one, one], [0, one]],
            [[one, 0], [one, one]],
            [[one, w], [0, one]],
            [[w, 0], [0, F.inv(w)]],
        ],
        dtype=np.int64,
    )
    g = GroupTable(F, gens)
    expected = q * (q * q - 1)
    if g.order != expected:
        raise GroupError(f"SL2({q}) closure gave order {g.order}, expected {expected}")
    return g


# -- subgroups ---------------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    parent: GroupTable
    members: tuple[int, ...]
    gens: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))
        object.__setattr__(self, "_member_set", frozenset(self.members))

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, idx: int) -> bool:
        return idx in self._member_set

    def contains_subgroup(self, other: Subgroup) -> bool:
        return self._member_set >= other._member_set

    def generating_set(self) -> tuple[int, ...]:
        if self.gens:
            return self.gens
        g = self.parent
        have = {0}
        chosen: list[int] = []
        for m in self.members:
            if m in have:
                continue
            chosen.append(m)
            have = set(_close_indices(g, [*chosen]))
            if len(have) == self.order:
                break
        object.__setattr__(self, "gens", tuple(chosen))
        return self.gens


def _close_indices(group: GroupTable, gen_positions) -> list[int]:
    members = {0}
    queue = [0]
    gen_positions = [g for g in gen_positions if g != 0]
    for g in gen_positions:
        if g not in members:
            members.add(g)
            queue.append(g)
    pos = 0
    while pos < len(queue):
        x = queue[pos]
        pos += 1
        for g in gen_positions:
            y = group.mult(x, g)
            if y not in members:
                members.add(y)
                queue.append(y)
            z = group.mult(g, x)
            if z not in members:
                members.add(z)
                queue.append(z)
    return sorted(members)


def subgroup_from_gens(group: GroupTable, gen_positions) -> Subgroup:
    members = _close_indices(group, list(gen_positions))
    return Subgroup(group, tuple(members), tuple(sorted(set(int(g) for g in gen_positions) - {0})))


def trivial_subgroup(group: GroupTable) -> Subgroup:
    return Subgroup(group, (0,))


def whole_group(group: GroupTable) -> Subgroup:
    return Subgroup(group, tuple(range(group.order)))


def is_abelian(sub: Subgroup) -> bool:
    g = sub.parent
    gens = sub.generating_set()
    return all(g.mult(a, b) == g.mult(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :])


def cyclic_generator(sub: Subgroup) -> int | None:
    orders = sub.parent.element_orders
    for m in sub.members:
        if orders[m] == sub.order:
            return m
    return None


def sylow(group: GroupTable, p: int, seed: int = 42) -> Subgroup:
    """A Sylow p-subgroup, found by closing random p-element parts.

    Deterministic for a fixed seed; raises BudgetExceeded after
    SYLOW_RESTARTS failed closures (never reached at this scale).
    """
    full = p_part(group.order, p)
    if full == 1:
        raise GroupError(f"{p} does not divide the group order {group.order}")
    orders = group.element_orders
    rng = np.random.default_rng(seed)
    for _ in range(SYLOW_RESTARTS):
        gens: list[int] = []
        members = [0]
        for _ in range(SYLOW_RESTARTS):
            if len(members) == full:
                return Subgroup(group, tuple(members), tuple(gens))
            x = int(rng.integers(group.order))
            o = int(orders[x])
            op = p_part(o, p)
            if op == 1:
                continue
            y = _power_index(group, x, o // op)
            if y == 0 or y in members:
                continue
            cand = _close_indices(group, gens + [y])
            if len(cand) > full or p_part(len(cand), p) != len(cand):
                break  # overshot or left the p-group lattice: restart
            gens.append(y)
            members = cand
    raise BudgetExceeded(f"sylow({p}) search budget exhausted")


def _power_index(group: GroupTable, x: int, n: int) -> int:
    out = 0
    base = x
    while n:
        if n & 1:
            out = group.mult(out, base)
        base = group.mult(base, base)
        n >>= 1
    return out


def sylow_char_subgroups(group: GroupTable) -> list[Subgroup]:
    """All Sylow t-subgroups of SL2(t^a), t the field characteristic.

    Each nontrivial unipotent element fixes a unique projective point;
    grouping by that point partitions them into the q + 1 Sylow
    t-subgroups.
    """
    F = group.field
    t = F.p
    orders = group.element_orders
    buckets: dict[tuple[int, int], list[int]] = {}
    for i in range(group.order):
        o = int(orders[i])
        if o == 1 or p_part(o, t) != o:
            continue
        m = group.elems[i]
        # eigenvector for eigenvalue 1 of a unipotent 2x2 matrix
        a = F.sub(int(m[0, 0]), 1)
        b = int(m[0, 1])
        c = int(m[1, 0])
        d = F.sub(int(m[1, 1]), 1)
        if a == 0 and b == 0:
            vec = (F.neg(d), c) if (c or d) else (1, 0)
        else:
            vec = (F.neg(b), a)
        # normalize the projective point
        if vec[0] != 0:
            s = F.inv(vec[0])
            point = (1, F.mul(s, vec[1]))
        else:
            point = (0, 1)
        buckets.setdefault(point, []).append(i)
    subs = []
    for point in sorted(buckets):
        members = tuple(sorted([0] + buckets[point]))
        subs.append(Subgroup(group, members))
    return subs


def normalizer(group: GroupTable, sub: Subgroup) -> Subgroup:
    """{x : sub^x = sub}, by brute force over all elements."""
    F = group.field
    gens = sub.generating_set()
    if not gens:
        return whole_group(group)
    n = group.order
    member_mask = np.zeros(n, dtype=bool)
    member_mask[list(sub.members)] = True
    ok = np.ones(n, dtype=bool)
    inv_mats = group.elems[group.inverse]
    for s in gens:
        smat = group.elems[s]
        conj = _batch_mul(F, _batch_mul(F, inv_mats, smat), group.elems)
        idx = group.indices_of_matrices(conj)
        ok &= member_mask[idx]
    return Subgroup(group, tuple(int(i) for i in np.flatnonzero(ok)))


def _sylow_membership(group: GroupTable) -> tuple[list[Subgroup], np.ndarray]:
    """The Sylow t-subgroups plus an element -> Sylow index map."""
    if "sylow_map" not in group._cache:
        sylows = sylow_char_subgroups(group)
        owner = np.full(group.order, -1, dtype=np.int64)
        for i, T in enumerate(sylows):
            for m in T.members:
                if m != 0:
                    owner[m] = i
        group._cache["sylow_map"] = (sylows, owner)
    return group._cache["sylow_map"]


def count_normalized_sylow(group: GroupTable, r_sub: Subgroup, t: int) -> int:
    """Number of Sylow t-subgroups whose normalizer contains r_sub.

    Conjugation permutes the Sylow subgroups, so T^g = T exactly when
    one nontrivial member of T lands back inside T.
    """
    if t != group.field.p:
        raise GroupError("t must be the defining characteristic")
    if r_sub.order == 1:
        raise GroupError("r_sub must be nontrivial")
    fac = factorize(r_sub.order)
    if len(fac) != 1:
        raise GroupError("r_sub must be an r-group")
    (r_prime,) = fac
    if r_prime % 2 == 0 or (group.field.order - 1) % r_prime != 0:
        raise GroupError("the prime of r_sub must be odd and divide q - 1")
    sylows, owner = _sylow_membership(group)
    gens = r_sub.generating_set()
    count = 0
    for i, T in enumerate(sylows):
        probe = T.members[1]
        if all(owner[group.conjugate_index(probe, g)] == i for g in gens):
            count += 1
    return count


def contains_normal_full_sylow(group: GroupTable, sub: Subgroup, r: int) -> bool:
    """True iff sub has a normal subgroup that is a full Sylow r-subgroup.

    Equivalent test: the r-elements of sub number exactly the r-part of
    the group order and form a subgroup (then that set is the unique,
    hence normal, Sylow r-subgroup of sub, of full order).
    """
    full = p_part(group.order, r)
    if full == 1:
        return True
    if sub.order % full != 0:
        return False
    orders = group.element_orders
    relems = [m for m in sub.members if full % int(orders[m]) == 0]
    if len(relems) != full:
        return False
    rset = set(relems)
    return all(group.mult(x, y) in rset for x in relems for y in relems)


def stabilizer_structure(sub: Subgroup) -> tuple[int, tuple[tuple[int, int], ...]]:
    """(order, element-order multiset) fingerprint for table matching."""
    orders = sub.parent.element_orders
    counts: dict[int, int] = {}
    for m in sub.members:
        o = int(orders[m])
        counts[o] = counts.get(o, 0) + 1
    return sub.order, tuple(sorted(counts.items()))


def center(group: GroupTable) -> Subgroup:
    """Elements commuting with every generator."""
    gen_idx = group.indices_of_matrices(group.gens)
    members = [
        i
        for i in range(group.order)
        if all(group.mult(i, g) == group.mult(g, i) for g in gen_idx)
    ]
    return Subgroup(group, tuple(members))
