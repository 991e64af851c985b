"""Orbit decomposition and normal-Sylow covering classification.

Vectors of a module over a prime field are packed into integers base r
(digit 0 least significant).  The sweep kernel labels every vector; all
per-orbit data (stabilizers, covering flags) is computed once on the
minimal-key representative and propagated, since the defining conditions
are conjugation-invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from chardeg.kernels import orbit_sweep
from chardeg.groups import CapExceeded, Subgroup, contains_normal_full_sylow
from chardeg.modules import GModule, ModuleError

ORBIT_SPACE_CAP = 3**12


@dataclass(frozen=True)
class Orbit:
    rep_key: int
    rep: tuple[int, ...]
    size: int
    stab_order: int
    flags: dict

    def to_json(self) -> dict:
        return {
            "rep": list(self.rep),
            "size": self.size,
            "stab_order": self.stab_order,
            "flags": dict(self.flags),
        }


@dataclass(frozen=True)
class OrbitReport:
    module: GModule
    orbits: tuple[Orbit, ...]
    summary: dict

    def sizes(self) -> list[int]:
        return sorted(o.size for o in self.orbits)

    def to_json(self) -> dict:
        return {
            "space_order": self.module.field.p**self.module.dim,
            "orbits": [o.to_json() for o in self.orbits],
            "summary": dict(self.summary),
        }


def _check_orbit_module(m: GModule) -> None:
    if not m.field.is_prime_field:
        raise ModuleError("orbit enumeration needs a prime-field module")
    if m.field.p**m.dim > ORBIT_SPACE_CAP:
        raise CapExceeded(f"vector space of order {m.field.p}**{m.dim} exceeds {ORBIT_SPACE_CAP}")


def unpack_key(key: int, r: int, dim: int) -> tuple[int, ...]:
    out = []
    for _ in range(dim):
        out.append(key % r)
        key //= r
    return tuple(out)


def pack_vector(v, r: int) -> int:
    key = 0
    for digit in reversed(list(v)):
        key = key * r + int(digit)
    return key


def stabilizer(m: GModule, v) -> Subgroup:
    """{g : image(g) v = v} as a subgroup of the acting group."""
    vec = np.asarray(v, dtype=np.int64)
    imgs = m.element_images
    fixed = ((imgs @ vec) % m.field.p == vec).all(axis=1)
    return Subgroup(m.group, tuple(int(i) for i in np.flatnonzero(fixed)))


def orbit_decompose(m: GModule) -> OrbitReport:
    """Complete orbit decomposition with stabilizer orders, no flags."""
    return _decompose(m, {})


def _decompose(m: GModule, sylow_primes: dict[str, int]) -> OrbitReport:
    _check_orbit_module(m)
    r = m.field.p
    gens = np.stack(m.gen_images)
    labels, reps, sizes = orbit_sweep(gens, r, m.dim)
    group = m.group
    orbits = []
    nonzero_counts = {name: 0 for name in sylow_primes}
    for oid, (rep_key, size) in enumerate(zip(reps.tolist(), sizes.tolist())):
        vec = unpack_key(rep_key, r, m.dim)
        stab = stabilizer(m, vec)
        if stab.order * size != group.order:
            raise RuntimeError("orbit-stabilizer identity failed")
        flags = {}
        for name, prime in sylow_primes.items():
            flags[name] = contains_normal_full_sylow(group, stab, prime)
            if flags[name] and rep_key != 0:
                nonzero_counts[name] += size
        orbits.append(Orbit(rep_key, vec, size, stab.order, flags))
    summary: dict = {"orbit_count": len(orbits), "sizes": sorted(s for s in sizes.tolist())}
    if sylow_primes:
        total_nonzero = r**m.dim - 1
        summary["set_primes"] = dict(sylow_primes)
        summary["nonzero_counts"] = nonzero_counts
        covers = {}
        names = list(sylow_primes)
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                a, b = names[i], names[j]
                covered = sum(
                    o.size
                    for o in orbits
                    if o.rep_key != 0 and (o.flags[a] or o.flags[b])
                )
                covers[f"{a}+{b}"] = covered == total_nonzero
        for name in names:
            covers[name] = nonzero_counts[name] == total_nonzero
        summary["covers_nonzero"] = covers
        summary["equalities"] = sorted(k for k, v in covers.items() if v)
    return OrbitReport(m, tuple(orbits), summary)


def covering_classify(m: GModule, r: int | None = None, s: int | None = None) -> OrbitReport:
    """Flag orbits by normal full Sylow subgroups in their stabilizers.

    Flag "minus" uses the odd prime r dividing q - 1, "plus" the odd
    prime s dividing q + 1, "char" the defining characteristic.  The
    summary records which unions of the flagged sets cover the nonzero
    vectors.
    """
    q = m.group.field.order
    t = m.group.field.p
    primes = {}
    if r is not None:
        if r % 2 == 0 or (q - 1) % r != 0:
            raise ModuleError(f"r={r} must be an odd prime divisor of q-1={q-1}")
        primes["minus"] = r
    if s is not None:
        if s % 2 == 0 or (q + 1) % s != 0:
            raise ModuleError(f"s={s} must be an odd prime divisor of q+1={q+1}")
        primes["plus"] = s
    primes["char"] = t
    return _decompose(m, primes)


def sylow_centralizer_condition(m: GModule, q: int) -> bool:
    """True iff q divides the index of the action kernel and every
    nonzero vector's stabilizer contains a normal full Sylow q-subgroup."""
    _check_orbit_module(m)
    group = m.group
    kernel_order = len(m.kernel_indices)
    if (group.order // kernel_order) % q != 0:
        return False
    report = _decompose(m, {"q": q})
    return all(o.flags["q"] for o in report.orbits if o.rep_key != 0)


def stabilizer_prime_escape(m: GModule, r: int) -> bool:
    """True iff some nonzero vector's stabilizer has order prime to r.

    An element of order r exists in the stabilizer exactly when r
    divides the stabilizer order (Cauchy), so this detects vectors whose
    stabilizer avoids order-r elements.
    """
    report = orbit_decompose(m)
    return any(o.rep_key != 0 and o.stab_order % r != 0 for o in report.orbits)


def has_regular_orbit(m: GModule) -> bool:
    """True iff some orbit has the full group order as its length.

    A nontrivial group acting through a kernel can never have one, which
    matches the faithful absolutely irreducible setting this feeds.
    """
    report = orbit_decompose(m)
    return any(o.size == m.group.order for o in report.orbits)
