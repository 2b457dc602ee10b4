"""The two link invariants at closed-braid scale.

Both are multisets indexed by the quandle colorings of the closure: the
cocycle state sum collects signed, path-twisted cocycle values at the
crossings, and the module invariant collects the cokernels of the colored
matrices minus the identity.  Multisets are kept sorted so that equality
and serialization are canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import AlgebraRep
from .braids import (BraidWord, colored_matrix, colorings_of_closure,
                     crossing_data, diagram_two_chain)
from .errors import CheckFailed, GuardExceeded, InputError
from .homology import Cochain, ComplexConfig, is_cocycle_2
from .linalg import cokernel_mod, mat_vec
from .quandles import FiniteQuandle, ValidationReport, verify_axioms

EXTENSION_GUARD = 64


@dataclass
class InvariantMultiset:
    entries: tuple            # sorted tuples of ints: one G-vector per coloring
    modulus: int
    dim: int
    metadata: dict = field(default_factory=dict)

    def support(self):
        return set(self.entries)


@dataclass
class ModuleInvariant:
    entries: tuple            # sorted invariant-factor tuples, one per coloring
    metadata: dict = field(default_factory=dict)


def boltzmann_weight(rep: AlgebraRep, kappa: Cochain, w: BraidWord, coloring,
                     crossing: int, check: bool = True) -> list[int]:
    """eps(r) * A_r * kappa(x, y) at the given crossing of the colored word."""
    if check:
        cfg = ComplexConfig(rep=rep, variant="quandle")
        if not is_cocycle_2(cfg, kappa):
            raise CheckFailed("cochain is not a generalized quandle 2-cocycle")
    data = crossing_data(rep, w, coloring)
    if not (0 <= crossing < len(data)):
        raise InputError(f"crossing index {crossing} out of range")
    eps, path, x, y = data[crossing]
    N = rep.modulus
    vec = mat_vec(path, kappa.value((x, y)), N)
    return [(eps * c) % N for c in vec]


def _weight_sum(rep: AlgebraRep, kappa: Cochain, data) -> tuple[int, ...]:
    N = rep.modulus
    total = [0] * rep.dim
    for eps, path, x, y in data:
        vec = mat_vec(path, kappa.value((x, y)), N)
        total = [(t + eps * c) % N for t, c in zip(total, vec)]
    return tuple(total)


def _chain_pairing(rep: AlgebraRep, kappa: Cochain, chain: dict) -> tuple[int, ...]:
    N = rep.modulus
    total = [0] * rep.dim
    for key, coef in chain.items():
        vec = mat_vec(coef, kappa.value(key), N)
        total = [(t + c) % N for t, c in zip(total, vec)]
    return tuple(total)


def cocycle_invariant(q: FiniteQuandle, rep: AlgebraRep, kappa: Cochain,
                      w: BraidWord, jobs: int = 1, check: bool = True,
                      debug_pairing: bool = False) -> InvariantMultiset:
    """State-sum multiset: one weight sum per closure coloring."""
    if check:
        cfg = ComplexConfig(rep=rep, variant="quandle")
        if not is_cocycle_2(cfg, kappa):
            raise CheckFailed("cochain is not a generalized quandle 2-cocycle")
    entries = []
    for coloring in colorings_of_closure(q, w, jobs=jobs):
        data = crossing_data(rep, w, coloring)
        total = _weight_sum(rep, kappa, data)
        if debug_pairing:
            chain = diagram_two_chain(rep, w, coloring)
            assert total == _chain_pairing(rep, kappa, chain), \
                "per-crossing sum disagrees with the chain pairing"
        entries.append(total)
    meta = {"quandle": q.label, "rep": rep.label, "strands": w.strands,
            "letters": list(w.letters)}
    return InvariantMultiset(entries=tuple(sorted(entries)), modulus=rep.modulus,
                             dim=rep.dim, metadata=meta)


def module_invariant(q: FiniteQuandle, rep: AlgebraRep,
                     w: BraidWord, jobs: int = 1) -> ModuleInvariant:
    """Multiset of invariant-factor lists of G^k / Im(M(w, x) - I)."""
    N = rep.modulus
    entries = []
    for coloring in colorings_of_closure(q, w, jobs=jobs):
        m = colored_matrix(rep, w, coloring)
        for i in range(len(m)):
            m[i][i] = (m[i][i] - 1) % N
        entries.append(tuple(cokernel_mod(m, N)))
    meta = {"quandle": q.label, "rep": rep.label, "strands": w.strands,
            "letters": list(w.letters)}
    return ModuleInvariant(entries=tuple(sorted(entries)), metadata=meta)


def dynamical_extension(q: FiniteQuandle, rep: AlgebraRep,
                        kappa: Cochain | None = None,
                        guard: int = EXTENSION_GUARD):
    """Quandle structure on G x X:
    (a, x) * (b, y) = (eta[x][y] a + tau[x][y] b + kappa(x, y), x * y).

    Returns (table, report, quandle-or-None); the quandle is built only when
    the axioms pass.
    """
    N, m = rep.modulus, rep.dim
    vectors = [list(v) for v in itertools.product(range(N), repeat=m)]
    vindex = {tuple(v): i for i, v in enumerate(vectors)}
    total = len(vectors) * q.size
    if total > guard:
        raise GuardExceeded(f"extension size {total} exceeds guard {guard}")

    def pair_index(a_idx: int, x: int) -> int:
        return a_idx * q.size + x

    table = [[0] * total for _ in range(total)]
    for ai, a in enumerate(vectors):
        for x in range(q.size):
            row = table[pair_index(ai, x)]
            for bi, b in enumerate(vectors):
                for y in range(q.size):
                    val = mat_vec(rep.eta_at(x, y), a, N)
                    tb = mat_vec(rep.tau_at(x, y), b, N)
                    val = [(s + t) % N for s, t in zip(val, tb)]
                    if kappa is not None:
                        val = [(s + t) % N
                               for s, t in zip(val, kappa.value((x, y)))]
                    row[pair_index(bi, y)] = pair_index(vindex[tuple(val)],
                                                        q.op(x, y))
    report = verify_axioms(table)
    quandle = None
    if report:
        quandle = FiniteQuandle(tuple(tuple(r) for r in table),
                                label=f"ext({q.label},{rep.label})")
    return table, report, quandle


def multiset_contained(a: InvariantMultiset, b: InvariantMultiset) -> bool:
    """Containment after dropping multiplicities (support inclusion)."""
    if (a.modulus, a.dim) != (b.modulus, b.dim):
        raise InputError("multisets take values in different groups")
    return a.support() <= b.support()
