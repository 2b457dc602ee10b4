"""Matrix representations of the quandle algebra of a finite quandle.

A representation assigns to every pair (x, y) an invertible matrix eta[x][y]
and a matrix tau[x][y] over Z_N, subject to the four defining identities

  (1) eta[x*y][z] eta[x][y]  == eta[x*z][y*z] eta[x][z]
  (2) eta[x*y][z] tau[x][y]  == tau[x*z][y*z] eta[y][z]
  (3) tau[x*y][z]            == eta[x*z][y*z] tau[x][z] + tau[x*z][y*z] tau[y][z]
  (4) tau[x][x] + eta[x][x]  == I

checked exhaustively by verify_relations. The coefficient module is
(Z_N)^m acted on by these matrices from the left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import CheckFailed, InputError
from .groups import FiniteGroup
from .linalg import (Matrix, identity, is_invertible_mod, mat_add, mat_inv_mod,
                     mat_mul, mat_scale, mat_sub)
from .quandles import FiniteQuandle, ValidationReport


@dataclass(frozen=True)
class AlgebraRep:
    quandle: FiniteQuandle
    modulus: int
    dim: int
    eta: tuple[tuple[tuple[tuple[int, ...], ...], ...], ...]
    tau: tuple[tuple[tuple[tuple[int, ...], ...], ...], ...]
    # underlying x -> matrix assignment for conjugation-type reps; needed by
    # the degree-3 cocycle condition and by diagram chains
    rho: Optional[tuple[tuple[tuple[int, ...], ...], ...]] = field(default=None)
    label: str = ""

    def eta_at(self, x: int, y: int) -> Matrix:
        return [list(r) for r in self.eta[x][y]]

    def tau_at(self, x: int, y: int) -> Matrix:
        return [list(r) for r in self.tau[x][y]]

    def rho_at(self, x: int) -> Matrix:
        if self.rho is None:
            raise InputError("representation has no underlying group assignment")
        return [list(r) for r in self.rho[x]]

    @property
    def is_conj_type(self) -> bool:
        return self.rho is not None


def _freeze(m: Matrix):
    return tuple(tuple(row) for row in m)


def _freeze_table(t):
    return tuple(tuple(_freeze(m) for m in row) for row in t)


@dataclass(frozen=True)
class GroupRep:
    """An x -> invertible matrix assignment on a quandle, standing in for a
    module over the enveloping group."""
    quandle: FiniteQuandle
    modulus: int
    dim: int
    rho: tuple[tuple[tuple[int, ...], ...], ...]
    label: str = ""

    def rho_at(self, x: int) -> Matrix:
        return [list(r) for r in self.rho[x]]


def check_group_rep(g: GroupRep, power: int = 1) -> ValidationReport:
    """Conjugation consistency: rho(x*y) == rho(y)^m rho(x) rho(y)^-m mod N."""
    q, n = g.quandle, g.modulus
    failures = []
    for x in range(q.size):
        if not is_invertible_mod(g.rho_at(x), n):
            failures.append(f"rho({x}) is not invertible mod {n}")
            return ValidationReport(False, failures)
    for x in range(q.size):
        for y in range(q.size):
            ym = identity(g.dim)
            for _ in range(power):
                ym = mat_mul(ym, g.rho_at(y), n)
            lhs = g.rho_at(q.op(x, y))
            rhs = mat_mul(mat_mul(ym, g.rho_at(x), n), mat_inv_mod(ym, n), n)
            if lhs != rhs:
                failures.append(
                    f"rho({x}*{y}) != rho({y})^{power} rho({x}) rho({y})^-{power}")
                return ValidationReport(False, failures)
    return ValidationReport(True)


def make_group_rep(quandle: FiniteQuandle, modulus: int, rho, label: str = "",
                   power: int = 1, check: bool = True) -> GroupRep:
    g = GroupRep(quandle=quandle, modulus=modulus, dim=len(rho[0]),
                 rho=tuple(_freeze(m) for m in rho), label=label)
    if check:
        report = check_group_rep(g, power=power)
        if not report:
            raise CheckFailed("; ".join(report.failures))
    return g


def regular_group_rep(group: FiniteGroup, quandle: FiniteQuandle,
                      elements, modulus: int, power: int = 1,
                      check: bool = True) -> GroupRep:
    """GroupRep via the left-regular permutation representation of `group`,
    restricted to the group elements carried by the quandle."""
    n = group.size
    rho = []
    for e in elements:
        m = [[0] * n for _ in range(n)]
        for h in range(n):
            m[group.mul[e][h]][h] = 1
        rho.append(m)
    return make_group_rep(quandle, modulus, rho,
                          label=f"regular({group.label or n})",
                          power=power, check=check)


def permutation_rep_r3(modulus: int = 3) -> GroupRep:
    """The dihedral quandle R3 acting on (Z_N)^3 by permuting coordinates:
    element i acts as the transposition fixing coordinate i."""
    from .quandles import make_dihedral
    q = make_dihedral(3)
    rho = []
    for i in range(3):
        others = [j for j in range(3) if j != i]
        perm = {i: i, others[0]: others[1], others[1]: others[0]}
        m = [[0] * 3 for _ in range(3)]
        for src, dst in perm.items():
            m[dst][src] = 1
        rho.append(m)
    return make_group_rep(q, modulus, rho, label="perm3")


def verify_relations(rep: AlgebraRep) -> ValidationReport:
    """Exhaustive check of identities (1)-(4); reports first failure of each."""
    q, n = rep.quandle, rep.modulus
    failures = []
    for x in range(q.size):
        for y in range(q.size):
            if not is_invertible_mod(rep.eta_at(x, y), n):
                raise CheckFailed(f"eta[{x}][{y}] is not invertible mod {n}")
    found = [False] * 4
    size = q.size
    for x in range(size):
        for y in range(size):
            for z in range(size):
                xy, xz, yz = q.op(x, y), q.op(x, z), q.op(y, z)
                if not found[0]:
                    lhs = mat_mul(rep.eta_at(xy, z), rep.eta_at(x, y), n)
                    rhs = mat_mul(rep.eta_at(xz, yz), rep.eta_at(x, z), n)
                    if lhs != rhs:
                        found[0] = True
                        failures.append(f"relation (1) fails at (x,y,z)=({x},{y},{z})")
                if not found[1]:
                    lhs = mat_mul(rep.eta_at(xy, z), rep.tau_at(x, y), n)
                    rhs = mat_mul(rep.tau_at(xz, yz), rep.eta_at(y, z), n)
                    if lhs != rhs:
                        found[1] = True
                        failures.append(f"relation (2) fails at (x,y,z)=({x},{y},{z})")
                if not found[2]:
                    lhs = rep.tau_at(xy, z)
                    rhs = mat_add(mat_mul(rep.eta_at(xz, yz), rep.tau_at(x, z), n),
                                  mat_mul(rep.tau_at(xz, yz), rep.tau_at(y, z), n), n)
                    if lhs != rhs:
                        found[2] = True
                        failures.append(f"relation (3) fails at (x,y,z)=({x},{y},{z})")
        if not found[3]:
            s = mat_add(rep.tau_at(x, x), rep.eta_at(x, x), n)
            if s != identity(rep.dim):
                found[3] = True
                failures.append(f"relation (4) fails at x={x}")
    return ValidationReport(passed=not failures, failures=failures)


def make_rep(quandle: FiniteQuandle, modulus: int, eta, tau, rho=None,
             label: str = "", check: bool = True) -> AlgebraRep:
    dim = len(eta[0][0])
    rep = AlgebraRep(quandle=quandle, modulus=modulus, dim=dim,
                     eta=_freeze_table(eta), tau=_freeze_table(tau),
                     rho=None if rho is None else tuple(_freeze(m) for m in rho),
                     label=label)
    if check:
        report = verify_relations(rep)
        if not report:
            raise CheckFailed("; ".join(report.failures))
    return rep


def make_alexander_rep(quandle: FiniteQuandle, modulus: int, t,
                       dim: int = 1) -> AlgebraRep:
    """Constant tables eta = t*I, tau = (1-t)*I; t a unit scalar or matrix."""
    if isinstance(t, int):
        tmat = mat_scale(t % modulus, identity(dim), modulus)
    else:
        tmat = [list(r) for r in t]
        dim = len(tmat)
    if not is_invertible_mod(tmat, modulus):
        raise InputError(f"t is not invertible mod {modulus}")
    one_minus = mat_sub(identity(dim), tmat, modulus)
    size = quandle.size
    eta = [[tmat for _ in range(size)] for _ in range(size)]
    tau = [[one_minus for _ in range(size)] for _ in range(size)]
    return make_rep(quandle, modulus, eta, tau,
                    label=f"alexander-rep(N={modulus},t={t})", check=False)


def make_conj_rep(g: GroupRep) -> AlgebraRep:
    """eta[x][y] = rho(y), tau[x][y] = I - rho(x*y)."""
    report = check_group_rep(g)
    if not report:
        raise CheckFailed("; ".join(report.failures))
    q, n, dim = g.quandle, g.modulus, g.dim
    eta = [[g.rho_at(y) for y in range(q.size)] for _ in range(q.size)]
    tau = [[mat_sub(identity(dim), g.rho_at(q.op(x, y)), n)
            for y in range(q.size)] for x in range(q.size)]
    return make_rep(q, n, eta, tau, rho=[g.rho_at(x) for x in range(q.size)],
                    label=f"conj-rep({g.label})", check=False)


def make_wada_rep(g: GroupRep, variant) -> AlgebraRep:
    """Free-derivative tables for the Wada-type crossing operations.

    variant: an integer m for w(x,y) = y^m x y^-m over a conjugation-power
    quandle, or the string "core" for w(x,y) = y x^-1 y over a core quandle.
    The output is accepted only if it passes verify_relations.
    """
    q, n, dim = g.quandle, g.modulus, g.dim
    size = q.size
    eta = [[None] * size for _ in range(size)]
    tau = [[None] * size for _ in range(size)]
    if variant == "core":
        for x in range(size):
            rx_inv = mat_inv_mod(g.rho_at(x), n)
            for y in range(size):
                prod = mat_mul(g.rho_at(y), rx_inv, n)
                eta[x][y] = mat_scale(-1, prod, n)
                tau[x][y] = mat_add(identity(dim), prod, n)
    elif isinstance(variant, int) and variant >= 1:
        m = variant
        for y in range(size):
            ry = g.rho_at(y)
            ry_inv = mat_inv_mod(ry, n)
            powers = [identity(dim)]
            for _ in range(m):
                powers.append(mat_mul(powers[-1], ry, n))
            inv_powers = [identity(dim)]
            for _ in range(m):
                inv_powers.append(mat_mul(inv_powers[-1], ry_inv, n))
            geo = identity(dim)
            for j in range(1, m):
                geo = mat_add(geo, powers[j], n)
            inv_geo = inv_powers[1]
            for j in range(2, m + 1):
                inv_geo = mat_add(inv_geo, inv_powers[j], n)
            for x in range(size):
                eta[x][y] = powers[m]
                tau[x][y] = mat_sub(
                    geo, mat_mul(mat_mul(powers[m], g.rho_at(x), n), inv_geo, n), n)
    else:
        raise InputError(f"unknown wada variant {variant!r}")
    rep = make_rep(q, n, eta, tau, rho=[g.rho_at(x) for x in range(size)],
                   label=f"wada-rep({variant},{g.label})", check=False)
    report = verify_relations(rep)
    if not report:
        raise CheckFailed(
            "wada tables do not satisfy the algebra relations: "
            + "; ".join(report.failures))
    return rep


def bar(rep: AlgebraRep, x: int, y: int) -> tuple[Matrix, Matrix]:
    """The negative-crossing coefficients:
    eta_bar = eta[x bar* y][y]^-1, tau_bar = -eta_bar tau[x bar* y][y]."""
    q, n = rep.quandle, rep.modulus
    z = q.inv_op(x, y)
    eta_bar = mat_inv_mod(rep.eta_at(z, y), n)
    tau_bar = mat_scale(-1, mat_mul(eta_bar, rep.tau_at(z, y), n), n)
    return eta_bar, tau_bar
