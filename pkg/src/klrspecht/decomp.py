"""Level-two decomposition data over the linear quiver."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cartan import Multicharge, Quiver, as_multicharge
from .filtration import general_layers
from .partitions import Multipartition, as_multipartition, dominates, multipartitions, residue_content
from .tableaux import Tableau, std_mu

LINEAR = Quiver.linear()


def _part(p: Sequence[int], r: int) -> int:
    return p[r - 1] if 1 <= r <= len(p) else 0


def is_kleshchev(mu, charges) -> bool:
    """``mu^(l)_{r + k_l - k_{l+1}} <= mu^(l+1)_r`` for all ``l`` and ``r >= 1``."""
    mu = as_multipartition(mu)
    kappa = as_multicharge(charges)
    if kappa.level != mu.level:
        raise ValueError(f"multicharge {kappa} does not match the level of {mu}")
    if any(a < b for a, b in zip(kappa, kappa.entries[1:])):
        raise ValueError(f"multicharge {kappa} must be weakly decreasing")
    for l in range(mu.level - 1):
        upper, lower = mu.components[l], mu.components[l + 1]
        shift = kappa[l] - kappa[l + 1]
        for r in range(1, len(upper) + 1):
            if _part(upper, r + shift) > _part(lower, r):
                return False
    return True


@dataclass(frozen=True)
class DecompQuery:
    lam: Multipartition
    mu: Multipartition
    charges: Multicharge

    def __post_init__(self):
        object.__setattr__(self, "lam", as_multipartition(self.lam))
        object.__setattr__(self, "mu", as_multipartition(self.mu))
        object.__setattr__(self, "charges", as_multicharge(self.charges))
        if self.lam.level != 2 or self.mu.level != 2 or self.charges.level != 2:
            raise ValueError("decomposition queries are for level two")
        if self.lam.size != self.mu.size:
            raise ValueError(f"size mismatch: {self.lam} vs {self.mu}")
        if self.charges[0] < self.charges[1]:
            raise ValueError(f"multicharge {self.charges} must satisfy kappa_1 >= kappa_2")

    @property
    def same_block(self) -> bool:
        return residue_content(self.lam, LINEAR, self.charges) == residue_content(self.mu, LINEAR, self.charges)


def std_mu_set(query: DecompQuery) -> list[Tableau]:
    if not query.same_block:
        return []
    return std_mu(query.lam, query.mu, LINEAR, query.charges)


def decomposition_number(query: DecompQuery) -> int:
    """Ungraded ``[S^lam : D^mu]`` as ``#Std^mu(lam)``, for Kleshchev ``mu``."""
    if not is_kleshchev(query.mu, query.charges):
        raise ValueError(f"{query.mu} is not Kleshchev for charges {query.charges}")
    found = std_mu_set(query)
    if len(found) > 1:
        raise RuntimeError(f"#Std^mu(lam) = {len(found)} > 1 for lam={query.lam}, mu={query.mu}")
    return len(found)


def unique_tableau(query: DecompQuery) -> Tableau | None:
    found = std_mu_set(query)
    if len(found) > 1:
        raise RuntimeError(f"#Std^mu(lam) = {len(found)} > 1 for lam={query.lam}, mu={query.mu}")
    return found[0] if found else None


def block_of(shape, charges) -> list[Multipartition]:
    """All bipartitions in the block of ``shape`` for the given charges."""
    shape = as_multipartition(shape)
    alpha = residue_content(shape, LINEAR, charges)
    return [nu for nu in multipartitions(shape.size, shape.level) if residue_content(nu, LINEAR, charges) == alpha]


@dataclass
class ChainReport:
    shape: tuple[int, ...]
    chain: list[Multipartition] = field(default_factory=list)
    checked: int = 0
    deviations: list[str] = field(default_factory=list)
    skipped: str | None = None

    @property
    def ok(self) -> bool:
        return self.skipped is None and not self.deviations


def verify_decomposition_chain(lam, x: int = 0, max_n: int = 12) -> ChainReport:
    """For the first resolution ``mu_1, ..., mu_k`` of ``lam``: ``d(mu_j, nu) = 1``
    exactly for ``nu`` in ``{mu_j, mu_{j+1}}`` among Kleshchev ``nu`` in the block."""
    lam = tuple(lam)
    report = ChainReport(lam)
    if len(lam) < 2:
        report.skipped = "one-row shape has no resolution"
        return report
    if sum(lam) > max_n:
        report.skipped = f"SKIPPED(cap): n = {sum(lam)} exceeds max-n {max_n}"
        return report
    layer = general_layers(lam, x)[1]
    chain = list(layer.resolution.terms)
    report.chain = chain
    charges = layer.charges
    kleshchev = [nu for nu in block_of(chain[0], charges) if is_kleshchev(nu, charges)]
    for j, mu_j in enumerate(chain):
        expected = {mu_j} | ({chain[j + 1]} if j + 1 < len(chain) else set())
        for nu in kleshchev:
            d = decomposition_number(DecompQuery(mu_j, nu, charges))
            report.checked += 1
            if d != (1 if nu in expected else 0):
                report.deviations.append(f"d({mu_j}, {nu}) = {d}")
    return report


@dataclass
class UniquenessScan:
    max_n: int
    pairs: int = 0
    violations: list[tuple[Multipartition, Multipartition, Multicharge, int]] = field(default_factory=list)
    dominance_failures: list[tuple[Multipartition, Multipartition, Multicharge]] = field(default_factory=list)


def scan_std_mu_unique(max_n: int = 8, shifts: Sequence[int] | None = None) -> UniquenessScan:
    """Count ``Std^mu(lam)`` for every level-two pair in a common block.

    Charges are ``(d, 0)``; ``d`` runs over ``0..n+1`` unless ``shifts`` is
    given (larger ``d`` behaves like ``d = n+1``).
    """
    scan = UniquenessScan(max_n)
    for n in range(1, max_n + 1):
        bips = list(multipartitions(n, 2))
        for d in (shifts if shifts is not None else range(n + 2)):
            kappa = Multicharge((d, 0))
            blocks: dict = {}
            for nu in bips:
                blocks.setdefault(residue_content(nu, LINEAR, kappa), []).append(nu)
            for members in blocks.values():
                for lam in members:
                    for mu in members:
                        scan.pairs += 1
                        count = len(std_mu(lam, mu, LINEAR, kappa))
                        if count > 1:
                            scan.violations.append((lam, mu, kappa, count))
                        if count and not dominates(lam, mu):
                            scan.dominance_failures.append((lam, mu, kappa))
    return scan
