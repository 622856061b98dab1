"""sl(2) subalgebras attached to roots, and their adjoint characteristic polynomials.

For a root ``lam`` the triple (H_lam, E_lam, E_-lam) spans a copy of sl(2)
inside the simple algebra L. ``ad H_lam`` acts by 0 on the Cartan subalgebra
and by ``<beta, lam>`` on each root vector E_beta, so the eigenvalue counts
``k_i`` (i = 0..3) come from enumerating pairings over the roots. Those counts
fix the characteristic polynomial of L as an sl(2)-module::

    z0^k0 * prod_{i>=1} (z0^2 - i^2 (z1^2 + z2 z3))^k_i

:data:`TABLE1` holds the values published for each type, transcribed as
polynomials in ``n``; :func:`table1_audit` compares them with enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NoSuchRootClass, NotACharacter, TagMismatch
from .exactnum import format_rational
from .oracle import quadratic_factor_product
from .poly import SparsePoly
from .rootsys import RootSystem, build, pairing
from .weights import WeightMultiset

# (label, family, root class, reading of n, {k_i: coefficients (a, b, c) of a n^2 + b n + c})
# "A_n" is listed twice: once reading n as the rank, once reading it as sl_n.
TABLE1 = [
    ("A_n", "A", "long", "rank", {0: (1, -5, 6), 1: (0, 2, -4), 2: (0, 0, 1), 3: (0, 0, 0)}),
    ("A_n", "A", "long", "sl_n", {0: (1, -5, 6), 1: (0, 2, -4), 2: (0, 0, 1), 3: (0, 0, 0)}),
    ("B_n", "B", "long", "rank", {0: (2, -7, 14), 1: (0, 4, -8), 2: (0, 0, 1), 3: (0, 0, 0)}),
    ("B_n", "B", "short", "rank", {0: (2, -3, -2), 1: (0, 0, 0), 2: (0, 2, 1), 3: (0, 0, 0)}),
    ("C_n", "C", "long", "rank", {0: (2, -3, 6), 1: (0, 2, -4), 2: (0, 0, 1), 3: (0, 0, 0)}),
    ("C_n", "C", "short", "rank", {0: (2, -7, 10), 1: (0, 4, -8), 2: (0, 0, 3), 3: (0, 0, 0)}),
    ("D_n", "D", "long", "rank", {0: (2, -9, 14), 1: (0, 4, -8), 2: (0, 0, 1), 3: (0, 0, 0)}),
    ("G_2", "G", "long", "rank", {0: (0, 0, 2), 1: (0, 0, 4), 2: (0, 0, 1), 3: (0, 0, 0)}),
    ("G_2", "G", "short", "rank", {0: (0, 0, 2), 1: (0, 0, 2), 2: (0, 0, 1), 3: (0, 0, 2)}),
    ("F_4", "F", "long", "rank", {0: (0, 0, 18), 1: (0, 0, 14), 2: (0, 0, 1), 3: (0, 0, 0)}),
    ("F_4", "F", "short", "rank", {0: (0, 0, 18), 1: (0, 0, 14), 2: (0, 0, 1), 3: (0, 0, 0)}),
    ("E_6", "E", "long", "rank", {0: (0, 0, 30), 1: (0, 0, 12), 2: (0, 0, 9), 3: (0, 0, 0)}),
    ("E_7", "E", "long", "rank", {0: (0, 0, 60), 1: (0, 0, 16), 2: (0, 0, 17), 3: (0, 0, 0)}),
    ("E_8", "E", "long", "rank", {0: (0, 0, 126), 1: (0, 0, 24), 2: (0, 0, 33), 3: (0, 0, 0)}),
]

AUDIT_RANKS = {"A": range(1, 9), "B": range(2, 9), "C": range(2, 9), "D": range(4, 9),
               "G_2": [2], "F_4": [4], "E_6": [6], "E_7": [7], "E_8": [8]}


def _claimed(entry, rank: int) -> dict[int, int]:
    reading, coeffs = entry[3], entry[4]
    n = rank + 1 if reading == "sl_n" else rank
    return {i: a * n * n + b * n + c for i, (a, b, c) in coeffs.items()}


@dataclass(frozen=True)
class Sl2CharPoly:
    """Exponents of ``z0^d0 * prod_{n>=1} (z0^2 - n^2 (z1^2 + z2 z3))^d_n``."""

    d: dict[int, int]

    def __post_init__(self):
        if any(k < 0 for k in self.d) or any(v < 1 for v in self.d.values()):
            raise ValueError(f"invalid exponent map {self.d}")

    def degree(self) -> int:
        return self.d.get(0, 0) + 2 * sum(v for k, v in self.d.items() if k >= 1)

    def to_sparse(self) -> SparsePoly:
        return quadratic_factor_product(self.d)

    def __str__(self) -> str:
        parts = []
        if self.d.get(0):
            parts.append(f"z0^{self.d[0]}")
        for n in sorted(k for k in self.d if k >= 1):
            parts.append(f"(z0^2 - {n * n}*(z1^2+z2*z3))^{self.d[n]}")
        return " * ".join(parts) if parts else "1"


def sl2_dims(ws: WeightMultiset) -> Sl2CharPoly:
    """Exponents ``d_n`` from the h-eigenvalue multiplicities of an sl(2)-module."""
    if ws.rs_tag != ("A", 1):
        raise TagMismatch(f"expected an A1 weight multiset, got {ws.rs_tag}")
    d = {}
    for (n,), m in ws.entries.items():
        if ws[(-n,)] != m:
            raise NotACharacter(f"weight {n} has multiplicity {m} but {-n} has {ws[(-n,)]}")
        if n >= 0:
            d[n] = m
    return Sl2CharPoly(d)


@dataclass
class EmbeddingReport:
    family: str
    rank: int
    root_class: str
    root: tuple[Fraction, ...]
    k_roots: dict[int, int]
    cartan_dim: int
    k0_total: int
    dim_L: int
    table1_label: str | None = None
    table1_reading: str | None = None
    table1_claimed: dict[int, int] | None = None
    matches_table1: dict[str, bool] = field(default_factory=dict)
    k0_reading: str | None = None

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def identity_holds(self) -> bool:
        return self.dim_L == self.k0_total + 2 * (self.k_roots[1] + self.k_roots[2] + self.k_roots[3])

    def fully_matches(self) -> bool | None:
        if self.table1_claimed is None:
            return None
        return all(self.matches_table1[k] for k in ("k0", "k1", "k2", "k3"))

    def to_json(self) -> dict:
        out = {
            "type": self.name,
            "family": self.family,
            "rank": self.rank,
            "root_class": self.root_class,
            "root": [format_rational(x) for x in self.root],
            "k_roots": {str(i): self.k_roots[i] for i in range(4)},
            "cartan_dim": self.cartan_dim,
            "k0_total": self.k0_total,
            "dim_L": self.dim_L,
            "dimension_identity": self.identity_holds(),
            "charpoly": str(embed_charpoly(self)),
        }
        if self.table1_claimed is not None:
            out["table1"] = {
                "row": self.table1_label,
                "reading": self.table1_reading,
                "claimed": {f"k{i}": self.table1_claimed[i] for i in range(4)},
                "matches": dict(self.matches_table1),
                "k0_reading": self.k0_reading,
            }
        return out


def k_counts(rs: RootSystem, lam) -> dict[int, int]:
    """Eigenvalue counts of ad H_lam on root vectors: ``#{beta : <beta, lam> = i}``.

    Key 0 counts all roots orthogonal to lam; keys 1..3 count one sign only.
    Raises if the positive and negative counts ever differ.
    """
    counts: dict[int, int] = {}
    for beta in rs.roots:
        p = pairing(rs, beta, lam)
        assert p.denominator == 1
        counts[int(p)] = counts.get(int(p), 0) + 1
    for i in range(1, 4):
        if counts.get(i, 0) != counts.get(-i, 0):
            raise AssertionError(f"asymmetric eigenvalue counts for +-{i} in {rs.name}")
    if set(counts) - set(range(-3, 4)):
        raise AssertionError(f"pairing outside -3..3 in {rs.name}: {sorted(counts)}")
    return {i: counts.get(i, 0) for i in range(4)}


def _attach_table(report: EmbeddingReport, entry) -> None:
    claimed = _claimed(entry, report.rank)
    roots_only = report.k_roots[0]
    with_cartan = report.k0_total
    k0_r, k0_c = claimed[0] == roots_only, claimed[0] == with_cartan
    report.table1_label = entry[0] if entry[3] == "rank" else f"{entry[0]} (n = rank + 1)"
    report.table1_reading = entry[3]
    report.table1_claimed = claimed
    report.k0_reading = ("both" if k0_r and k0_c else "roots" if k0_r
                         else "cartan" if k0_c else None)
    report.matches_table1 = {
        "k0": k0_r or k0_c,
        "k1": claimed[1] == report.k_roots[1],
        "k2": claimed[2] == report.k_roots[2],
        "k3": claimed[3] == report.k_roots[3],
        "k1+k2": claimed[1] + claimed[2] == report.k_roots[1] + report.k_roots[2],
    }


def embed_report(rs: RootSystem, root_class: str = "long", a_reading: str = "sl_n") -> EmbeddingReport:
    """Eigenvalue counts for the sl(2) of the first positive root of a length class.

    For type A the published row is attached under ``a_reading`` ("sl_n" or
    "rank").
    """
    classes = rs.root_length_classes()
    if root_class not in classes:
        raise NoSuchRootClass(f"{rs.name} has no {root_class} roots")
    lam = classes[root_class][0]
    k = k_counts(rs, lam)
    report = EmbeddingReport(
        family=rs.family,
        rank=rs.rank,
        root_class=root_class,
        root=lam,
        k_roots=k,
        cartan_dim=rs.rank,
        k0_total=k[0] + rs.rank,
        dim_L=rs.rank + len(rs.roots),
    )
    if not report.identity_holds():
        raise AssertionError(f"dimension identity fails for {rs.name} {root_class}")
    label = f"{rs.family}_{rs.rank}" if rs.family in "EFG" else f"{rs.family}_n"
    reading = a_reading if rs.family == "A" else "rank"
    entry = next((e for e in TABLE1 if e[0] == label and e[2] == root_class and e[3] == reading),
                 None)
    if entry is not None:
        _attach_table(report, entry)
    return report


def embed_charpoly(report: EmbeddingReport) -> Sl2CharPoly:
    d = {0: report.k0_total}
    d.update({i: report.k_roots[i] for i in (1, 2, 3)})
    return Sl2CharPoly({i: v for i, v in d.items() if v})


def table1_audit() -> list[EmbeddingReport]:
    """One report per published row and supported rank, in table order."""
    out = []
    for label, family, root_class, reading, _ in TABLE1:
        ranks = AUDIT_RANKS[family] if family in "ABCD" else AUDIT_RANKS[label]
        for r in ranks:
            out.append(embed_report(build(family, r), root_class, a_reading=reading))
    return out


def audit_json() -> list[dict]:
    return [r.to_json() for r in table1_audit()]


def _flag(ok: bool) -> str:
    return "ok" if ok else "MISMATCH"


def audit_markdown(reports: list[EmbeddingReport] | None = None) -> str:
    reports = table1_audit() if reports is None else reports
    lines = [
        "| row | type | root | k0 (roots) | k0 (+Cartan) | k1 | k2 | k3 | claimed k0,k1,k2,k3 "
        "| k0 | k1 | k2 | k3 | k1+k2 | k0 reading | dim L = k0+2(k1+k2+k3) |",
        "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|---|",
    ]
    for r in reports:
        c = r.table1_claimed
        m = r.matches_table1
        claimed = ", ".join(str(c[i]) for i in range(4))
        ident = f"{r.dim_L} = {r.k0_total}+2({r.k_roots[1]}+{r.k_roots[2]}+{r.k_roots[3]})"
        lines.append(
            f"| {r.table1_label} | {r.name} | {r.root_class} | {r.k_roots[0]} | {r.k0_total} "
            f"| {r.k_roots[1]} | {r.k_roots[2]} | {r.k_roots[3]} | {claimed} "
            f"| {_flag(m['k0'])} | {_flag(m['k1'])} | {_flag(m['k2'])} | {_flag(m['k3'])} "
            f"| {_flag(m['k1+k2'])} | {r.k0_reading or '-'} "
            f"| {ident} {'PASS' if r.identity_holds() else 'FAIL'} |"
        )
    return "\n".join(lines) + "\n"
