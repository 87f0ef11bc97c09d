"""Desk-scale storage layout and repair-traffic accounting.

One node per code symbol.  Repair policy is local-first: a bucket that
keeps at least alpha survivors repairs each of its erased symbols from
alpha helpers inside the bucket.  Whatever remains falls back to a single
global decode over the surviving (plus locally repaired) columns when they
reach rank k; otherwise those positions are reported unrecoverable.  The
transfer unit is one field symbol; there is no time or queueing model.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codec import GdcCode
from .errors import ParameterError
from .matrices import basis_insert


@dataclass(frozen=True)
class Layout:
    code: GdcCode
    node_of: dict[int, int]  # position -> node id

    @property
    def n_nodes(self) -> int:
        return len(set(self.node_of.values()))


def build_layout(code: GdcCode) -> Layout:
    """Default layout: node j holds exactly symbol j."""
    return Layout(code=code, node_of={p: p for p in range(code.design.n)})


@dataclass
class RepairStats:
    repaired_local: list[int] = field(default_factory=list)
    repaired_global: list[int] = field(default_factory=list)
    unrecoverable: list[int] = field(default_factory=list)
    helpers_contacted: dict[int, int] = field(default_factory=dict)
    symbols_transferred: int = 0

    @property
    def repaired(self) -> int:
        return len(self.repaired_local) + len(self.repaired_global)

    def to_json(self) -> dict:
        return {
            "repaired": self.repaired,
            "repaired_local": [p + 1 for p in sorted(self.repaired_local)],
            "repaired_global": [p + 1 for p in sorted(self.repaired_global)],
            "unrecoverable": [p + 1 for p in sorted(self.unrecoverable)],
            "helpers_contacted": {
                str(p + 1): c for p, c in sorted(self.helpers_contacted.items())
            },
            "symbols_transferred": self.symbols_transferred,
        }


def inject_and_repair(layout: Layout, erased) -> RepairStats:
    """Erase the given positions, repair what the policy can, account traffic.

    Each local repair contacts exactly alpha helpers and transfers alpha
    symbols.  A global decode (at most one per call) contacts a rank-k
    column set once — k transferred symbols shared by every globally
    repaired position, each of which records k contacted helpers.
    """
    code = layout.code
    design = code.design
    erased = set(erased)
    for p in erased:
        if not (0 <= p < design.n):
            raise ParameterError(f"position {p} out of range [0, {design.n})")
    stats = RepairStats()
    alpha = design.alpha

    pending: list[int] = []
    for i, bucket in enumerate(design.buckets):
        hit = [p for p in bucket if p in erased]
        if not hit:
            continue
        survivors = [p for p in bucket if p not in erased]
        if len(survivors) >= alpha:
            for p in hit:
                stats.repaired_local.append(p)
                stats.helpers_contacted[p] = alpha
                stats.symbols_transferred += alpha
        else:
            pending.extend(hit)

    if pending:
        available = [p for p in range(design.n) if p not in erased]
        available += stats.repaired_local
        basis: list[list[int] | None] = [None] * design.k
        rank = 0
        for p in sorted(available):
            if basis_insert(code.field, basis, code.g.column(p)) >= 0:
                rank += 1
                if rank == design.k:
                    break
        if rank == design.k:
            stats.symbols_transferred += design.k
            for p in pending:
                stats.repaired_global.append(p)
                stats.helpers_contacted[p] = design.k
        else:
            stats.unrecoverable.extend(pending)

    return stats


def hot_read_options(layout: Layout, j: int) -> list[int]:
    """Buckets from which information symbol j can be read independently.

    Each returned bucket decodes x_j from any alpha of its symbols.
    """
    design = layout.code.design
    if not (0 <= j < design.k):
        raise ParameterError(f"information index {j} out of range [0, {design.k})")
    return [i for i, si in enumerate(design.S) if j in si]
