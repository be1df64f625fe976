"""Computed reference tables for the first ten canonical irreps.

Everything here is calculated from the library, never hard-coded, so the
rendered text can be diffed against transcribed golden files.
"""

from __future__ import annotations

from fractions import Fraction

from .representation import (
    Family,
    canonical_backbone,
    canonical_dimension,
    canonical_t_squared,
    first_ten_specs,
)
from .verify import casimir_invariants_closed_form

__all__ = ["backbone_table", "coupling_table", "casimir_table", "all_tables"]


def _surd(squared: Fraction) -> str:
    """Exact rendering of sqrt(squared): '1/2' when perfect, else 'sqrt(5/4)'."""
    num, den = squared.numerator, squared.denominator
    root_num = int(num ** 0.5 + 0.5)
    root_den = int(den ** 0.5 + 0.5)
    if root_num * root_num == num and root_den * root_den == den:
        return str(Fraction(root_num, root_den))
    return f"sqrt({squared})"


def backbone_table() -> str:
    lines = ["Canonical backbones and dimensions", ""]
    lines.append(f"{'rep':>3}  {'family':6}  {'N':>2}  {'dim':>4}  backbone")
    for ref, spec in first_ten_specs():
        chain = " + ".join(str(b) for b in canonical_backbone(spec).blocks)
        lines.append(
            f"{ref:>3}  {spec.family.value.upper():6}  {spec.n:>2}  "
            f"{canonical_dimension(spec):>4}  {chain}"
        )
    return "\n".join(lines)


def coupling_table() -> str:
    lines = ["Coupling coefficients t(n, n+1) along each canonical chain", ""]
    lines.append("Family B chains carry t = 1/2 on every edge (both directions).")
    lines.append("Family A chains carry (t, -t); exact values:")
    lines.append("")
    for ref, spec in first_ten_specs():
        if spec.family is not Family.TYPE_A:
            continue
        cells = []
        for n in range(1, spec.n):
            t_sq = canonical_t_squared(spec, n)
            cells.append(f"t{n}{n + 1} = {_surd(t_sq)}")
        lines.append(f"{ref:>3}  " + ",  ".join(cells))
    return "\n".join(lines)


def casimir_table() -> str:
    lines = ["Casimir invariants", ""]
    lines.append(f"{'rep':>3}  {'family':6}  {'p':>4}  {'q':>4}  {'-C1':>6}  {'-C2':>8}")
    ordered = sorted(
        first_ten_specs(), key=lambda item: (item[1].family is Family.TYPE_A, item[0])
    )
    for ref, spec in ordered:
        neg_c1, neg_c2, p, q = casimir_invariants_closed_form(spec)
        lines.append(
            f"{ref:>3}  {spec.family.value.upper():6}  {str(p):>4}  {str(q):>4}  "
            f"{str(neg_c1):>6}  {str(neg_c2):>8}"
        )
    lines.append("")
    lines.append("(for family A the reported q = 0 could equally be q = 1)")
    return "\n".join(lines)


def all_tables() -> str:
    return "\n\n".join([backbone_table(), coupling_table(), casimir_table()]) + "\n"
