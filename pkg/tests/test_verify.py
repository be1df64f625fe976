"""Commutation-relation suite, Hermiticity pattern, and Casimir operators."""

import random
from fractions import Fraction

import numpy as np
import pytest

from dsrep.numeric import HalfInt, commutator, max_abs
from dsrep.representation import (
    Algebra,
    CanonicalSpec,
    Family,
    assemble,
    assemble_canonical,
    canonical_backbone,
    canonical_t,
    canonical_t_squared,
    first_ten_specs,
)
from dsrep.verify import (
    DEFAULT_C2_INTERPRETATION,
    build_report,
    casimir1_cartesian,
    casimir1_matrix,
    casimir2_matrix,
    casimir_invariants_closed_form,
    check_all_crs,
    check_hermiticity,
    scalar_check,
    select_casimir2_interpretation,
)

H = HalfInt
TEN = first_ten_specs()


@pytest.fixture(scope="module")
def assembled():
    return {ref: assemble_canonical(spec) for ref, spec in TEN}


@pytest.fixture(scope="module")
def assembled_ads():
    return {
        ref: assemble_canonical(spec, Algebra.ANTI_DE_SITTER) for ref, spec in TEN
    }


class TestCommutators:
    def test_relation_count(self, assembled):
        assert len(check_all_crs(assembled[1])) == 27

    def test_all_ten_de_sitter(self, assembled):
        for ref, gens in assembled.items():
            assert max(check_all_crs(gens).values()) < 1e-10, f"rep {ref}"

    def test_all_ten_anti_de_sitter(self, assembled_ads):
        for ref, gens in assembled_ads.items():
            assert max(check_all_crs(gens).values()) < 1e-10, f"rep {ref}"

    def test_doubled_coupling_fails_by_factor_four(self):
        spec = CanonicalSpec(Family.TYPE_A, 2)
        forward, backward = canonical_t(spec, 1)
        gens = assemble(
            canonical_backbone(spec), {(0, 1): (2 * forward, 2 * backward)}
        )
        residuals = check_all_crs(gens)
        # the displacement commutator lands at 4x its target, i.e. an
        # excess of 3 max|Jz|, while the vector-transformation sector
        # stays exact
        assert residuals["[Vx,Vy] = i Jz"] == pytest.approx(
            3 * max_abs(gens.jz), rel=1e-12
        )
        assert residuals["[Jx,Vy] = i Vz"] < 1e-13


class TestHermiticity:
    def test_all_ten_both_algebras(self, assembled, assembled_ads):
        for gens in list(assembled.values()) + list(assembled_ads.values()):
            assert max(check_hermiticity(gens).values()) < 1e-11

    def test_ads_pattern_flips_displacements(self, assembled_ads):
        gens = assembled_ads[1]
        residuals = check_hermiticity(gens)
        assert residuals["Vx"] < 1e-12 and residuals["Vt"] < 1e-12
        # the same matrices against the de Sitter pattern must fail on V
        ds_view = type(gens)(
            backbone=gens.backbone, algebra=Algebra.DE_SITTER,
            jx=gens.jx, jy=gens.jy, jz=gens.jz,
            kx=gens.kx, ky=gens.ky, kz=gens.kz,
            vt=gens.vt, vx=gens.vx, vy=gens.vy, vz=gens.vz, t=gens.t,
        )
        wrong = check_hermiticity(ds_view)
        assert wrong["Vx"] > 0.1 and wrong["Vt"] > 0.1

    def test_broken_sign_rule_breaks_hermiticity(self):
        spec = CanonicalSpec(Family.TYPE_A, 2)
        forward, _ = canonical_t(spec, 1)
        gens = assemble(
            canonical_backbone(spec),
            {(0, 1): (forward, forward)},  # ++ edge needs the minus
            validate_t=False,
        )
        assert max(check_hermiticity(gens).values()) > 0.1


class TestCasimir1:
    @pytest.mark.parametrize("ref,spec", TEN)
    def test_scalar_matches_closed_form(self, ref, spec, assembled):
        gens = assembled[ref]
        c1 = casimir1_matrix(gens)
        lam = scalar_check(c1, 1e-9)
        assert lam is not None, f"rep {ref} quadratic Casimir not scalar"
        neg_c1 = casimir_invariants_closed_form(spec)[0]
        assert lam.real == pytest.approx(-float(neg_c1), rel=1e-9)
        assert abs(lam.imag) < 1e-9

    @pytest.mark.parametrize("ref,spec", TEN)
    def test_ladder_equals_cartesian(self, ref, spec, assembled):
        gens = assembled[ref]
        assert max_abs(casimir1_matrix(gens) - casimir1_cartesian(gens)) < 1e-10

    def test_ladder_equals_cartesian_for_arbitrary_couplings(self):
        # the two expressions are algebraically identical whatever the t's
        rng = random.Random(7)
        for spec in (CanonicalSpec(Family.TYPE_A, 3), CanonicalSpec(Family.TYPE_B, 4)):
            backbone = canonical_backbone(spec)
            t = {
                (i, i + 1): (rng.uniform(-2, 2), rng.uniform(-2, 2))
                for i in range(spec.n - 1)
            }
            gens = assemble(backbone, t, validate_t=False)
            assert max_abs(casimir1_matrix(gens) - casimir1_cartesian(gens)) < 1e-10

    @pytest.mark.parametrize("ref,spec", [(1, TEN[0][1]), (4, TEN[3][1]), (9, TEN[8][1])])
    def test_commutes_with_all_generators(self, ref, spec, assembled):
        gens = assembled[ref]
        c1 = casimir1_matrix(gens)
        for name, m in gens.generators().items():
            assert max_abs(commutator(c1, m)) < 1e-9, name

    def test_first_block_closed_forms_exact(self):
        # the assembled scalar must equal both closed forms, which agree
        # as exact rationals once the coupling product is substituted
        for _, spec in TEN:
            a1 = Fraction(spec.n - 1, 2)
            t_sq = canonical_t_squared(spec, 1)
            if spec.family is Family.TYPE_A:
                from_blocks = 4 * a1 * (a1 + 1) + 8 * t_sq * a1 * a1
            else:
                from_blocks = 2 * a1 * (a1 + 1) + 8 * t_sq * a1
            assert from_blocks == casimir_invariants_closed_form(spec)[0]


class TestCasimir2:
    def test_disambiguation_selects_shipped_default(self):
        assert select_casimir2_interpretation() == DEFAULT_C2_INTERPRETATION

    @pytest.mark.parametrize("ref,spec", TEN)
    def test_scalar_matches_closed_form(self, ref, spec, assembled):
        c2 = casimir2_matrix(assembled[ref])
        lam = scalar_check(c2, 1e-8)
        assert lam is not None, f"rep {ref} quartic Casimir not scalar"
        neg_c2 = casimir_invariants_closed_form(spec)[1]
        assert lam.real == pytest.approx(-float(neg_c2), abs=1e-8)

    def test_commutes_with_all_generators(self, assembled):
        gens = assembled[3]
        c2 = casimir2_matrix(gens)
        for name, m in gens.generators().items():
            assert max_abs(commutator(c2, m)) < 1e-8, name

    def test_unknown_interpretation_rejected(self, assembled):
        with pytest.raises(ValueError):
            casimir2_matrix(assembled[1], "nonsense")


class TestClosedForms:
    def test_smallest_mixed(self):
        neg_c1, neg_c2, p, q = casimir_invariants_closed_form(
            CanonicalSpec(Family.TYPE_B, 2)
        )
        assert (neg_c1, neg_c2) == (Fraction(5, 2), Fraction(45, 16))
        assert str(p) == "3/2" and str(q) == "3/2"

    def test_five_block_diagonal(self):
        neg_c1, neg_c2, p, q = casimir_invariants_closed_form(
            CanonicalSpec(Family.TYPE_A, 5)
        )
        assert (neg_c1, neg_c2) == (Fraction(28), Fraction(0))
        assert str(p) == "5" and str(q) == "0"

    def test_four_block_mixed(self):
        neg_c1, neg_c2, p, q = casimir_invariants_closed_form(
            CanonicalSpec(Family.TYPE_B, 4)
        )
        assert (neg_c1, neg_c2) == (Fraction(21, 2), Fraction(525, 16))
        assert str(p) == "5/2"


def test_canonical_backbones_are_duplicate_free():
    for _, spec in TEN:
        backbone = canonical_backbone(spec)
        assert not backbone.has_duplicates()


def commutant_dimension(gens, tol=1e-8):
    """Number of independent matrices commuting with all ten generators.

    Independent irreducibility oracle: [G, X] = 0 for every generator G is
    the linear system (G x I - I x G^T) vec(X) = 0; one solution (the
    identity) means the representation is irreducible.
    """
    dim = gens.dim
    eye = np.eye(dim)
    rows = [
        np.kron(m, eye) - np.kron(eye, m.T) for m in gens.generators().values()
    ]
    singular = np.linalg.svd(np.vstack(rows), compute_uv=False)
    rank = int(np.sum(singular > tol * singular[0]))
    return dim * dim - rank


class TestIrreducibility:
    @pytest.mark.parametrize("ref", [1, 2, 3, 4, 5])
    def test_canonical_chains_are_irreducible(self, ref, assembled):
        assert commutant_dimension(assembled[ref]) == 1

    def test_two_chain_sum_has_two_dimensional_commutant(self):
        from dsrep.representation import BackboneGraph
        from dsrep.blocks import BlockLabel

        blocks = list(canonical_backbone(CanonicalSpec(Family.TYPE_B, 2)).blocks)
        blocks += list(canonical_backbone(CanonicalSpec(Family.TYPE_A, 2)).blocks)
        g = BackboneGraph.make(blocks, [(0, 1), (2, 3)])
        t = {
            (0, 1): canonical_t(CanonicalSpec(Family.TYPE_B, 2), 1),
            (2, 3): canonical_t(CanonicalSpec(Family.TYPE_A, 2), 1),
        }
        gens = assemble(g, t)
        assert commutant_dimension(gens) == 2


class TestScalarCheck:
    def test_scalar_matrix(self):
        assert scalar_check(3 * np.eye(7), 1e-12) == pytest.approx(3.0)

    def test_non_scalar(self):
        assert scalar_check(np.diag([1.0, 2.0]), 1e-9) is None

    def test_rep_four_value(self, assembled):
        lam = scalar_check(casimir1_matrix(assembled[4]), 1e-9)
        assert lam == pytest.approx(-10.0, rel=1e-10)

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            scalar_check(np.zeros((2, 3)), 1e-9)


class TestReport:
    def test_canonical_report_passes(self, assembled):
        report = build_report(assembled[3])
        assert report.passed
        assert report.max_cr_residual < 1e-10
        assert str(report.p) == "2" and str(report.q) == "2"
        assert not report.duplicates_present
        assert report.casimir1_scalar == pytest.approx(-6.0)
        assert report.casimir2_scalar == pytest.approx(-12.0)
        assert report.casimir1_agreement < 1e-10

    def test_tampered_report_fails_and_names_relation(self):
        spec = CanonicalSpec(Family.TYPE_A, 2)
        forward, backward = canonical_t(spec, 1)
        gens = assemble(
            canonical_backbone(spec), {(0, 1): (2 * forward, 2 * backward)}
        )
        report = build_report(gens)
        assert not report.passed
        assert any(name.startswith("[Vx,Vy]") for name in report.failing_crs)
        # vector-transformation relations still hold
        assert not any(name.startswith("[Jx,Vy]") for name in report.failing_crs)
