import pytest

from matchfield.decomposition import (DecompositionFunction, b_ell, b_generic,
                                      verify_exchange, verify_set_containment)
from matchfield.monomials import Partition, Variable
from conftest import certificate, mono


class TestBGeneric:
    def test_identity_outside_set(self):
        cert = certificate((4,), 1)
        m = mono("x1*y3*z4", 4)  # first generator, empty set
        assert b_generic(Variable("z", 3), m, cert) == m

    def test_earliest_divisor(self):
        cert = certificate((4,), 1)
        m = mono("x1*y2*z3", 4)
        assert Variable("z", 4) in cert.set_of(m)
        assert b_generic(Variable("z", 4), m, cert) == mono("x1*y2*z4", 4)

    def test_ell_one_rules_agree(self):
        # at ell = 1 the divisor is unique, so both rules coincide
        for parts in [(4,), (2, 2), (1, 3), (2, 3)]:
            cert = certificate(parts, 1)
            for j, m in enumerate(cert.generators.monomials):
                for v in sorted(cert.sets[j]):
                    assert b_generic(v, m, cert) == b_ell(v, m, cert)


class TestBEll:
    def test_x_rule_removes_largest(self):
        cert = certificate((3, 2), 2)
        m = mono("x2*x4*y3^2*z5^2", 5)
        assert Variable("x", 1) in cert.set_of(m)
        assert b_ell(Variable("x", 1), m, cert) == mono("x1*x2*y3^2*z5^2", 5)

    def test_z_rule_removes_smallest_z(self):
        cert = certificate((2, 2), 2)
        # pick a generator with a z-variable in its set
        found = None
        for j, m in enumerate(cert.generators.monomials):
            zs = [v for v in cert.sets[j] if v.family == "z"]
            if zs:
                found = (m, min(zs))
                break
        assert found is not None
        m, v = found
        result = b_ell(v, m, cert)
        smallest_z = min(k for k in range(1, 5) if m.exponent(Variable("z", k)))
        expected = (v.monomial(4) * m).quotient(Variable("z", smallest_z).monomial(4))
        assert result == expected
        assert result in cert.generators.genset

    def test_identity_branch(self):
        cert = certificate((2, 2), 2)
        m = cert.generators.monomials[0]
        assert cert.sets[0] == frozenset()
        assert b_ell(Variable("y", 1), m, cert) == m

    def test_divides_and_single_family_swap(self):
        for parts, ell in [((2, 2), 2), ((1, 3), 2), ((2, 3), 1)]:
            cert = certificate(parts, ell)
            n = cert.partition.n
            for j, m in enumerate(cert.generators.monomials):
                for v in sorted(cert.sets[j]):
                    target = b_ell(v, m, cert)
                    assert target != m
                    assert target.divides(v.monomial(n) * m)
                    removed = (v.monomial(n) * m).quotient(target)
                    assert removed.degree == 1
                    removed_var = next(iter(removed.variables()))[0]
                    assert removed_var.family == v.family


class TestExchange:
    def test_paper_instances_have_no_violations(self, cert_22_sq, cert_13_sq):
        for cert in (cert_22_sq, cert_13_sq):
            report = verify_exchange(DecompositionFunction("paper-bl", cert))
            assert report.ok, report.violations[:3]

    def test_small_sets_vacuous(self):
        cert = certificate((3,), 1)
        report = verify_exchange(DecompositionFunction("paper-bl", cert))
        assert report.checked == 0 and report.ok

    def test_diagonal_square_violations_are_real(self, cert_5_sq):
        # no decomposition function satisfies the exchange property here;
        # the family rule exhibits 4 of the violations
        report = verify_exchange(DecompositionFunction("paper-bl", cert_5_sq))
        assert len(report.violations) == 4
        for v in report.violations:
            b = DecompositionFunction("paper-bl", cert_5_sq)
            assert b(v.s, b(v.t, v.m)) != b(v.t, b(v.s, v.m))

    def test_generic_rule_on_diagonal_square(self, cert_5_sq):
        report = verify_exchange(DecompositionFunction("generic", cert_5_sq))
        assert len(report.violations) == 4


class TestContainment:
    def test_diagonal_fields_reported(self):
        # measured, not asserted: the counts are stable facts of the order
        report = verify_set_containment(
            DecompositionFunction("paper-bl", certificate((5,), 1)))
        assert report.checked == 15  # sum of the set sizes
        assert len(report.violations) == 5

    def test_empty_sets_vacuous(self):
        report = verify_set_containment(
            DecompositionFunction("paper-bl", certificate((3,), 1)))
        assert report.checked == 0 and report.ok

    def test_two_two_square_reported(self, cert_22_sq):
        report = verify_set_containment(
            DecompositionFunction("paper-bl", cert_22_sq))
        assert len(report.violations) == 3
