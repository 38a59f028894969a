"""Newton polygons, witness certificates, product formula, serialization."""

import json
import random
from fractions import Fraction

import pytest

from padicorder import (
    AlgebraicNumberSpec,
    IntPolynomial,
    PPower,
    RootOfUnity,
    SLOPE_CONVENTION,
    Witness,
    ZeroRoot,
    cyclotomic,
    find_witness,
    newton_polygon,
    padic_witness,
    product_formula_check,
    verify_witness_certificate,
    witness_cert_from_doc,
    witness_result_to_doc,
)

LEHMER = IntPolynomial((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))


def test_newton_polygon_sqrt5():
    np5 = newton_polygon(IntPolynomial((-5, 0, 1)), 5)
    assert np5.segments == ((Fraction(-1, 2), 2),)


def test_newton_polygon_linear_unit_over_p():
    # 5x - 1: root 1/5 has valuation -1, slope +1 under the stated convention.
    np5 = newton_polygon(IntPolynomial((-1, 5)), 5)
    assert np5.segments == ((Fraction(1), 1),)
    assert SLOPE_CONVENTION == "root valuation = -slope"


def test_newton_polygon_two_segments():
    # 5x^2 - 6x + 5 at p=5: valuations (1, 0, 1) give slopes -1 and +1.
    np5 = newton_polygon(IntPolynomial((5, -6, 5)), 5)
    assert np5.segments == ((Fraction(-1), 1), (Fraction(1), 1))


def test_padic_witness_key_example():
    cert = padic_witness(IntPolynomial((5, -6, 5)))
    assert cert is not None
    assert cert.place.prime == 5
    assert cert.norm_bound == Fraction(5)
    assert cert.exact_norm == PPower(5, Fraction(-1))
    assert verify_witness_certificate(cert)


def test_padic_witness_none_for_monic():
    assert padic_witness(IntPolynomial((-1, -1, 1))) is None


def test_find_witness_trichotomy_cases():
    rou = find_witness(AlgebraicNumberSpec.from_poly(cyclotomic(12), prove=True))
    assert isinstance(rou, RootOfUnity) and rou.order == 12

    wit = find_witness(
        AlgebraicNumberSpec.from_poly(IntPolynomial((5, -6, 5)), prove=True)
    )
    assert isinstance(wit, Witness)
    assert wit.certificate.place.kind == "non_archimedean"

    arch = find_witness(
        AlgebraicNumberSpec.from_poly(IntPolynomial((-1, -1, 1)), prove=True)
    )
    assert isinstance(arch, Witness)
    assert arch.certificate.place.kind == "archimedean"
    assert arch.certificate.norm_bound > 1
    assert verify_witness_certificate(arch.certificate)


def test_find_witness_rejects_zero_root():
    with pytest.raises(ZeroRoot):
        find_witness(AlgebraicNumberSpec.from_poly(IntPolynomial((0, 1))))


def test_archimedean_golden_ratio_interval():
    res = find_witness(AlgebraicNumberSpec.from_poly(IntPolynomial((-1, -1, 1))))
    mi = res.certificate.modulus_interval()
    # phi = 1.6180...; the certified modulus interval must contain a value there
    assert mi.lo < Fraction(1619, 1000) and mi.hi > Fraction(1618, 1000)


def test_archimedean_lehmer_interval():
    res = find_witness(AlgebraicNumberSpec.from_poly(LEHMER))
    assert isinstance(res, Witness)
    mi = res.certificate.modulus_interval()
    assert mi.intersects(
        __import__("padicorder").RationalInterval(
            Fraction(117627, 100000), Fraction(117629, 100000)
        )
    )


def test_product_formula_random():
    rng = random.Random(20260823)
    for _ in range(100):
        num = rng.randint(1, 10**6) * rng.choice([1, -1])
        den = rng.randint(1, 10**6)
        assert product_formula_check(Fraction(num, den))


def test_verify_rejects_tampered_certificate():
    cert = padic_witness(IntPolynomial((5, -6, 5)))
    doc = witness_result_to_doc(Witness(cert))
    doc["norm_bound"]["exponent"] = "2/1"
    assert not verify_witness_certificate(witness_cert_from_doc(doc))


def test_serialization_round_trip():
    for f in (IntPolynomial((5, -6, 5)), IntPolynomial((-1, -1, 1)), LEHMER):
        res = find_witness(AlgebraicNumberSpec.from_poly(f, prove=True))
        doc = witness_result_to_doc(res)
        blob = json.dumps(doc)
        cert = witness_cert_from_doc(json.loads(blob))
        assert verify_witness_certificate(cert)
        assert cert.conditionality == res.certificate.conditionality


def test_conditionality_flag():
    f = IntPolynomial((5, -6, 5))
    proven = find_witness(AlgebraicNumberSpec.from_poly(f, prove=True))
    assert proven.certificate.conditionality == "Unconditional"
    unchecked = find_witness(AlgebraicNumberSpec(f))
    assert unchecked.certificate.conditionality == "ConditionalOnIrreducibility"
