"""Certificates of the bundle manifolds and the Kodaira classifier."""

import json

import pytest

from geographer.bundle_manifold import (
    KODAIRA_NEG_INF,
    BundleManifoldSpec,
    canonical_class,
    construct,
    kodaira_classify,
)


def test_kodaira_table():
    assert kodaira_classify(0, 0) == 0
    assert kodaira_classify(0, 5) == 1
    assert kodaira_classify(-1, 3) == KODAIRA_NEG_INF
    assert kodaira_classify(0, -2) == KODAIRA_NEG_INF
    assert kodaira_classify(4, 1) == 2
    assert kodaira_classify(4, -1) == KODAIRA_NEG_INF


def test_kodaira_outside_table():
    with pytest.raises(ValueError, match="outside table"):
        kodaira_classify(1, 0)


def test_canonical_class_coefficients():
    assert canonical_class(1) == 0
    assert canonical_class(2) == 2
    assert canonical_class(5) == 8
    with pytest.raises(ValueError):
        canonical_class(0)


def test_spec_validation():
    with pytest.raises(ValueError):
        BundleManifoldSpec(1, 0, 2, 0)  # d > k
    with pytest.raises(ValueError):
        BundleManifoldSpec(0, 0, 2, 1)  # tag 1 needs d != 0
    with pytest.raises(ValueError):
        BundleManifoldSpec(1, 1, 2, 2)  # tag 2 needs d != k
    with pytest.raises(ValueError):
        BundleManifoldSpec(0, 0, 0, 0)  # genus
    with pytest.raises(ValueError):
        BundleManifoldSpec(0, 3, 2, 0)  # k > g
    assert BundleManifoldSpec(1, 1, 2, 1).label == "B(1,1,2;1)"


def test_certificate_twisted_tag_one():
    cert = construct(BundleManifoldSpec(1, 1, 2, 1))
    assert (cert.sigma, cert.chi, cert.b1) == (0, 0, 2)
    assert (cert.b_plus, cert.b_minus) == (1, 1)
    assert cert.degeneracy == 2
    assert cert.nullity == 2
    assert cert.kappa == 1
    assert cert.k_squared == 0
    assert cert.k_dot_omega == 2
    assert cert.minimal


def test_certificate_product_case():
    cert = construct(BundleManifoldSpec(2, 3, 5, 0))
    assert (cert.sigma, cert.b1, cert.degeneracy, cert.nullity) == (0, 6, 2, 0)
    assert cert.kappa == 1
    assert cert.k_dot_omega == 8
    assert (cert.b_plus, cert.b_minus) == (5, 5)


def test_torus_like_genus_one_case():
    cert = construct(BundleManifoldSpec(0, 0, 1, 0))
    assert cert.kappa == 0
    assert cert.k_dot_omega == 0
    assert cert.b1 == 2


def test_grid_identities():
    for g in range(1, 6):
        for k in range(0, g + 1):
            for d in range(0, k + 1):
                for tag in [0] + ([1] if d else []) + ([2] if d != k else []):
                    cert = construct(BundleManifoldSpec(d, k, g, tag))
                    assert cert.sigma == 0 and cert.chi == 0
                    assert 2 * cert.chi + 3 * cert.sigma == 0
                    assert cert.b_plus == cert.b_minus == cert.b1 - 1
                    assert cert.kappa == (0 if g == 1 else 1)
                    assert cert.nullity <= cert.degeneracy <= cert.b1
                    assert cert.chi == 2 - 2 * cert.b1 + cert.b2


def test_construct_is_deterministic_and_cached():
    spec = BundleManifoldSpec(1, 2, 3, 2)
    first = construct(spec)
    second = construct(BundleManifoldSpec(1, 2, 3, 2))
    assert first == second
    assert first is second  # pure function, memoized


def test_certificate_serializes_to_json():
    dictionary = construct(BundleManifoldSpec(1, 1, 2, 1)).as_dict()
    assert json.loads(json.dumps(dictionary)) == dictionary
    assert dictionary["K_dot_omega"] == 2
    assert dictionary["nullity"] == 2
