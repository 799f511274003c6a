"""Shared fixtures; heavy objects are built once per session."""

from __future__ import annotations

from functools import cache

import pytest

from matchfield import verify_linear_quotients
from matchfield.monomials import Monomial, Partition
from matchfield.quotients import LQCertificate


@cache
def certificate(parts: tuple[int, ...], ell: int) -> LQCertificate:
    cert = verify_linear_quotients(Partition(parts), ell)
    assert isinstance(cert, LQCertificate), f"LQ failed for {parts}, ell={ell}"
    return cert


def mono(text: str, n: int) -> Monomial:
    return Monomial.from_text(text, n)


@pytest.fixture(scope="session")
def cert_22_sq() -> LQCertificate:
    return certificate((2, 2), 2)


@pytest.fixture(scope="session")
def cert_13_sq() -> LQCertificate:
    return certificate((1, 3), 2)


@pytest.fixture(scope="session")
def cert_5_sq() -> LQCertificate:
    return certificate((5,), 2)
