"""Smoke test for the ellq extension module.

Build it first, either with `maturin develop -m crates/ellq-py/Cargo.toml`
or with `cargo build -p ellq-py --features extension-module` followed by
copying target/debug/libellq.so to python/ellq.so.
"""

import json
import sys

import ellq


def main():
    g2 = ellq.WeylGroup("G2")
    assert g2.order == 12 and g2.exponents == [1, 5]
    assert len(g2.elliptic_classes()) == 3
    f = g2.elliptic_fake_degree("phi1,6")
    assert str(f) == "(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)", f
    assert f.eval(1) == "0"
    assert g2.fake_degree("phi1,6").raw() == "q^6"

    assert ellq.WeylGroup("B5").independence() == (7, 6)

    labels, m = ellq.fourier_matrix("S3")
    assert len(labels) == 8 and m[0][0] == "1/6"

    rows = ellq.verify("g2-formal")
    statuses = [s for _, s, _ in rows]
    assert statuses.count("DISCREPANCY") == 2 and "FAIL" not in statuses
    assert all(r["status"] == "PASS" for r in json.loads(ellq.verify_json("sp4")))
    assert ellq.mx("g2-a1-s1") == ("PASS", "q * (q-1)^2 / (Phi2^2 Phi6)")

    a = ellq.AffineDatum("G2")
    assert [c[4] for c in a.classes()] == ["1/6", "1/6", "1/12", "1/4", "1/3"]
    assert str(a.nu()[4]) == "(q-1)^2 / Phi3"
    ef = a.ef_affine()
    assert ef == [list(r) for r in zip(*ef)]
    degrees = dict(a.formal_degrees())
    assert str(degrees["v4"]) == "1/3 * q * (q-1)^2 / (Phi3 Phi6)"

    try:
        ellq.WeylGroup("Q3")
    except ValueError:
        pass
    else:
        raise AssertionError("bad type accepted")
    try:
        ellq.AffineDatum("B2").formal_degrees()
    except ValueError:
        pass
    else:
        raise AssertionError("G2 table used for B2")
    print("ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
