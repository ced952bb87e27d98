"""Smoke test for the cp2q Python module.

Build and install the extension first, e.g.
    cd crates/py && maturin build --release -o dist && pip install dist/*.whl
then run `python python/smoke_test.py`.
"""

import math

import cp2q


def main() -> None:
    two = cp2q.q_int(2)
    assert str(two) == "q + q^-1", two
    assert math.isclose(two.eval(0.5), 2.5)
    assert cp2q.q_factorial(3) == cp2q.q_int(2) * cp2q.q_int(3)

    assert cp2q.reduce("s5q", "z2 z1") == "q^-1 z1 z2"
    sphere = [cp2q.Element("s5q", f"z{i} z{i}*") for i in (1, 2, 3)]
    assert str(sphere[0] + sphere[1] + sphere[2]) == "1"

    z1 = cp2q.Element("s5q", "z1")
    assert (z1 * z1.star()).star() == z1 * z1.star()
    assert z1.embedded().algebra == "suq3"

    # h(z_i z_i*) = q^(2(i-1)) / (1 + q^2 + q^4)
    q0 = 0.5
    for i, x in enumerate(sphere):
        want = q0 ** (2 * i) / (1 + q0**2 + q0**4)
        assert math.isclose(x.haar().eval(q0), want, rel_tol=1e-12), (i, x.haar())
    assert cp2q.Element("s5q", "z1 z2*").haar().is_zero()

    assert cp2q.h0_dimension(1, 5) == (3, 3)
    assert cp2q.h0_dimension(-1, 5)[0] == 0
    assert all(ok for _, ok in cp2q.frame_verify(2))
    assert all(ok for _, ok in cp2q.frame_verify(-1))

    report = cp2q.run_suite("2")
    assert report["pass"] is True, report

    try:
        cp2q.Element("s5q", "z7")
    except ValueError:
        pass
    else:
        raise AssertionError("bad token accepted")

    print("cp2q python smoke test: ok")


if __name__ == "__main__":
    main()
