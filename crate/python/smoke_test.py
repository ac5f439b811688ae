"""Smoke test for the mdepth extension module.

Build and install first:
    pip install --no-build-isolation ./crates/python
"""

import mdepth


def main():
    i = mdepth.Ideal(["x", "y", "z"], "x^2*y, y*z^3, x*z")
    assert len(i) == 3
    assert i.radical().generators() == ["x*y", "x*z", "y*z"]
    assert i.colon("z").generators() == ["x", "y*z^2"]
    assert i.power(2).contains("x^4*y^2")
    assert i.depth() == 1
    assert i.polarize().depth() == i.polarize().summary()["depth"]

    triangle = mdepth.Graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    edge = triangle.edge_ideal()
    assert edge.regularity() == 2
    assert edge.power(2).depth() == 0
    square = triangle.cm_square()
    assert square["depth_zero_triangle"] == [0, 1, 2]

    session = mdepth.Session(
        "ring x1 x2 x3 x4 x5\n"
        "ideal I1 = x1^2*x2*x3^2, x3^2*x4, x4^3*x5\n"
    )
    assert session.names() == ["I1"]
    doc = session.run("reg", ["I1"])
    assert doc["outputs"]["reg_ideal"] == 5, doc

    try:
        mdepth.Session("ring x y\nideal I = x + y\n")
    except mdepth.ParseError as err:
        assert "line 2" in str(err)
    else:
        raise AssertionError("expected a parse error")

    try:
        mdepth.Graph(["a", "b"], [("a", "q")])
    except mdepth.PreconditionError:
        pass
    else:
        raise AssertionError("expected a precondition error")

    suite = mdepth.paper_suite()
    assert suite["outputs"]["failed"] == 0, suite
    print("smoke test passed:", suite["outputs"]["passed"], "suite items")


if __name__ == "__main__":
    main()
