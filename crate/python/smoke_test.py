"""Smoke test for the gk2hopf Python module.

Build the extension first:

    cargo build -p gk2hopf-py --release --features extension-module

The script imports an installed ``gk2hopf`` if there is one, and otherwise
loads ``target/release/libgk2hopf.so`` from the workspace.
"""

import importlib.machinery
import importlib.util
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    try:
        import gk2hopf

        return gk2hopf
    except ImportError:
        pass
    for name in ("libgk2hopf.so", "libgk2hopf.dylib", "gk2hopf.dll"):
        path = ROOT / "target" / "release" / name
        if path.exists():
            loader = importlib.machinery.ExtensionFileLoader("gk2hopf", str(path))
            spec = importlib.util.spec_from_file_location("gk2hopf", path, loader=loader)
            module = importlib.util.module_from_spec(spec)
            loader.exec_module(module)
            return module
    sys.exit("gk2hopf extension not found; build it with cargo first")


def main():
    gk = load()
    H = gk.HopfAlgebra

    a = H.from_file(ROOT / "instances" / "a-1-z4.json")
    assert a.name.startswith("A(1"), a.name
    report = a.verify(window=2)
    assert report["passed"], report

    # y^1 x^0 times y^0 x^1 is the ordered monomial y x.
    assert a.multiply([1, 0], [0, 1]) == [([1, 1], "1")]
    # x y = q y x with q = z4.
    assert a.multiply([0, 1], [1, 0]) == [([1, 1], "z4")]
    assert a.counit([0, 1]) == "1" and a.counit([1, 0]) == "0"
    # y is skew-primitive, x grouplike.
    assert len(a.coproduct([1, 0])) == 2 and len(a.coproduct([0, 1])) == 1

    inv = H.from_file(ROOT / "instances" / "b-7-1-3-5.json").invariants()
    assert inv["pi_degree"] == 105 and inv["integral_order"] == 15, inv

    c3 = H.from_spec({"family": "C", "n": 3})
    verdict = c3.isomorphic(H.from_spec({"family": "A", "n": 2, "q": {"rational": "1"}}))
    assert not verdict["isomorphic"]
    assert verdict["distinction"]["invariant"] == "abelianization_goldie_rank"

    summary = a.comodule(window=2)
    assert summary["passed"] and summary["quotient"] == "a-y"

    try:
        H.from_spec({"family": "B", "n": 2, "p": [2, 4], "q": {"order": 8, "power": 1}})
    except ValueError as e:
        assert "/p" in str(e), e
    else:
        raise AssertionError("non-coprime exponents accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
