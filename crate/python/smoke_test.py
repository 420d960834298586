#!/usr/bin/env python3
"""Smoke test for the chaincheck_py extension module.

Builds the module with cargo if needed, imports it from the target
directory, and checks the bindings against known graphs. Exits nonzero
on the first failure.

Usage: python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def build_module() -> Path:
    lib = REPO / "target" / "release" / "libchaincheck_py.so"
    subprocess.run(
        ["cargo", "build", "-p", "chaincheck-py", "--release"],
        cwd=REPO,
        check=True,
    )
    if not lib.exists():
        sys.exit(f"expected {lib} after the build")
    return lib


def import_module(lib: Path):
    # Python wants the import name as the file name, so stage a copy.
    stage = Path(tempfile.mkdtemp(prefix="chaincheck_py."))
    shutil.copy2(lib, stage / "chaincheck_py.so")
    sys.path.insert(0, str(stage))
    import chaincheck_py

    return chaincheck_py


checks = 0


def expect(cond, what):
    global checks
    checks += 1
    if not cond:
        sys.exit(f"FAIL: {what}")


def expect_raises(fn, what):
    try:
        fn()
    except ValueError:
        global checks
        checks += 1
        return
    sys.exit(f"FAIL: {what} did not raise ValueError")


def main():
    cc = import_module(build_module())

    names = cc.fixture_names()
    expect("k4" in names and "bowtie" in names, "fixture names listed")

    k4 = cc.Graph.fixture("k4")
    expect(k4.n == 4 and k4.m == 6, "k4 shape")
    expect(cc.check(k4) == "2-CONNECTED", "k4 verdict")
    expect(repr(k4) == "Graph(n=4, m=6)", "repr")

    bowtie = cc.Graph.fixture("bowtie")
    expect(
        cc.check(bowtie) == "2-EDGE-CONNECTED BUT NOT 2-CONNECTED",
        "bowtie verdict",
    )
    r = cc.report(bowtie)
    expect(r["cut_vertices"] == [2], "bowtie cut vertex")
    expect(r["bridges"] == [], "bowtie has no bridges")
    expect(len(r["blocks"]) == 2, "bowtie blocks")
    expect(r["ear_decomposition"]["kind"] == "ear_decomposition", "bowtie ear kind")
    expect(r["ear_decomposition"]["valid"] is True, "bowtie ear valid")
    expect("chains" not in r, "chains stay out of the report by default")

    ch = cc.chains(bowtie)
    expect(len(ch) == 2, "bowtie chain count")
    expect(
        [c["kind"] for c in ch] == ["cycle", "cycle"],
        "bowtie chains are cycles",
    )
    expect(ch[0]["vertices"] == [0, 2, 1, 0], "first chain walk")

    r = cc.report(cc.Graph.fixture("k4"), chains=True)
    expect(r["ear_decomposition"]["kind"] == "open_ear_decomposition", "k4 ear kind")
    expect(len(r["chains"]) == 3, "k4 chain list included on request")
    expect(r["chain_stats"]["cycles"] == 1, "k4 has one cycle chain")

    path3 = cc.Graph.fixture("path3")
    expect(cc.check(path3) == "NOT 2-EDGE-CONNECTED", "path3 verdict")
    expect(cc.report(path3)["bridges"] == [0, 1], "path3 bridges")

    split = cc.Graph(4, [(0, 1), (2, 3)])
    expect(cc.check(split) == "NOT CONNECTED", "disconnected verdict")
    expect(split.edges() == [(0, 1), (2, 3)], "edge accessor")

    empty = cc.Graph(0, [])
    expect(cc.check(empty) == "NOT CONNECTED", "empty graph verdict")

    tri = cc.Graph.parse("3\n0 1\n1 2\n2 0\n")
    expect(cc.check(tri) == "2-CONNECTED", "edgelist parse")
    expect(tri.to_edge_list() == "3\n0 1\n1 2\n2 0\n", "edge-list round trip")

    dim = cc.Graph.parse("p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n", format="dimacs")
    expect(cc.check(dim) == "2-CONNECTED", "dimacs parse")

    expect(cc.check(k4, root=3) == "2-CONNECTED", "root choice is free")

    expect_raises(lambda: cc.Graph.fixture("nonesuch"), "unknown fixture")
    expect_raises(lambda: cc.Graph(2, [(0, 0)]), "self-loop rejected")
    expect_raises(lambda: cc.Graph(2, [(0, 5)]), "endpoint out of range")
    expect_raises(lambda: cc.Graph.parse("3\n0 zebra\n"), "parse error")
    expect_raises(lambda: cc.Graph.parse("3\n", format="csv"), "unknown format")
    expect(cc.chains(path3) == [], "a tree decomposes into zero chains")
    expect_raises(lambda: cc.chains(cc.Graph(2, [(0, 1)])), "chains need 3+ vertices")
    expect_raises(lambda: cc.chains(split), "chains need a connected graph")
    expect_raises(lambda: cc.check(k4, root=9), "root out of range")

    print(f"smoke test: {checks} checks passed")


if __name__ == "__main__":
    main()
