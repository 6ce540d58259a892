import random

from shiftequiv.graphs import MultiDigraph

_acceptance = {}


def pytest_runtest_logreport(report):
    if "acceptance" not in report.keywords:
        return
    if report.failed:
        _acceptance[report.nodeid] = "FAIL"
    elif report.when == "call" and report.nodeid not in _acceptance:
        _acceptance[report.nodeid] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if _acceptance:
        terminalreporter.section("acceptance criteria")
        for nodeid, outcome in _acceptance.items():
            terminalreporter.write_line(f"{outcome} {nodeid.split('::')[-1]}")


def random_graph(rng: random.Random, max_vertices: int = 6, max_edges: int = 12) -> MultiDigraph:
    n = rng.randint(1, max_vertices)
    names = [f"q{i}" for i in range(n)]
    edges = [(f"e{k}", rng.choice(names), rng.choice(names)) for k in range(rng.randint(0, max_edges))]
    return MultiDigraph.build(names, edges)
