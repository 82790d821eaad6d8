from __future__ import annotations

import pytest

from trirep import fixtures


@pytest.fixture(scope="session")
def graphs():
    return {name: fixtures.load_graph(name) for name in fixtures.GRAPHS}


def abstract_isomorphic(adj1: dict, adj2: dict) -> bool:
    """Brute-force abstract graph isomorphism for small test graphs."""
    if len(adj1) != len(adj2):
        return False
    v1 = sorted(adj1, key=str)
    v2 = sorted(adj2, key=str)
    deg1 = sorted(len(adj1[v]) for v in v1)
    deg2 = sorted(len(adj2[v]) for v in v2)
    if deg1 != deg2:
        return False

    def extend(mapping: dict, remaining: list) -> bool:
        if not remaining:
            return True
        v = remaining[0]
        for w in v2:
            if w in mapping.values():
                continue
            if len(adj1[v]) != len(adj2[w]):
                continue
            ok = True
            for u in adj1[v]:
                if u in mapping and mapping[u] not in adj2[w]:
                    ok = False
                    break
            for u, wu in mapping.items():
                if wu in adj2[w] and u not in adj1[v]:
                    ok = False
                    break
            if ok and extend({**mapping, v: w}, remaining[1:]):
                return True
        return False

    return extend({}, v1)
