"""Smoke test for the sofic_py extension module.

Build the module first (see README), then run:

    PYTHONPATH=target/debug python3 python/smoke_test.py
"""

import sofic_py as s

g = s.Graph(
    ["q1", "q2", "q3"],
    [("q1", "0", "q1"), ("q1", "1", "q2"), ("q2", "1", "q2"), ("q2", "0", "q3"), ("q3", "0", "q2")],
)
h = s.Graph(["q2", "q3"], [("q2", "1", "q2"), ("q2", "0", "q3"), ("q3", "0", "q2")])
assert g.essentialize() == g
assert len(g.components()) == 2
assert g.is_deterministic() and not g.is_irreducible()
assert h.is_irreducible()

assert not s.is_synchronizing(g)
assert s.is_synchronizing(h)
word = s.synchronizing_word(h)
assert word is not None and len({h.step(q, word) for q in h.vertices} - {None}) == 1

assert s.decide_equality(g, h)
assert s.decide_subshift(h, g)
assert s.separating_word(h, g) is None
assert not s.decide_sft(h)
assert s.decide_irreducibility(g)
assert s.decide_minimality(g, 2)
assert not s.decide_minimality(g, 1)

iso = s.are_isomorphic(h, s.follower_separation(h))
assert iso is not None

fam = s.family_mik(3)
assert len(fam) == 4
assert all(d.accepts(s.word_wk(3)) for d in fam)
assert len(s.dfa_intersection_shortest(fam)) == 8

gn = s.padded_family_gn(12)
assert len(gn) == 12

again = s.Graph.parse(h.to_text("H"))[0]
assert again == h

try:
    s.Graph(["a"], [("a", "x", "missing")])
except s.SoficError:
    pass
else:
    raise AssertionError("expected SoficError")

status, out, _ = s.run_cli(["essential", "-"], g.to_text("G"))
assert status == 0 and "edge q2 0 q3" in out, out

print("sofic_py smoke test passed")
