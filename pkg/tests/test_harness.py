import json

import pytest

from gsq import harness
from gsq.corpus import CorpusSpec, parse_graph6
from gsq.errors import TooLargeError
from gsq.graph import canonical_form, complete_graph, cycle_graph, empty_graph, line_graph, square
from gsq.chordality import is_chordal
from gsq.harness import (COUNTEREXAMPLE, HOLDS, IMPLICATIONS, STATEMENTS, VACUOUS, Target, TheoremId,
                         check_theorem, cycle_length_counts, mine_obstructions, parse_ids,
                         recheck_payload, verify_corpus, _flower_cert, _sprout_cert)
from gsq.named import chordal_sunflower_5, f4
from gsq.witnesses import extract_flower, extract_sprout


def test_every_id_has_a_distinct_statement():
    assert set(STATEMENTS) == set(TheoremId)
    assert len(set(STATEMENTS.values())) == len(TheoremId)


def test_parse_ids():
    assert parse_ids("all") == list(TheoremId)
    assert set(parse_ids("implications")) == IMPLICATIONS
    assert parse_ids("duchet, CAMERON") == [TheoremId.DUCHET, TheoremId.CAMERON]
    with pytest.raises(ValueError):
        parse_ids("NOPE")


def test_check_theorem_examples():
    assert check_theorem(TheoremId.DUCHET, cycle_graph(5)).status == HOLDS
    assert check_theorem(TheoremId.FLOWER_EQUIV, f4()).status == HOLDS
    assert check_theorem(TheoremId.LG_SQUARE_EQUIV, cycle_graph(6)).status == HOLDS
    assert check_theorem(TheoremId.LS_EQUIV, chordal_sunflower_5()).status == HOLDS
    assert check_theorem(TheoremId.CAMERON, cycle_graph(5)).status == VACUOUS
    assert check_theorem(TheoremId.SPROUT_EQUIV, cycle_graph(6)).status == HOLDS
    with pytest.raises(TooLargeError):
        check_theorem(TheoremId.FLOWER_EQUIV, empty_graph(10))


def test_cycle_length_counts():
    assert cycle_length_counts(cycle_graph(4)) == {4: 1}
    assert cycle_length_counts(complete_graph(4)) == {3: 4, 4: 3}
    assert cycle_length_counts(empty_graph(3)) == {}


def test_counterexample_payload_rechecks():
    # feed the sufficiency check a hypothesis that does not hold for C6
    v = harness._sufficient(cycle_graph(6), True)
    assert v.status == COUNTEREXAMPLE
    g = parse_graph6(v.payload["graph6"])
    assert recheck_payload(g, v.payload)
    tampered = json.loads(json.dumps(v.payload))
    tampered["certificates"][0]["cycle"][0:2] = tampered["certificates"][0]["cycle"][1::-1]
    assert not recheck_payload(g, tampered)


def test_recheck_witness_certificates():
    c8 = cycle_graph(8)
    cert = _flower_cert(extract_flower(c8, (0, 2, 4, 6)))
    assert recheck_payload(c8, {"certificates": [cert]})
    assert not recheck_payload(complete_graph(8), {"certificates": [cert]})
    c6 = cycle_graph(6)
    cert = _sprout_cert(extract_sprout(c6, (0, 2, 4, 5)))
    assert recheck_payload(c6, {"certificates": [cert]})
    # L(C6)^2 is not chordal, so no ordering can pass as a PEO
    peo = {"kind": "peo", "of": "L(G)^2", "order": list(range(6))}
    assert not recheck_payload(c6, {"certificates": [peo]})
    assert recheck_payload(c6, {"certificates": [{"kind": "peo", "of": "G^3", "order": list(range(6))}]})


def test_verify_corpus_file(tmp_path):
    path = tmp_path / "k4.g6"
    path.write_text("C~\n")
    report = verify_corpus(CorpusSpec.file(str(path)), [TheoremId.DIAMETER_COMPLETE])
    assert report.summary()["DIAMETER_COMPLETE"][HOLDS] == 1 and report.ok


def test_verify_corpus_random_is_deterministic():
    spec = CorpusSpec.random(10, 0.3, 1000, 42)
    ids = parse_ids("implications")
    a = verify_corpus(spec, ids).to_json()
    b = verify_corpus(spec, ids, jobs=4).to_json()
    assert a == b
    assert json.loads(a)["counterexamples"] == []


def test_verify_corpus_exhaustive_six_all_ids():
    report = verify_corpus(CorpusSpec.exhaustive(6), parse_ids("all"), jobs=4)
    d = report.to_dict()
    assert d["graphs"] == 1 + 2 + 4 + 11 + 34 + 156
    assert d["counterexamples"] == [] and d["version"] == harness.REPORT_VERSION
    for counts in d["summary"].values():
        assert sum(counts.values()) == d["graphs"]


def test_report_skips_graphs_beyond_bounds():
    big = [empty_graph(10)]
    report = verify_corpus(CorpusSpec.random(10, 0, 1, 0), [TheoremId.FLOWER_EQUIV], graphs=big)
    assert report.summary()["FLOWER_EQUIV"]["SKIPPED"] == 1


def test_mine_obstructions_examples():
    assert mine_obstructions(Target.SQUARE, 4) == []
    assert mine_obstructions(Target.LG_SQUARE, 4) == []
    found = mine_obstructions(Target.LG_SQUARE, 6)
    assert canonical_form(cycle_graph(6)) in {canonical_form(g) for g in found}
    sq = mine_obstructions(Target.SQUARE, 6)
    assert canonical_form(cycle_graph(6)) in {canonical_form(g) for g in sq}
    for g in sq:
        assert not is_chordal(square(g)).chordal
    with pytest.raises(TooLargeError):
        mine_obstructions(Target.SQUARE, 9)


def test_graph_key_is_isomorphism_invariant():
    from gsq.graph import relabel
    g = f4()
    assert harness.graph_key(g) == harness.graph_key(relabel(g, [7, 6, 5, 4, 3, 2, 1, 0]))
