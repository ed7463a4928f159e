import random

from splicenorm.checks import check_diagram, run_corpus, trial_seed


def test_len_passes(len_diagram):
    assert check_diagram(len_diagram, random.Random(0)) == []


def test_trefoil_passes(trefoil_diagram):
    assert check_diagram(trefoil_diagram, random.Random(0)) == []


def test_corpus_reproducible():
    a = run_corpus(5, 2)
    b = run_corpus(5, 2)
    assert a.checked == b.checked == 5
    assert a.ok and b.ok
    assert trial_seed(2, 3) == 2 * 1_000_003 + 3


def test_detects_planted_failure(len_diagram, monkeypatch):
    import splicenorm.checks as checks
    real = checks.thurston_norm_by_nodes
    monkeypatch.setattr(checks, "thurston_norm_by_nodes", lambda d, phi: real(d, phi) + 1)
    fails = check_diagram(len_diagram, random.Random(0), 5)
    assert len(fails) == 5 and "node form" in fails[0]
