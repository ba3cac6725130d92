from qcsd.data import KNOWN_PARAMS, TABLE_ENTRIES, EntryStatus, is_novel
from qcsd.weights import Family


def test_table_size():
    assert len(TABLE_ENTRIES) == 64
    assert len({e.poly for e in TABLE_ENTRIES}) == 64


def test_exactly_two_suspects():
    suspects = [e.poly for e in TABLE_ENTRIES if e.status is EntryStatus.DATA_SUSPECT]
    assert suspects == ["111000111101011", "111000011110111"]


def test_valid_entries_consistent():
    for e in TABLE_ENTRIES:
        if e.valid:
            assert len(e.poly) == e.K
            assert e.poly.count("1") == e.ones
            assert e.poly[0] == e.poly[-1] == "1"
            assert e.beta in (140, 280, 350, 420)


def test_known_params_unique_and_even():
    keys = [(kp.family, kp.gamma, kp.beta) for kp in KNOWN_PARAMS]
    assert len(keys) == len(set(keys))
    assert all(kp.beta % 2 == 0 for kp in KNOWN_PARAMS)


def test_known_lists_present():
    triples = {(kp.family, kp.gamma, kp.beta) for kp in KNOWN_PARAMS}
    assert (Family.W70_1, 1, 416) in triples
    for beta in (1012, 460, 414, 368, 322, 276, 230, 184, 138):
        assert (Family.W70_1, 0, beta) in triples
    for beta in range(230, 541, 10):
        assert (None, None, beta) in triples
    for beta in range(102, 613, 34):
        assert (Family.W70_1, 0, beta) in triples
    for beta in (618, 640, 662, 684, 706):
        assert (Family.W70_1, 11, beta) in triples
    for beta in (684, 750, 772, 794):
        assert (Family.W70_1, 22, beta) in triples
    for beta in (88, 528, 204, 842):
        assert (Family.W70_2, None, beta) in triples


def test_novelty():
    assert is_novel(Family.W70_1, 0, 140) is True
    assert is_novel(Family.W70_1, 0, 350) is False  # beta-only [13] entry
    assert is_novel(Family.W70_1, 0, 420) is False
    assert is_novel(Family.W70_1, 0, 280) is False
    assert is_novel(Family.W70_1, 1, 416) is False
    assert is_novel(Family.W70_1, 2, 416) is True
    assert is_novel(Family.W70_2, None, 88) is False
    assert is_novel(Family.UNKNOWN, None, 140) is None
