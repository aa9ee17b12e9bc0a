import pytest

from src.corpus import Check, CheckResult, Corpus, draw_int, draw_x
from src.errors import DomainError
from src.identities import IdentityId, NearOneTol, WideTol
from src.representations import DigammaSum
from src.sums import SumIdentity

Verified = ['ctg-sum', 'csc2-sum', 'sec-2pi-step', 'alternating-sec', 'tg-sum', 'rational-half-grid+', 'rational-full-grid', 'half-grid-uncorrected',
            'dht-roundtrip', 'digamma-hartley']


@pytest.fixture(scope='module')
def corpus():
    return Corpus()


def test_registry(corpus):
    assert len(corpus) == len(IdentityId) + 3 + len(SumIdentity) + len(DigammaSum)
    assert corpus.groups == ['digamma', 'functional', 'special', 'trig']
    assert corpus['ctg-sum'].Group == 'trig' and not corpus['ctg-sum'].Inverted
    assert corpus['half-grid-uncorrected'].Inverted
    assert all(c.Group == 'digamma' for c in corpus.select(group='digamma'))
    assert [c.Name for c in corpus.select(['dht-roundtrip', 'ctg-sum'])] == ['dht-roundtrip', 'ctg-sum']
    assert corpus.select(['dht-roundtrip'], group='digamma') == []


def test_unknown_check(corpus):
    with pytest.raises(DomainError):
        corpus.get('cot-sum')
    with pytest.raises(DomainError):
        corpus.run(1, names=['cot-sum'])


def test_register_and_remove():
    corpus = Corpus()
    n = len(corpus)
    corpus.register(Check('ctg-sum', 'trig', None, None))
    assert len(corpus) == n
    assert corpus.remove('ctg-sum').Name == 'ctg-sum' and len(corpus) == n - 1
    assert corpus.remove('ctg-sum') is None


def test_show(corpus):
    rows = corpus.show(prnt=False)
    assert len(rows) == len(corpus) and rows[0][:2] == [IdentityId.EulerProduct.value, 'trig']


def test_run_verified_checks(corpus):
    results = corpus.run(draws=4, seed=7, names=Verified)
    assert [r.name for r in results] == Verified
    for r in results:
        assert r.ok, r
        assert r.draws + r.rejected == 4


def test_inverted_check(corpus):
    result = corpus.run(draws=5, seed=3, names=['half-grid-uncorrected'])[0]
    assert result.ok and result.inverted and result.worst > result.tol


def test_run_is_reproducible(corpus):
    first, second = (corpus.run(draws=3, seed=11, names=['rational-odd-grid+']) for _ in range(2))
    assert first[0].worst == second[0].worst


def test_run_digamma_group(corpus):
    results = corpus.run(draws=2, seed=5, group='digamma')
    assert len(results) == len(DigammaSum) and all(r.ok for r in results)


def test_run_sum_identities(corpus):
    results = corpus.run(draws=2, seed=5, names=[SumIdentity.Reflection.value])
    assert results[0].ok


def test_run_draws_validation(corpus):
    with pytest.raises(DomainError):
        corpus.run(draws=0)


def test_rejected_draws():
    def evaluate(p):
        raise DomainError('never valid')
    check = Check('never', 'test', lambda rng: ({}, 1.), evaluate)
    with pytest.raises(DomainError):
        check(None)
    corpus = Corpus()
    result = corpus.run_check(check, 3, None)
    assert result.rejected == 3 and result.draws == 0 and not result.ok


def test_check_passes():
    check = Check('c', 'g', None, None)
    assert check.passes(1e-21, WideTol) and not check.passes(1e-19, WideTol)
    inverted = Check('c', 'g', None, None, inverted=True)
    assert inverted.passes(1e-19, WideTol) and not inverted.passes(0, WideTol)
    assert repr(inverted) == 'g check c (inverted): c'


def test_check_result():
    r = CheckResult('c', 'g', 3, 3, 1e-25, WideTol, 0, False)
    assert r.ok and r.row()['ok']
    assert not CheckResult('c', 'g', 3, 2, 1e-10, WideTol, 0, False).ok
    assert len(Corpus.show_results([r], prnt=False)) == 1


def test_draws(rng):
    assert all(draw_int(rng, 1, 11, odd=True) % 2 == 1 for _ in range(50))
    assert all(3 <= draw_int(rng, 3, 5) <= 5 for _ in range(50))
    for _ in range(50):
        x, tol = draw_x(rng)
        assert abs(x) > .05 and abs(abs(x) - 1) > 1e-6
        assert tol in (WideTol, NearOneTol)
