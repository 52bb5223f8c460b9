from cubicsurf import data
from cubicsurf.verify import run_checks


def test_all_checks_pass():
    results = run_checks()
    assert results and all(r.ok for r in results), [r.line() for r in results if not r.ok]
    ids = [r.id for r in results]
    assert len(ids) == len(set(ids))
    for prefix in ("schlafli.", "weyl.", "chars.", "counting."):
        assert any(i.startswith(prefix) for i in ids)


def test_corrupted_entry_names_the_relation():
    values = {k: list(v) for k, v in data.CHARACTER_VALUES.items()}
    values["2,4"][data.BASE_IRREPS.index("V20")] += 1
    results = {r.id: r for r in run_checks(values, only=["chars"])}
    assert not results["chars.orthogonality"].ok
    assert "row <" in results["chars.orthogonality"].detail


def test_only_filter():
    results = run_checks(only=["schlafli"])
    assert {r.id.split(".")[0] for r in results} == {"schlafli"}
