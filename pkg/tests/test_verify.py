import json

import pytest

from tourpaths.catalog import figure
from tourpaths.core import InvalidArgumentError, Tournament, delete_arc
from tourpaths.embed import contains_path
from tourpaths.pathtype import directed, parse_type
from tourpaths.catalog import is_special_exception
from tourpaths.verify import (
    REPORT_VERSION,
    Violation,
    VerificationReport,
    catalog_pairs,
    merge_reports,
    replay,
    run_suite,
    verify_catalog,
    verify_corollaries,
    verify_grunbaum,
    verify_ht,
    verify_main_theorem,
    verify_observations,
    verify_redei,
)


def stable(rep: VerificationReport) -> dict:
    d = rep.to_dict()
    d.pop("wall_time")
    d.pop("shard")
    return d


def test_report_json_round_trip():
    rep = VerificationReport("main", 8, "0/1", 3, [Violation("main", "trnd 3 a0 0 1", "+(2)", (0, 1), "a", "b", [0, 1, 2])],
                             0.5, {"k": 1})
    doc = json.loads(rep.to_json())
    assert doc["version"] == REPORT_VERSION and doc["passed"] is False
    back = VerificationReport.from_dict(doc)
    assert back == rep
    assert "FAIL" in rep.to_text()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ht_small_orders(n):
    rep = verify_ht(n)
    assert rep.passed, rep.to_text()
    assert rep.details["exception_hits"] > 0


def test_ht_hits_at_five_name_catalog_entries():
    hits = verify_ht(5).details["hit_ids"]
    allowed = {f"Exc{i}" for i in range(4, 13)}
    for rid in hits:
        base = rid.removeprefix("Dual")
        assert base in allowed or "(" in base


def test_exc0_is_an_exception_not_a_violation():
    rep = verify_ht(3)
    assert "Exc0" in rep.details["hit_ids"] or "DualExc0" in rep.details["hit_ids"]


def test_ht_order_guard():
    with pytest.raises(InvalidArgumentError):
        verify_ht(2)


def test_violations_replay():
    reps = [verify_ht(6), verify_corollaries(6), verify_main_theorem(6)]
    seen = 0
    for rep in reps:
        for v in rep.violations[:40]:
            assert replay(v) == v.observed, v
            seen += 1
    assert seen


def test_sharded_main_equals_unsharded():
    whole = verify_main_theorem(6)
    parts = [verify_main_theorem(6, (i, 3)) for i in range(3)]
    assert stable(merge_reports(parts)) == stable(whole)


def test_main_is_deterministic():
    assert stable(verify_main_theorem(5)) == stable(verify_main_theorem(5))


def test_main_slice_at_eight():
    rep = verify_main_theorem(8, (0, 64))
    assert rep.passed and rep.instances > 0
    assert rep.details["special_triples"] == rep.details["missing_triples"]


def test_transitive_source_sink_deletion():
    t = Tournament.transitive(8)
    d = delete_arc(t, 0, 7)
    assert contains_path(d, directed(8)) is not None
    assert not is_special_exception(t, directed(8), 0, 7)


def test_origin_corollaries_at_five():
    rep = verify_corollaries(5)
    assert rep.passed and rep.details["corollary2_pairs"] > 0


def test_classical_suites():
    assert verify_redei(6).passed
    rep = verify_grunbaum(6)
    assert rep.passed and rep.details["failures_by_order"] == {"3": 1, "5": 1}


def test_catalog_suite():
    rep = verify_catalog()
    assert rep.passed and rep.instances == 52
    assert {"Exc3", "Exc7", "Exc9", "Exc19"} <= set(rep.details["flagged"])


def test_observations_up_to_six():
    rep = verify_observations(max_order=6, max_filler=3)
    assert rep.passed, rep.to_text()
    assert rep.details["obs1_checked"] > 0 and rep.details["obs2_nonstrong"] > 0


def test_catalog_pairs_are_distinct():
    pairs = catalog_pairs(6, 2)
    keys = {(cp.tournament.n, cp.path_type.code, cp.tournament.bits) for cp in pairs}
    assert len(keys) == len(pairs)
    assert any("Exc2" in cp.ids for cp in pairs)


def test_run_suite_dispatch():
    assert run_suite("redei", 4).suite == "redei"
    with pytest.raises(InvalidArgumentError):
        run_suite("nope")


def test_workers_merge_deterministically():
    one = verify_main_theorem(6)
    two = verify_main_theorem(6, workers=2)
    assert stable(one) == stable(two)
