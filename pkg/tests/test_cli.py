import json

import pytest

from snchar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_column_csv(capsys):
    import csv as _csv

    code, out, _ = run(capsys, "column", "--n", "4", "--p", "2", "--mu", "4")
    assert code == 0
    header, row = list(_csv.reader(out.splitlines()))
    fields = dict(zip(header, row))
    assert fields["zero_count"] == "1"
    assert fields["proportion"] == "1/5"
    assert fields["core_floor"] == "1"
    assert fields["qualifies_threshold"] == "true"
    assert fields["regular_label"] == "1,1,1,1"


def test_column_csv_quotes_partitions(capsys):
    code, out, _ = run(capsys, "column", "--n", "4", "--p", "2", "--mu", "3,1")
    assert code == 0
    assert '"3,1"' in out


def test_column_json(capsys):
    code, out, _ = run(capsys, "column", "--n", "4", "--p", "2", "--mu", "4",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == [
        {
            "n": 4,
            "p": 2,
            "mu": "4",
            "regular_label": "1,1,1,1",
            "zero_count": 1,
            "total": 5,
            "proportion": "1/5",
            "proportion_float": 0.2,
            "qualifies_threshold": True,
            "witness_index": 1,
            "witness_exponent": 2,
            "qualifies_few_parts": True,
            "core_floor": 1,
        }
    ]


def test_column_exact_flag_same_output(capsys):
    _, fast, _ = run(capsys, "column", "--n", "6", "--p", "3", "--mu", "3,2,1")
    _, slow, _ = run(capsys, "column", "--n", "6", "--p", "3", "--mu", "3,2,1", "--exact")
    assert fast == slow


def test_column_invalid_inputs(capsys):
    assert run(capsys, "column", "--n", "4", "--p", "4", "--mu", "4")[0] == 2
    assert run(capsys, "column", "--n", "5", "--p", "2", "--mu", "4")[0] == 2
    assert run(capsys, "column", "--n", "4", "--p", "2", "--mu", "1,4")[0] == 2


def test_census_output(capsys):
    code, out, err = run(capsys, "census", "--n", "6", "--p", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# census n=6 p=2 divisible=")
    assert lines[1].split(",")[:4] == ["n", "p", "label", "fiber_size"]
    assert "cache: hits=0" in err


def test_census_deterministic_and_job_independent(capsys):
    runs = [
        run(capsys, "census", "--n", "10", "--p", "2")[1],
        run(capsys, "census", "--n", "10", "--p", "2")[1],
        run(capsys, "census", "--n", "10", "--p", "2", "--jobs", "2")[1],
    ]
    assert runs[0] == runs[1] == runs[2]


def test_census_cache_dir(tmp_path, capsys):
    first = run(capsys, "census", "--n", "8", "--p", "3", "--cache-dir", str(tmp_path))
    second = run(capsys, "census", "--n", "8", "--p", "3", "--cache-dir", str(tmp_path))
    assert first[1] == second[1]
    assert "misses=0" in second[2]


def test_census_json(capsys):
    code, out, _ = run(capsys, "census", "--n", "4", "--p", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["record"]["divisible_count"] == 6
    assert payload["record"]["table_size"] == 25
    # two odd-part labels: 3,1 (fiber size 1) and 1,1,1,1 (fiber size 4)
    assert len(payload["columns"]) == 2
    assert sum(col["fiber_size"] for col in payload["columns"]) == 5


def test_fibers_all_labels(capsys):
    code, out, _ = run(capsys, "fibers", "--n", "6", "--p", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,p,label,fiber_size,congruent"
    assert all(line.endswith("true") for line in lines[1:])
    # fiber sizes over all labels cover the 11 classes of degree 6
    assert sum(int(line.split(",")[-2]) for line in lines[1:]) == 11


def test_fibers_single_label(capsys):
    code, out, _ = run(capsys, "fibers", "--n", "3", "--p", "2",
                       "--lambda", "1,1,1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,p,label,mu,fiber_size,congruent"
    assert len(lines) == 3  # two fiber members


def test_fibers_rejects_irregular_label(capsys):
    assert run(capsys, "fibers", "--n", "4", "--p", "2", "--lambda", "2,2")[0] == 2


def test_theorem_check_single_label(capsys):
    code, out, _ = run(capsys, "theorem-check", "--n", "4", "--p", "2",
                       "--c", "0.4", "--lambda", "1,1,1,1", "--format", "json")
    assert code == 0
    payload = json.loads(out)[0]
    assert payload["qualifies_threshold"] is True
    assert payload["witness_exponent"] == 2
    assert payload["representative"] == "4"


def test_theorem_check_survey(capsys):
    import csv as _csv

    code, out, _ = run(capsys, "theorem-check", "--n", "12", "--p", "2", "--c", "0.4")
    assert code == 0
    rows = list(_csv.reader(out.splitlines()))
    assert len(rows) > 1
    zero_idx = rows[0].index("zero_count")
    floor_idx = rows[0].index("core_floor")
    for row in rows[1:]:
        assert int(row[zero_idx]) >= int(row[floor_idx])


def test_theorem_check_rejects_small_c(capsys):
    assert run(capsys, "theorem-check", "--n", "10", "--p", "2", "--c", "0.3")[0] == 2


def test_verify_bounds_growth_grid(capsys):
    code, out, _ = run(capsys, "verify-bounds", "--lemma", "1",
                       "--max-k", "4", "--max-m", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "check,k,m,lhs,rhs,relation,holds,slack,slack_float"
    assert len(lines) == 1 + 4 * 6


def test_verify_bounds_deficit_and_fiber(capsys):
    code, out, _ = run(capsys, "verify-bounds", "--lemma", "2", "--max-n", "12")
    assert code == 0
    assert "core-deficit" in out
    code, out, _ = run(capsys, "verify-bounds", "--lemma", "fiber", "--max-n", "12")
    assert code == 0
    assert "fiber-identity" in out


def test_verify_bounds_core_density(capsys):
    code, out, _ = run(capsys, "verify-bounds", "--lemma", "3", "--max-n", "10",
                       "--c", "0.4")
    assert code == 0
    assert "k_meets_threshold" in out.splitlines()[0]


def test_verify_bounds_hr(capsys):
    code, out, _ = run(capsys, "verify-bounds", "--lemma", "hr", "--max-m", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m,count,ratio"
    assert lines[1].startswith("1,1,0.0769115160333")


def test_verify_core_vanish(capsys):
    code, out, _ = run(capsys, "verify-core-vanish", "--max-n", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,core_count,class_count,pairs_checked,violations,ok"
    assert all(line.endswith("true") for line in lines[1:])


def test_verify_bounds_json(capsys):
    code, out, _ = run(capsys, "verify-bounds", "--lemma", "2", "--max-n", "6",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["check"] == "core-deficit"
    assert all(row["holds"] is True for row in payload)
    assert all("/" in row["slack"] for row in payload if row["slack"] is not None)


def test_corrupt_cache_store_exits_2(tmp_path, capsys):
    assert run(capsys, "census", "--n", "6", "--p", "2",
               "--cache-dir", str(tmp_path))[0] == 0
    victim = next(tmp_path.iterdir())
    victim.write_text(victim.read_text().replace("checksum=", "checksum=ff", 1))
    code, _, err = run(capsys, "census", "--n", "6", "--p", "2",
                       "--cache-dir", str(tmp_path))
    assert code == 2
    assert "invalid input" in err


def test_verify_cores_seeded(capsys):
    first = run(capsys, "verify-cores", "--max-n", "6", "--trials", "5", "--seed", "9")
    second = run(capsys, "verify-cores", "--max-n", "6", "--trials", "5", "--seed", "9")
    assert first[0] == 0
    assert first[1] == second[1]
    assert first[1].splitlines()[0] == "n,partitions,trials_per_partition,mismatches,ok"


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate"])
    assert excinfo.value.code == 2
