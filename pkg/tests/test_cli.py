"""CLI: job parsing, dispatch, determinism, exit codes."""

import json

import pytest

from fiblift.cli import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_UNDETERMINED,
    EXIT_USAGE,
    JobError,
    JobSpec,
    main,
    parse_job,
    run,
)

FACTOR_JOB = {
    "command": "factor",
    "fibration": {"kind": "codomain"},
    "maps": {
        "m": {"over": {"size": 1},
              "dom": {"dom": {"size": 0}, "cod": {"size": 1}, "table": []},
              "cod": {"dom": {"size": 1}, "cod": {"size": 1}, "table": [0]},
              "table": []},
        "f": {"over": {"size": 1},
              "dom": {"dom": {"size": 2}, "cod": {"size": 1}, "table": [0, 0]},
              "cod": {"dom": {"size": 1}, "cod": {"size": 1}, "table": [0]},
              "table": [0, 0]},
    },
    "cap": 4,
    "seed": 7,
}


def _write(tmp_path, doc, name="job.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc), encoding="utf-8")
    return str(p)


class TestParseJob:
    def test_minimal_job_fills_defaults(self, tmp_path):
        doc = dict(FACTOR_JOB)
        doc.pop("cap")
        doc.pop("seed")
        job = parse_job(_write(tmp_path, doc))
        assert job.cap == 6 and job.seed == 0

    def test_unknown_command(self, tmp_path):
        doc = dict(FACTOR_JOB, command="fly")
        with pytest.raises(JobError, match="unknown command"):
            parse_job(_write(tmp_path, doc))

    def test_zero_cap_rejected(self, tmp_path):
        doc = dict(FACTOR_JOB, cap=0)
        with pytest.raises(JobError, match="cap"):
            parse_job(_write(tmp_path, doc))

    def test_missing_map_id_named(self, tmp_path):
        doc = dict(FACTOR_JOB, maps={"m": FACTOR_JOB["maps"]["m"]})
        job = parse_job(_write(tmp_path, doc))
        with pytest.raises(JobError, match="undefined map id 'f'"):
            run(job)

    def test_malformed_json_reports_locus(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{\n  broken", encoding="utf-8")
        with pytest.raises(JobError, match="line"):
            parse_job(str(p))


class TestRun:
    def test_factor_job_results(self, tmp_path):
        job = parse_job(_write(tmp_path, FACTOR_JOB))
        report = run(job)
        assert report.status == "ok"
        assert report.results["K1"] == 3
        assert report.results["algebraCount"] == 2
        assert report.results["lawsOk"] and report.results["fibredOk"]

    def test_ulp_job(self, tmp_path):
        doc = dict(FACTOR_JOB, command="ulp")
        report = run(parse_job(_write(tmp_path, doc)))
        assert report.results["K"] == 1
        assert report.results["solutionCount"] == 2

    def test_cube_ext_interval_fails_with_witness(self):
        job = JobSpec("cube", "presheaf_codomain",
                      {"command": "cube", "cube": "ext", "classifier": "interval"},
                      6, 0)
        report = run(job)
        assert report.status == "failed"
        assert "a" in report.results["witness"] and "~a" in report.results["witness"]

    def test_cube_dm_sizes(self):
        for names, size in ((0, 2), (1, 6)):
            job = JobSpec("cube", "presheaf_codomain",
                          {"command": "cube", "cube": "dm", "names": names}, 6, 0)
            assert run(job).results["size"] == size

    def test_cube_face_size(self):
        job = JobSpec("cube", "presheaf_codomain",
                      {"command": "cube", "cube": "face", "names": 1}, 6, 0)
        assert run(job).results["size"] == 5

    def test_verify_kernel_suite(self):
        job = JobSpec("verify", "codomain",
                      {"command": "verify", "suite": "kernel"}, 2, 11)
        report = run(job)
        assert report.status == "ok"
        assert report.results["ran"] >= 60

    def test_free_algebra_undetermined_status(self, tmp_path):
        doc = dict(FACTOR_JOB, command="free-algebra")
        doc = json.loads(json.dumps(doc))
        doc["maps"]["m"] = {
            "over": {"size": 1},
            "dom": {"dom": {"size": 1}, "cod": {"size": 1}, "table": [0]},
            "cod": {"dom": {"size": 2}, "cod": {"size": 1}, "table": [0, 0]},
            "table": [0]}
        doc["maps"]["f"] = {
            "over": {"size": 1},
            "dom": {"dom": {"size": 2}, "cod": {"size": 1}, "table": [0, 0]},
            "cod": {"dom": {"size": 2}, "cod": {"size": 1}, "table": [0, 0]},
            "table": [0, 1]}
        doc["cap"] = 4
        report = run(parse_job(_write(tmp_path, doc)))
        assert report.status == "undetermined"


class TestDeterminism:
    def test_byte_identical_reports(self, tmp_path):
        path = _write(tmp_path, FACTOR_JOB)
        outputs = set()
        for _ in range(3):
            report = run(parse_job(path))
            outputs.add(report.to_json())
        assert len(outputs) == 1

    def test_seed_in_report(self, tmp_path):
        report = run(parse_job(_write(tmp_path, FACTOR_JOB)))
        doc = json.loads(report.to_json())
        assert doc["seed"] == 7


class TestExitCodes:
    def test_ok(self, tmp_path, capsys):
        assert main(["--job", _write(tmp_path, FACTOR_JOB)]) == EXIT_OK

    def test_usage_error(self, tmp_path, capsys):
        assert main(["--job", str(tmp_path / "missing.json")]) == EXIT_USAGE

    def test_failed(self, capsys):
        assert main(["cube", "ext", "--classifier", "interval"]) == EXIT_FAILED

    def test_out_file(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = main(["--job", _write(tmp_path, FACTOR_JOB), "--out", str(out)])
        assert code == EXIT_OK
        doc = json.loads(out.read_text(encoding="utf-8"))
        assert doc["results"]["K1"] == 3

    def test_text_format(self, tmp_path, capsys):
        main(["--job", _write(tmp_path, FACTOR_JOB), "--format", "text"])
        captured = capsys.readouterr()
        assert "status  : ok" in captured.out
