import json

import pytest

from main import EXIT_INPUT, EXIT_MAYBE, EXIT_OK, _limits, build_parser, main


@pytest.fixture
def example(data_dir):
    return str(data_dir / "aa-aba.srs")


def test_prove_prints_report(example, capsys):
    assert main(["prove", example]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("YES")
    assert "bound 2, 7 states" in out


def test_prove_non_terminating_is_maybe(data_dir, capsys):
    code = main(["prove", str(data_dir / "a-aa.srs"), "--max-steps", "100"])
    assert code == EXIT_MAYBE
    # one level per rewrite, so the default height limit of 64 is reached first
    assert "MAYBE  limit max_height reached" in capsys.readouterr().out


def test_prove_non_terminating_hits_step_limit_when_height_allows(data_dir, capsys):
    code = main(["prove", str(data_dir / "a-aa.srs"), "--max-steps", "100", "--max-height", "1000"])
    assert code == EXIT_MAYBE
    out = capsys.readouterr().out
    assert "MAYBE  limit max_steps reached" in out
    assert "steps: 100 rewrite" in out


def test_emitted_certificate_verifies(example, tmp_path, capsys):
    cert = tmp_path / "cert.json"
    dot = tmp_path / "cert.dot"
    assert main(["prove", example, "--emit-cert", str(cert), "--dot", str(dot)]) == EXIT_OK
    assert json.loads(cert.read_text(encoding="utf-8"))["bound"] == 2
    assert '1 -> 2 [label="a:1"]' in dot.read_text(encoding="utf-8")

    capsys.readouterr()
    assert main(["verify", str(cert)]) == EXIT_OK
    assert capsys.readouterr().out == "OK  certificate verified\n"


def test_tampered_certificate_is_rejected(example, tmp_path, capsys):
    path = tmp_path / "cert.json"
    main(["prove", example, "--emit-cert", str(path)])
    data = json.loads(path.read_text(encoding="utf-8"))
    data["edges"] = [
        e for e in data["edges"]
        if not (e["label"]["kind"] == "lambda" and (e["from"], e["to"]) == (4, 2))
    ]
    path.write_text(json.dumps(data), encoding="utf-8")

    capsys.readouterr()
    assert main(["verify", str(path)]) == EXIT_MAYBE
    assert capsys.readouterr().out.startswith("FAILED")


def test_stats_trace_and_full_check(example, capsys):
    assert main(["prove", example, "--stats", "--trace", "--full-recompute-check"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "statistics:" in out
    assert "speed-up" in out or "full" in out
    assert "rewrite" in out
    assert "#0" in out


def test_preset_and_overrides(example):
    args = build_parser().parse_args(["prove", example, "--preset", "quick", "--max-height", "5"])

    limits = _limits(args)
    assert limits.max_height == 5
    assert args.preset == "quick"


@pytest.mark.parametrize("text", ["-> a\n", "a b\n", ""])
def test_bad_srs_is_input_error(tmp_path, capsys, text):
    path = tmp_path / "bad.srs"
    path.write_text(text, encoding="utf-8")
    assert main(["prove", str(path)]) == EXIT_INPUT
    assert capsys.readouterr().err.startswith("error:")


def test_missing_file_is_input_error(tmp_path, capsys):
    assert main(["prove", str(tmp_path / "nope.srs")]) == EXIT_INPUT
    assert "cannot read" in capsys.readouterr().err


def test_malformed_certificate_json_is_input_error(tmp_path, capsys):
    path = tmp_path / "cert.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["verify", str(path)]) == EXIT_INPUT
    assert "line 1" in capsys.readouterr().err


def test_chain_dump(example, capsys):
    assert main(["chain", example]) == EXIT_OK
    assert capsys.readouterr().out.startswith("chain: ")


def test_bench_small_suite(capsys):
    assert main(["bench", "--letters", "2", "--no-compare"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "suite: 2 letters" in out
    assert "outcome: success" in out


def test_bench_rejects_zero_letters(capsys):
    assert main(["bench", "--letters", "0"]) == EXIT_INPUT


def test_stats_report_delta_sizes(example, capsys):
    assert main(["prove", example, "--stats"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    deltas = next(line for line in lines if line.strip().startswith("deltas"))
    assert "entries over" in deltas
    assert "largest" in deltas
    assert any(line.strip().startswith("busiest") for line in lines)


def test_bench_defaults_to_nine_letters():
    args = build_parser().parse_args(["bench"])
    assert args.letters == 9
    assert not args.no_compare
