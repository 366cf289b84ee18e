import json

import pytest

from conftest import data_path
from virality.cli import main
from virality.corpus_io import Tweet, dump_tweets


@pytest.fixture(scope="module")
def workdir(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")
    assert main(["synth", "--kind", "labeled", "-n", "1600", "--seed", "1", "-o", str(root / "labeled.tsv")]) == 0
    assert main(["synth", "--kind", "tweets", "-n", "3000", "--seed", "2", "--news-boost", "0.5",
                 "-o", str(root / "tweets.jsonl")]) == 0
    assert main(["train-news", str(root / "labeled.tsv"), "-o", str(root / "model.json")]) == 0
    return root


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_train_news_summary(capsys, tmp_path):
    code, out, _ = run(capsys, ["train-news", data_path("labeled_small.tsv"), "--split", "0.5",
                                "-o", str(tmp_path / "m.json")])
    assert code == 0
    rows = dict(line.split("\t") for line in out.splitlines())
    assert rows["sentences"] == "10" and rows["news"] == "4" and rows["other"] == "6"
    assert rows["repeats"] == "1"
    assert (tmp_path / "m.json").exists()


def test_train_news_repeats(capsys, workdir):
    code, out, _ = run(capsys, ["train-news", str(workdir / "labeled.tsv"), "--repeats", "3"])
    assert code == 0
    rows = dict(line.split("\t") for line in out.splitlines())
    assert rows["repeats"] == "3"
    assert float(rows["accuracy_mean"]) > 0.95


def test_classify(capsys, workdir):
    code, out, err = run(capsys, ["classify", data_path("fixture_tweets.jsonl"), "-m", str(workdir / "model.json")])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "id\tp_news" and len(lines) == 13
    assert all(0.0 <= float(l.split("\t")[1]) <= 1.0 for l in lines[1:])
    assert "rate of news" in err


def test_sentiment(capsys, tmp_path):
    path = tmp_path / "t.jsonl"
    with open(path, "w") as fh:
        dump_tweets([Tweet("a", "abandon abandon love"), Tweet("b", "pizza")], fh)
    code, out, _ = run(capsys, ["sentiment", str(path)])
    assert code == 0
    assert out.splitlines() == ["id\tvalence\tarousal\tnegative", "a\t-1\t7\t1", "b\t0\t0\t0"]
    code, out, _ = run(capsys, ["sentiment", str(path), "--negative-policy", "word"])
    assert out.splitlines()[2] == "b\t0\t0\t0"


def test_features(capsys, workdir):
    code, out, _ = run(capsys, ["features", data_path("fixture_tweets.jsonl"), "-m", str(workdir / "model.json"),
                                "--interaction-mode", "and"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "id\tf0\thashtag\tmention\turl\tnegative\tinteraction\tretweet"
    assert {float(l.split("\t")[6]) for l in lines[1:]} <= {0.0, 1.0}


def test_analyze_tsv_and_determinism(capsys, workdir):
    argv = ["analyze", str(workdir / "tweets.jsonl"), "-m", str(workdir / "model.json"), "--arousal-filter"]
    code, first, _ = run(capsys, argv)
    assert code == 0
    _, second, _ = run(capsys, argv)
    assert first == second
    lines = first.splitlines()
    assert lines[0] == "quantity\ttweets"
    assert lines[1].startswith("N\t") and lines[2].startswith("Rate of News\t")
    assert "Only tweets with Arousal > 0\t" in lines


def test_analyze_json_to_file(capsys, workdir, tmp_path):
    out = tmp_path / "r.json"
    code, stdout, _ = run(capsys, ["analyze", str(workdir / "tweets.jsonl"), "--labeled-corpus",
                                   str(workdir / "labeled.tsv"), "--format", "json", "-o", str(out),
                                   "--name", "Synthetic"])
    assert code == 0 and stdout == ""
    report = json.loads(out.read_text())
    assert report["corpus"] == "Synthetic"
    assert report["news_model"]["source"] == "trained"


@pytest.mark.parametrize("value, expected", [("false", False), ("0", False), ("True", True), ("yes", True)])
def test_require_declared_lang_parsing(capsys, workdir, tmp_path, value, expected):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, ["analyze", str(workdir / "tweets.jsonl"), "-m", str(workdir / "model.json"),
                              "--require-declared-lang", value, "--format", "json", "-o", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["config"]["require_declared"] is expected


def test_require_declared_lang_rejects_garbage(capsys, workdir):
    code, _, err = run(capsys, ["analyze", str(workdir / "tweets.jsonl"), "-m", str(workdir / "model.json"),
                                "--require-declared-lang", "maybe"])
    assert code == 1
    assert "boolean" in err


def test_no_language_filter_stage_list(capsys, workdir, tmp_path):
    out = tmp_path / "r.json"
    run(capsys, ["analyze", str(workdir / "tweets.jsonl"), "-m", str(workdir / "model.json"),
                 "--no-language-filter", "--format", "json", "-o", str(out)])
    stages = json.loads(out.read_text())["stages"]
    assert stages == [["loaded", 3000]]


def test_empty_covariates_header_only(capsys, workdir):
    code, out, _ = run(capsys, ["analyze", str(workdir / "tweets.jsonl"), "-m", str(workdir / "model.json"),
                                "--covariates", ""])
    assert code == 0
    assert out == "quantity\ttweets\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "TWEETS"],  # neither model nor labeled corpus
        ["analyze", "TWEETS", "-m", "MODEL", "--covariates", "followers"],
        ["analyze", "TWEETS", "-m", "MODEL", "--split", "1.5"],
        ["analyze", "/does/not/exist.jsonl", "-m", "MODEL"],
        ["synth", "--beta", "a,b"],
        ["no-such-command"],
    ],
)
def test_usage_errors_exit_1(capsys, workdir, argv):
    argv = [a.replace("TWEETS", str(workdir / "tweets.jsonl")).replace("MODEL", str(workdir / "model.json"))
            for a in argv]
    code, _, _ = run(capsys, argv)
    assert code == 1


def test_malformed_input_exit_2(capsys, workdir, tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"id": "1", "text": "the summit"}\n{not json\n')
    code, _, err = run(capsys, ["analyze", str(path), "-m", str(workdir / "model.json")])
    assert code == 2
    assert "bad.jsonl:2:" in err


def test_skip_malformed(capsys, workdir, tmp_path):
    path = tmp_path / "mixed.jsonl"
    text = (workdir / "tweets.jsonl").read_text()
    path.write_text("{not json\n" + text)
    code, out, _ = run(capsys, ["analyze", str(path), "-m", str(workdir / "model.json"), "--skip-malformed"])
    assert code == 0
    assert out.startswith("quantity\tmixed\n")


def test_nonconvergence_exit_3(capsys, workdir):
    # twelve hand-written tweets cannot support a five-covariate fit
    code, out, err = run(capsys, ["analyze", data_path("fixture_tweets.jsonl"), "-m", str(workdir / "model.json")])
    assert code == 3
    assert out.startswith("quantity\tfixture_tweets\n")
    assert "converge" in err


def test_synth_features_table(capsys):
    code, out, _ = run(capsys, ["synth", "-n", "5", "--seed", "3"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "id\tf0\tx1\tx2\tx3\tx4\tx5\tretweet"
    assert len(lines) == 6
    code, again, _ = run(capsys, ["synth", "-n", "5", "--seed", "3"])
    assert again == out


def test_help(capsys):
    code, out, _ = run(capsys, ["--help"])
    assert code == 0
    for command in ("analyze", "classify", "features", "sentiment", "synth", "train-news"):
        assert command in out
