"""CLI subcommands: behavior, exit codes, stdout/stderr separation."""

import io
import subprocess
import sys

import pytest

from orthosyl.cli import run


def invoke(argv, stdin_text=""):
    """In-process invocation; returns (exit_status, stdout_text)."""
    out = io.StringIO()
    status = run(argv, stdin=io.StringIO(stdin_text), stdout=out)
    return status, out.getvalue()


def invoke_process(argv, stdin_text=""):
    """Real subprocess for stream-separation and exit-code checks."""
    return subprocess.run(
        [sys.executable, "-m", "orthosyl.cli", *argv],
        input=stdin_text,
        capture_output=True,
        text=True,
    )


MARATHI_W = "राजू , घराबाहेर जाऊ नको ."
MARATHI_O = "रा जू _ , _ घ रा बा हे र _ जा ऊ _ न को _ ."


class TestSegmentDesegment:
    def test_marathi_sentence(self):
        status, out = invoke(["segment", "--unit", "os"], MARATHI_W + "\n")
        assert status == 0
        assert out == MARATHI_O + "\n"

    def test_desegment_inverts(self):
        status, out = invoke(["desegment"], MARATHI_O + "\n")
        assert status == 0
        assert out == MARATHI_W + "\n"

    def test_pipe_identity_all_subword_schemes(self):
        lines = "राजू , घराबाहेर जाऊ नको .\nmumbai is a city\nпривет мир\n"
        for unit in ("char", "char-ngram=3", "os", "morph"):
            argv = ["segment", "--unit", unit]
            if unit == "morph":
                # no lexicon: words pass through whole but still get markers
                pass
            _, segmented = invoke(argv, lines)
            status, restored = invoke(["desegment"], segmented)
            assert status == 0
            assert restored == lines

    def test_word_scheme_is_identity(self):
        status, out = invoke(["segment", "--unit", "word"], MARATHI_W + "\n")
        assert status == 0
        assert out == MARATHI_W + "\n"

    def test_marker_collision_exit_1(self):
        proc = invoke_process(["segment", "--unit", "char"], "bad_word\n")
        assert proc.returncode == 1
        assert proc.stdout == ""
        assert "line 1" in proc.stderr

    def test_marker_collision_replace(self):
        status, out = invoke(
            ["segment", "--unit", "word", "--on-marker-collision", "replace"],
            "a_b\n",
        )
        assert status == 0
        assert out == "a▁b\n"

    def test_custom_marker(self):
        _, out = invoke(["segment", "--unit", "char", "--marker", "|"], "ab cd\n")
        assert out == "a b | c d\n"
        status, back = invoke(["desegment", "--marker", "|"], out)
        assert back == "ab cd\n"

    def test_forced_script(self):
        _, out = invoke(
            ["segment", "--unit", "os", "--script", "Devanagari"],
            "घर foreign\n",
        )
        assert out == "घ र _ foreign\n"

    def test_morph_lexicon_flag(self, tmp_path):
        lex = tmp_path / "lex.tsv"
        lex.write_text("घरासमोरचा\tघरा समोर चा\n", encoding="utf-8")
        _, out = invoke(
            ["segment", "--unit", "morph", "--morph-lexicon", str(lex)],
            "घरासमोरचा\n",
        )
        assert out == "घरा समोर चा\n"


class TestSyllabifyClassify:
    def test_syllabify_lines(self):
        status, out = invoke(["syllabify"], "लक्षमी\nmumbai\n")
        assert status == 0
        assert out == "ल क्ष मी\nmu mbai\n"

    def test_classify_dump(self):
        status, out = invoke(["classify", "--script", "Devanagari"], "कीq\n")
        assert status == 0
        assert out.splitlines() == [
            "क\tDevanagari\tConsonant",
            "ी\tDevanagari\tDependentVowel",
            "q\tDevanagari\tNonScript",
        ]

    def test_mixed_script_exit_1(self):
        proc = invoke_process(["syllabify"], "घरmix\n")
        assert proc.returncode == 1
        assert "line 1" in proc.stderr


class TestMetricsCommands:
    def test_score_bleu_self_is_100(self, tmp_path):
        hyp = tmp_path / "h.txt"
        hyp.write_text("the cat sat on the mat\n", encoding="utf-8")
        status, out = invoke(
            ["score", "--metric", "bleu", "--hyp", str(hyp), "--ref", str(hyp)]
        )
        assert status == 0
        assert out == "BLEU = 100.00\n"

    def test_score_lebleu_with_report(self, tmp_path):
        hyp = tmp_path / "h.txt"
        ref = tmp_path / "r.txt"
        report = tmp_path / "report.txt"
        hyp.write_text("gharasamora ahe nako ghara\n", encoding="utf-8")
        ref.write_text("gharasamor ahe nako ghara\n", encoding="utf-8")
        status, out = invoke(
            [
                "score", "--metric", "lebleu",
                "--hyp", str(hyp), "--ref", str(ref),
                "--report", str(report),
            ]
        )
        assert status == 0
        assert out.startswith("Le-BLEU = ")
        text = report.read_text(encoding="utf-8")
        assert "metric = lebleu" in text
        assert "precision_1 = " in text
        assert "delta = 0.6" in text

    def test_lcsr_summary_and_per_line(self, tmp_path):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text("abcd\nabc\n", encoding="utf-8")
        b.write_text("abed\nabc\n", encoding="utf-8")
        status, out = invoke(["lcsr", "--a", str(a), "--b", str(b)])
        assert status == 0
        assert out == "LCSR = 0.875000\n"
        _, out = invoke(["lcsr", "--a", str(a), "--b", str(b), "--per-line"])
        assert out == "0.750000\n1.000000\n"

    def test_correlate(self, tmp_path):
        files = {}
        for name, lines in (
            ("src", ["abc", "xyz"]),
            ("tgt", ["abc", "abc"]),
            ("hyp", ["pqr", "mno"]),
            ("ref", ["pqr", "zzz"]),
        ):
            path = tmp_path / f"{name}.txt"
            path.write_text("\n".join(lines) + "\n", encoding="utf-8")
            files[name] = str(path)
        status, out = invoke(
            [
                "correlate",
                "--src", files["src"], "--tgt", files["tgt"],
                "--hyp", files["hyp"], "--ref", files["ref"],
            ]
        )
        assert status == 0
        assert out == "Pearson = 1.000000\n"

    def test_nbest_rescore(self, tmp_path):
        nbest = tmp_path / "nbest.txt"
        ref = tmp_path / "ref.txt"
        nbest.write_text(
            "0 ||| रा जू _ न को ||| lm=-1 ||| -2.5\n", encoding="utf-8"
        )
        ref.write_text("राजू नको\n", encoding="utf-8")
        status, out = invoke(
            ["nbest-rescore", "--nbest", str(nbest), "--ref", str(ref)]
        )
        assert status == 0
        assert out == "0 ||| रा जू _ न को ||| lm=-1 ||| -2.5 ||| 100.0000\n"


class TestStatsSplit:
    def test_stats_line(self):
        status, out = invoke(["stats", "--unit", "os"], "घरासमोरचा\n")
        assert status == 0
        assert out == "os\t6\t6\t1.5000\n"

    def test_split_writes_three_files(self, tmp_path):
        prefix = tmp_path / "corpus"
        body = "".join(f"line {i}\n" for i in range(10))
        status, _ = invoke(
            ["split", "--sizes", "7,2,1", "--out-prefix", str(prefix)], body
        )
        assert status == 0
        assert (tmp_path / "corpus.train").read_text().splitlines() == [
            f"line {i}" for i in range(7)
        ]
        assert len((tmp_path / "corpus.tune").read_text().splitlines()) == 2
        assert len((tmp_path / "corpus.test").read_text().splitlines()) == 1

    def test_split_seeded_deterministic(self, tmp_path):
        body = "".join(f"line {i}\n" for i in range(10))
        outs = []
        for tag in ("x", "y"):
            prefix = tmp_path / tag
            invoke(
                ["split", "--sizes", "6,2,2", "--seed", "9", "--out-prefix", str(prefix)],
                body,
            )
            outs.append((tmp_path / f"{tag}.train").read_text())
        assert outs[0] == outs[1]

    def test_split_oversized_exit_1(self):
        proc = invoke_process(
            ["split", "--sizes", "5,1,1", "--out-prefix", "/tmp/x"], "one\n"
        )
        assert proc.returncode == 1
        assert "error" in proc.stderr


class TestContract:
    def test_usage_error_exit_2(self):
        proc = invoke_process(["no-such-command"])
        assert proc.returncode == 2
        assert proc.stdout == ""

    def test_missing_required_flag_exit_2(self):
        proc = invoke_process(["classify"])
        assert proc.returncode == 2

    def test_data_goes_to_stdout_only(self):
        proc = invoke_process(["segment", "--unit", "os"], MARATHI_W + "\n")
        assert proc.returncode == 0
        assert proc.stdout == MARATHI_O + "\n"
        assert proc.stderr == ""

    def test_diagnostics_go_to_stderr_only(self):
        proc = invoke_process(["desegment"], "a _ _ b\n")
        assert proc.returncode == 1
        assert proc.stdout == ""
        assert "line 1" in proc.stderr
