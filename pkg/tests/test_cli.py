import json

import pytest

from gyrokit.cli import analyze_object, main
from gyrokit.commutator import commutator_subgyrogroup, nc_commutator
from gyrokit.gyrofile import (
    GyroParseError,
    format_gyro,
    load_table,
    parse_gyro,
    save_table,
)
from gyrokit.normality import is_normal
from gyrokit.nuclei import left_nucleus, lg_prime, lg_sharp, lmlt, radical, right_nucleus
from gyrokit.substructure import enumerate_subgyrogroups


@pytest.fixture
def corpus_dir(tmp_path_factory, corpus):
    d = tmp_path_factory.mktemp("corpus")
    for name, table in corpus.items():
        save_table(d / f"{name}.gyro", table)
    return d


class TestGyroFormat:
    def test_round_trip(self, corpus):
        for g in corpus.values():
            text = format_gyro(g)
            assert parse_gyro(text) == [list(r) for r in g.table]
            assert text.endswith("\n") and "\r" not in text

    def test_comments_and_blanks_ignored(self):
        text = "# a comment\n\ngyro 1\n# another\n2\n0 1\n1 0\n"
        assert parse_gyro(text) == [[0, 1], [1, 0]]

    def test_header_required(self):
        with pytest.raises(GyroParseError):
            parse_gyro("gyro 2\n1\n0\n")
        with pytest.raises(GyroParseError):
            parse_gyro("1\n0\n")

    def test_short_row_rejected(self):
        with pytest.raises(GyroParseError):
            parse_gyro("gyro 1\n2\n0 1\n1\n")

    def test_out_of_range_rejected(self):
        with pytest.raises(GyroParseError):
            parse_gyro("gyro 1\n2\n0 2\n2 0\n")

    def test_load_validates_axioms(self, tmp_path):
        p = tmp_path / "bad.gyro"
        p.write_text("gyro 1\n3\n0 1 2\n1 2 0\n2 1 0\n")
        from gyrokit.core import AxiomError

        with pytest.raises(AxiomError):
            load_table(p)


class TestVerifyCommand:
    def test_pass(self, corpus_dir, capsys):
        assert main(["verify", str(corpus_dir / "z4.gyro")]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_malformed_file_exit_1(self, tmp_path, capsys):
        p = tmp_path / "broken.gyro"
        p.write_text("gyro 1\n2\n0 1\n1\n")
        assert main(["verify", str(p)]) == 1

    def test_axiom_violation_exit_2(self, tmp_path, capsys):
        p = tmp_path / "violating.gyro"
        p.write_text("gyro 1\n4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 2 1 0\n")
        assert main(["verify", str(p)]) == 2
        out = capsys.readouterr().out
        assert "FAIL" in out and "witness" in out

    def test_missing_file_exit_1(self, capsys):
        assert main(["verify", "/nonexistent/nope.gyro"]) == 1


class TestAnalyzeCommand:
    def test_z4_fields(self, corpus_dir, capsys):
        assert main(["analyze", str(corpus_dir / "z4.gyro"), "--json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["order"] == 4
        assert obj["group"] is True
        assert obj["commutator_subgyrogroup"] == [0]
        assert obj["left_nucleus"] == [0, 1, 2, 3]
        assert obj["radical"] == [0]

    def test_report_fields_recomputable(self, corpus_dir, corpus):
        # every analyze field must equal a direct module computation
        for name, g in corpus.items():
            obj = analyze_object(g)
            assert obj["order"] == g.order
            assert obj["group"] == g.is_group()
            assert obj["gyrocommutative"] == g.is_gyrocommutative()
            assert obj["right_identity"] == g.right_identity_holds()
            assert obj["commutator_subgyrogroup"] == list(
                commutator_subgyrogroup(g).members
            )
            assert obj["nc_commutator"] == list(nc_commutator(g).members)
            assert obj["left_nucleus"] == list(left_nucleus(g).members)
            assert obj["right_nucleus"] == list(right_nucleus(g).members)
            assert obj["radical"] == list(radical(g).members)
            assert obj["lmlt_order"] == lmlt(g).order
            assert obj["lg_sharp_size"] == len(lg_sharp(g))
            assert obj["lg_prime_size"] == len(lg_prime(g))
            assert obj["normal_subgyrogroups"] == [
                list(s.members)
                for s in enumerate_subgyrogroups(g)
                if is_normal(g, s)
            ]

    def test_json_sorted_and_deterministic(self, corpus_dir, capsys):
        assert main(["analyze", str(corpus_dir / "na8.gyro"), "--json"]) == 0
        out1 = capsys.readouterr().out
        assert main(["analyze", str(corpus_dir / "na8.gyro"), "--json"]) == 0
        out2 = capsys.readouterr().out
        assert out1 == out2
        obj = json.loads(out1)
        assert list(obj) == sorted(obj)


class TestQuotientClosureIndex:
    def test_quotient(self, corpus_dir, capsys):
        assert main(["quotient", str(corpus_dir / "z6.gyro"), "--set", "0,2,4"]) == 0
        out = capsys.readouterr().out
        assert parse_gyro(out) == [[0, 1], [1, 0]]

    def test_quotient_not_normal_exit_2(self, corpus_dir, capsys):
        assert main(["quotient", str(corpus_dir / "s3.gyro"), "--set", "0,2"]) == 2
        assert "not normal" in capsys.readouterr().out

    def test_closure(self, corpus_dir, capsys):
        assert main(["closure", str(corpus_dir / "s3.gyro"), "--set", "1"]) == 0
        assert capsys.readouterr().out.strip() == "0 1 2 3 4 5"

    def test_index(self, corpus_dir, capsys):
        assert main(["index", str(corpus_dir / "z6.gyro"), "--set", "0,3"]) == 0
        assert capsys.readouterr().out.strip() == "3"

    def test_index_not_subgyrogroup_exit_1(self, corpus_dir, capsys):
        assert main(["index", str(corpus_dir / "z6.gyro"), "--set", "0,1"]) == 1


class TestIsoCommand:
    def test_not_isomorphic(self, corpus_dir, capsys):
        assert main(["iso", str(corpus_dir / "z4.gyro"), str(corpus_dir / "v4.gyro")]) == 2
        assert "not isomorphic" in capsys.readouterr().out

    def test_isomorphic(self, corpus_dir, capsys):
        assert main(["iso", str(corpus_dir / "z4.gyro"), str(corpus_dir / "z4.gyro")]) == 0
        assert "witness" in capsys.readouterr().out


class TestSearchCommand:
    def test_prints_tables(self, capsys):
        assert main(["search", "4"]) == 0
        out = capsys.readouterr().out
        assert out.count("gyro 1") == 2

    def test_writes_corpus_files(self, tmp_path, capsys):
        out_dir = tmp_path / "emitted"
        assert main(["search", "4", "--out", str(out_dir)]) == 0
        names = sorted(p.name for p in out_dir.glob("*.gyro"))
        assert names == ["4-0.gyro", "4-1.gyro"]
        for p in out_dir.glob("*.gyro"):
            load_table(p)  # parses and passes axioms

    def test_first_nonassociative(self, tmp_path, capsys):
        out_dir = tmp_path / "na"
        code = main(
            ["search", "8", "--first-nonassociative", "--out", str(out_dir), "--time-budget", "3600"]
        )
        assert code == 0
        files = list(out_dir.glob("*.gyro"))
        assert len(files) == 1
        assert not load_table(files[0]).is_group()


class TestSweepCommand:
    def test_runs_clean_and_deterministic(self, corpus_dir, capsys):
        assert main(["sweep-theorems", str(corpus_dir)]) == 0
        out1 = capsys.readouterr().out
        assert main(["sweep-theorems", str(corpus_dir)]) == 0
        out2 = capsys.readouterr().out
        assert out1 == out2
        assert "fail=0" in out1

    def test_empty_dir_exit_1(self, tmp_path):
        assert main(["sweep-theorems", str(tmp_path)]) == 1


class TestHuntCommand:
    def test_over_corpus(self, corpus_dir, capsys):
        assert main(["hunt", "--corpus", str(corpus_dir)]) == 0
        out = capsys.readouterr().out
        assert "no counterexample" in out or "counterexamples found" in out

    def test_over_searched_orders(self, capsys):
        assert main(["hunt", "--orders", "4", "5"]) == 0
        out = capsys.readouterr().out
        assert "search-4-0" in out

    def test_requires_input(self, capsys):
        assert main(["hunt"]) == 1


class TestUsage:
    def test_unknown_command(self):
        assert main(["frobnicate"]) == 1

    def test_bad_set_spec(self, corpus_dir):
        assert main(["index", str(corpus_dir / "z6.gyro"), "--set", "a,b"]) == 1
