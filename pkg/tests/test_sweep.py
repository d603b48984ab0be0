from gyrokit.catalog import cyclic, sym3
from gyrokit.sweep import run_theorem_sweep, sweep_table


class TestSweep:
    def test_clean_on_groups(self):
        report = run_theorem_sweep([("z4", cyclic(4)), ("s3", sym3())])
        assert report.failures == 0
        assert report.passes > 0

    def test_clean_on_full_corpus(self, corpus):
        report = run_theorem_sweep(sorted(corpus.items()))
        assert report.failures == 0

    def test_findings_recorded_for_nonassociative(self, nonassoc8):
        report = run_theorem_sweep([("na8", nonassoc8)])
        assert report.failures == 0
        finding_lines = [l for l in report.lines if "FINDING" in l]
        assert any("commutator-subgyrogroup-normality" in l for l in finding_lines)

    def test_lines_grouped_and_sorted_by_name(self, corpus):
        report = run_theorem_sweep(sorted(corpus.items()))
        names = [line.split(" :: ")[0] for line in report.lines]
        first_positions = {}
        for i, n in enumerate(names):
            first_positions.setdefault(n, i)
        ordered = sorted(first_positions, key=first_positions.get)
        assert ordered == sorted(ordered)  # tables appear in name order
        for n in first_positions:  # and each table's lines are contiguous
            indices = [i for i, m in enumerate(names) if m == n]
            assert indices == list(range(indices[0], indices[-1] + 1))

    def test_render_deterministic(self, corpus):
        named = sorted(corpus.items())
        assert run_theorem_sweep(named).render() == run_theorem_sweep(named).render()

    def test_summary_line(self):
        report = run_theorem_sweep([("z2", cyclic(2))])
        rendered = report.render()
        assert rendered.rstrip().splitlines()[-1].startswith("summary: checks=")

    def test_single_table_recorder(self):
        rec = sweep_table("z6", cyclic(6))
        assert rec.failures == 0
        check_ids = {line.split(" :: ")[1] for line in rec.lines}
        assert "axioms" in check_ids
        assert "reversal-kernel-word-oracle" in check_ids
        assert "ladder-invariance-iff-normal" in check_ids
