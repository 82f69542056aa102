"""The inert-trace screen and its batch driver."""
import json
import os
import random
import shutil

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2screen.catalog import BY_LABEL, table_entries
from g2screen.curve import CurveError, GenusTwoCurve, curve_to_line
from g2screen.screen import (
    BatchConfig,
    batch_screen,
    screen_curve,
)

FALSE_POS = BY_LABEL["d28_false_positive"].curve()


class TestScreenCurve:
    def test_table_curves_pass_for_their_field(self):
        for e in table_entries():
            report = screen_curve(e.curve(), e.p)
            assert report.passing() == [e.field_disc], e.label

    def test_verdict_invariants(self):
        for e in table_entries()[:4]:
            for v in screen_curve(e.curve(), e.p).verdicts:
                if v.passed:
                    assert v.failing_prime is None and v.nonzero_witness is not None
                else:
                    assert v.failing_prime is not None or v.nonzero_witness is None

    def test_false_positive_flips_at_151(self):
        r100 = screen_curve(FALSE_POS, 3, 100, discriminants=[28])
        assert r100.verdicts[0].passed
        assert r100.verdicts[0].nonzero_witness == 11
        r151 = screen_curve(FALSE_POS, 3, 151, discriminants=[28])
        v = r151.verdicts[0]
        assert not v.passed and v.failing_prime == 151

    def test_false_positive_genuine_field(self):
        # without an override the model discriminant only allows D = 85 to pass
        assert screen_curve(FALSE_POS, 3).passing() == [85]
        assert screen_curve(FALSE_POS, 3, 1000).passing() == [85]

    def test_verdicts_ascending_and_complete(self):
        r = screen_curve(FALSE_POS, 3)
        ds = [v.D for v in r.verdicts]
        assert ds == sorted(ds) == [5, 8, 17, 40, 85, 136, 680]

    def test_early_exit_equivalence(self):
        for e in table_entries()[:6]:
            fast = screen_curve(e.curve(), e.p, early_exit=True)
            slow = screen_curve(e.curve(), e.p, early_exit=False)
            assert [(v.D, v.passed) for v in fast.verdicts] == \
                   [(v.D, v.passed) for v in slow.verdicts]

    def test_monotonicity_in_q_max(self):
        # a failure at some q_max stays a failure for every larger q_max
        for qm in (151, 200, 400):
            v = screen_curve(FALSE_POS, 3, qm, discriminants=[28]).verdicts[0]
            assert not v.passed and v.failing_prime == 151

    def test_bad_p_rejected(self):
        with pytest.raises(ValueError):
            screen_curve(FALSE_POS, 7)

    def test_report_serialization(self):
        r = screen_curve(FALSE_POS, 3, discriminants=[28, 85])
        d = r.to_dict()
        assert set(d) == {"label", "p", "q_max", "verdicts", "curve", "version"}
        assert [v["D"] for v in d["verdicts"]] == [28, 85]
        assert set(d["verdicts"][0]) == \
            {"D", "passed", "failing_prime", "nonzero_witness", "inert_checked"}
        json.dumps(d)  # must be JSON-clean


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_early_exit_equivalence_property(seed):
    rng = random.Random(seed)
    while True:
        f = tuple(rng.randint(-12, 12) for _ in range(rng.choice([6, 7])))
        h = tuple(rng.randint(-2, 2) for _ in range(rng.randint(0, 4)))
        try:
            c = GenusTwoCurve(f, h)
            break
        except CurveError:
            continue
    fast = screen_curve(c, 3, early_exit=True)
    slow = screen_curve(c, 3, early_exit=False)
    assert [(v.D, v.passed) for v in fast.verdicts] == \
           [(v.D, v.passed) for v in slow.verdicts]


# ---------------------------------------------------------------------------
# batch driver

def _write_input(path, include_junk=True):
    lines = ["# bundled table curves"]
    for e in table_entries():
        lines.append(curve_to_line(e.curve()))
    if include_junk:
        lines.insert(3, "")                       # blank line
        lines.insert(5, "# interior comment")
        lines.append("broken;1,2,3")              # genus condition fails
        lines.append("nonsense line without semicolon--")
    lines.append(curve_to_line(FALSE_POS.with_label("d28_false_positive")))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


class TestBatchScreen:
    def test_table_file_roundtrip(self, tmp_path):
        inp, out = tmp_path / "in.txt", tmp_path / "out.jsonl"
        _write_input(inp, include_junk=False)
        res = batch_screen(str(inp), str(out), BatchConfig(p=3))
        rows = [json.loads(l) for l in out.read_text().splitlines()]
        # p=3 run: the 15 mod-3 table curves pass; the two mod-5 curves and
        # the false positive also pass for their own fields at p=3 or not --
        # every emitted row must have a passing verdict
        assert res.emitted == len(rows)
        for row in rows:
            assert any(v["passed"] for v in row["verdicts"])
        labels = {r["label"] for r in rows}
        for e in table_entries(3):
            assert e.label in labels

    def test_rejects_and_order(self, tmp_path):
        inp, out = tmp_path / "in.txt", tmp_path / "out.jsonl"
        rej = tmp_path / "rej.jsonl"
        _write_input(inp)
        res = batch_screen(str(inp), str(out),
                           BatchConfig(p=3, emit_all=True, rejects_path=str(rej)))
        assert res.rejected == 2
        reasons = [json.loads(l)["reason"] for l in rej.read_text().splitlines()]
        assert len(reasons) == 2 and all(r for r in reasons)
        rows = [json.loads(l) for l in out.read_text().splitlines()]
        want = [e.label for e in table_entries()] + ["d28_false_positive"]
        assert [r["label"] for r in rows] == want  # input order preserved

    @pytest.mark.parametrize("jobs", [1, 4])
    def test_deterministic_across_workers(self, tmp_path, jobs):
        inp = tmp_path / "in.txt"
        _write_input(inp)
        single = tmp_path / "single.jsonl"
        multi = tmp_path / "multi.jsonl"
        batch_screen(str(inp), str(single), BatchConfig(p=3, emit_all=True, jobs=1))
        batch_screen(str(inp), str(multi), BatchConfig(p=3, emit_all=True, jobs=jobs))
        assert single.read_bytes() == multi.read_bytes()

    def test_empty_input(self, tmp_path):
        inp, out = tmp_path / "in.txt", tmp_path / "out.jsonl"
        inp.write_text("# nothing here\n\n")
        res = batch_screen(str(inp), str(out), BatchConfig(p=3))
        assert res.processed == res.emitted == res.rejected == 0
        assert out.read_bytes() == b""

    def test_resume_matches_uninterrupted_run(self, tmp_path):
        inp, ref_out = tmp_path / "in.txt", tmp_path / "ref.jsonl"
        _write_input(inp)
        batch_screen(str(inp), str(ref_out), BatchConfig(p=3, emit_all=True))
        reference = ref_out.read_bytes()

        # phase 1: only the first 6 lines exist yet
        part = tmp_path / "grow.txt"
        full_lines = inp.read_text().splitlines(keepends=True)
        part.write_text("".join(full_lines[:6]), encoding="utf-8")
        out, ckpt = tmp_path / "out.jsonl", tmp_path / "ckpt.json"
        batch_screen(str(part), str(out),
                     BatchConfig(p=3, emit_all=True, checkpoint_path=str(ckpt),
                                 checkpoint_every=2))
        # line 6 of the file is a comment, so the last data line is 5
        assert json.loads(ckpt.read_text())["input_line_no"] == 5

        # simulate a crash that left unflushed garbage past the checkpoint
        with open(out, "ab") as fh:
            fh.write(b"PARTIAL GARBAGE")

        # phase 2: the file has grown; resume must pick up at line 7
        part.write_text("".join(full_lines), encoding="utf-8")
        res = batch_screen(str(part), str(out),
                           BatchConfig(p=3, emit_all=True, checkpoint_path=str(ckpt)))
        assert res.resumed_at_line == 5
        assert out.read_bytes() == reference

    def test_resume_noop_when_complete(self, tmp_path):
        inp, out, ckpt = tmp_path / "in.txt", tmp_path / "o.jsonl", tmp_path / "c.json"
        _write_input(inp, include_junk=False)
        batch_screen(str(inp), str(out), BatchConfig(p=3, checkpoint_path=str(ckpt)))
        first = out.read_bytes()
        res = batch_screen(str(inp), str(out), BatchConfig(p=3, checkpoint_path=str(ckpt)))
        assert res.processed == 0
        assert out.read_bytes() == first

    def test_no_candidate_curves_emit_nothing(self, tmp_path):
        # odd discriminant 3 * 688999 (both primes 3 mod 4): the only
        # 1-mod-4 squarefree product is divisible by p itself, so no
        # candidate field survives at p = 3
        c = GenusTwoCurve((-2, -2, -2, 0, 1, 1), (1,), "noD")
        from g2screen.quadfields import candidate_discriminants
        assert candidate_discriminants(c.discriminant(), 3) == []
        inp, out = tmp_path / "in.txt", tmp_path / "out.jsonl"
        inp.write_text(curve_to_line(c) + "\n")
        batch_screen(str(inp), str(out), BatchConfig(p=3, emit_all=True))
        row = json.loads(out.read_text())
        assert row["verdicts"] == []
