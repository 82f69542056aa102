"""The inert-trace screen: which real quadratic fields could a curve's
mod-p representation be induced from?

For each candidate discriminant D the screen demands a_q = 0 (mod p) at
every good-reduction prime q <= q_max that is inert in Q(sqrt(D)), plus at
least one such prime with a_q != 0 exactly (which rules out base changes of
elliptic curves).  Early exit discards a (curve, D) pair at the first
violation.  The batch driver scales this to large curve files with worker
processes, a rejects side-channel, and crash-consistent resume.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from . import __version__
from .counting import aq_exact
from .curve import CurveError, GenusTwoCurve, parse_curve_line, render_curve
from .quadfields import (
    FactorizationError,
    candidate_discriminants,
    factorize,
    kronecker,
    primes_up_to,
)


@dataclass(frozen=True)
class ScreenVerdict:
    D: int
    passed: bool
    failing_prime: int | None
    nonzero_witness: int | None
    inert_primes_checked: int

    def to_dict(self) -> dict:
        return {
            "D": self.D,
            "passed": self.passed,
            "failing_prime": self.failing_prime,
            "nonzero_witness": self.nonzero_witness,
            "inert_checked": self.inert_primes_checked,
        }


@dataclass(frozen=True)
class ScreenReport:
    label: str
    p: int
    q_max: int
    verdicts: tuple[ScreenVerdict, ...]
    curve: str

    def passing(self) -> list[int]:
        return [v.D for v in self.verdicts if v.passed]

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "p": self.p,
            "q_max": self.q_max,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "curve": self.curve,
            "version": __version__,
        }


def screen_curve(curve: GenusTwoCurve, p: int, q_max: int = 100,
                 discriminants: list[int] | None = None,
                 early_exit: bool = True) -> ScreenReport:
    """Screen one curve at p against each candidate D (ascending).

    By default candidates come from the curve's model discriminant; an
    explicit `discriminants` list overrides that (useful for re-testing a
    specific field, e.g. one suggested by an earlier search over a family).
    """
    if p not in (3, 5):
        raise ValueError(f"p must be 3 or 5, got {p}")
    delta = curve.discriminant()
    if discriminants is None:
        discriminants = candidate_discriminants(delta, p)  # may raise
    aq_cache: dict[int, int] = {}

    def aq(q: int) -> int:
        if q not in aq_cache:
            aq_cache[q] = aq_exact(curve, q)
        return aq_cache[q]

    good_primes = [q for q in primes_up_to(q_max) if delta % q != 0]
    verdicts = []
    for D in sorted(discriminants):
        failing = None
        witness = None
        checked = 0
        for q in good_primes:
            if kronecker(D, q) != -1:
                continue
            checked += 1
            a = aq(q)
            if witness is None and a != 0:
                witness = q
            if a % p != 0:
                failing = q
                if early_exit:
                    break
        passed = failing is None and witness is not None
        verdicts.append(ScreenVerdict(D, passed, failing, witness, checked))
    return ScreenReport(curve.label, p, q_max, tuple(verdicts), render_curve(curve))


# ---------------------------------------------------------------------------
# batch driver

@dataclass
class BatchConfig:
    p: int
    q_max: int = 100
    jobs: int = 1
    emit_all: bool = False
    early_exit: bool = True
    checkpoint_path: str | None = None
    rejects_path: str | None = None
    checkpoint_every: int = 256


@dataclass
class BatchResult:
    processed: int = 0
    emitted: int = 0
    rejected: int = 0
    resumed_at_line: int = 0
    rejects: list = field(default_factory=list)


def _screen_one_line(args) -> tuple[str, int, str]:
    """Worker: (kind, line_no, payload) where kind is 'report' or 'reject'."""
    line_no, line, p, q_max, early_exit = args
    try:
        curve = parse_curve_line(line)
        report = screen_curve(curve, p, q_max, early_exit=early_exit)
    except (CurveError, FactorizationError, ValueError) as e:
        payload = json.dumps(
            {"line_no": line_no, "line": line, "reason": f"{type(e).__name__}: {e}"},
            sort_keys=True)
        return ("reject", line_no, payload)
    return ("report", line_no,
            json.dumps(report.to_dict(), sort_keys=True, separators=(",", ":")))


def _data_lines(path: str, skip: int):
    """Yield (line_no, stripped_line) for data lines, honoring '#' comments."""
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            if line_no <= skip:
                continue
            stripped = raw.strip()
            if not stripped or stripped.startswith("#"):
                continue
            yield line_no, stripped


def _load_checkpoint(path: str | None) -> tuple[int, int]:
    if not path or not os.path.exists(path):
        return 0, 0
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return int(data["input_line_no"]), int(data["out_pos"])


def _save_checkpoint(path: str | None, line_no: int, out_pos: int):
    if not path:
        return
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump({"input_line_no": line_no, "out_pos": out_pos}, fh)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def batch_screen(input_path: str, output_path: str, config: BatchConfig) -> BatchResult:
    """Screen a curve file to JSONL, in input order, restartable.

    Emits only reports with at least one passing verdict unless emit_all.
    Malformed or unfactorable lines go to the rejects file (and the returned
    result), never aborting the run.  With a checkpoint path, a previous
    partial run is resumed from its last flushed (line, byte-offset) pair:
    the output file is truncated to that offset and input re-read past that
    line, so the final file is identical to a single uninterrupted run.
    """
    result = BatchResult()
    skip, out_pos = _load_checkpoint(config.checkpoint_path)
    result.resumed_at_line = skip
    mode = "r+b" if (skip or out_pos) and os.path.exists(output_path) else "wb"
    out = open(output_path, mode)
    try:
        out.truncate(out_pos)
        out.seek(out_pos)
        rej = open(config.rejects_path, "a", encoding="utf-8") if config.rejects_path else None
        try:
            tasks = ((ln, line, config.p, config.q_max, config.early_exit)
                     for ln, line in _data_lines(input_path, skip))
            if config.jobs > 1:
                import multiprocessing as mp
                pool = mp.Pool(config.jobs)
                stream = pool.imap(_screen_one_line, tasks, chunksize=16)
            else:
                pool = None
                stream = map(_screen_one_line, tasks)
            pending = 0
            last_line = skip
            try:
                for kind, line_no, payload in stream:
                    result.processed += 1
                    last_line = line_no
                    if kind == "reject":
                        result.rejected += 1
                        result.rejects.append(json.loads(payload))
                        if rej:
                            rej.write(payload + "\n")
                    else:
                        emit = config.emit_all or any(
                            v["passed"] for v in json.loads(payload)["verdicts"])
                        if emit:
                            out.write(payload.encode() + b"\n")
                            result.emitted += 1
                    pending += 1
                    if pending >= config.checkpoint_every:
                        out.flush()
                        os.fsync(out.fileno())
                        if rej:
                            rej.flush()
                        _save_checkpoint(config.checkpoint_path, last_line, out.tell())
                        pending = 0
            finally:
                if pool is not None:
                    pool.close()
                    pool.join()
            out.flush()
            os.fsync(out.fileno())
            _save_checkpoint(config.checkpoint_path, last_line, out.tell())
        finally:
            if rej:
                rej.close()
    finally:
        out.close()
    return result
