"""Keep the experiment scripts runnable."""

import json
import subprocess
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def run(script, *args):
    return subprocess.run(
        [sys.executable, str(REPO / "scripts" / script), *args],
        capture_output=True,
        text=True,
        timeout=120,
    )


def test_run_adjudication_writes_reproducible_report(tmp_path):
    out = tmp_path / "adj.json"
    proc = run("run_adjudication.py", "--max-n", "3", "--out", str(out))
    assert proc.returncode == 0, proc.stderr
    payload = json.loads(out.read_text())
    assert len(payload["theorems"]) == 13
    assert "T1:" in proc.stdout


def test_minimal_grounds_table(tmp_path):
    proc = run("minimal_grounds.py", "--max-n", "3", "--modes", "iasi", "--exact-cap", "4")
    assert proc.returncode == 0, proc.stderr
    assert "g3.2" in proc.stdout
