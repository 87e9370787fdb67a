"""Batch runs: generators x class routes, one report row per (graph, route)."""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path

from . import graph6
from .bounders import ClassSpec, run_class
from .errors import NotInClassError, ResourceCapError
from .generators import GenSpec
from .oracle import alpha_size, eta_exact, omega_size, verify_hitting_set

JOBS_ENV = "ETAHIT_JOBS"

CSV_COLUMNS = (
    "graph",
    "source",
    "n",
    "omega",
    "alpha",
    "eta",
    "route",
    "size",
    "claimed_bound",
    "verified",
    "wall_time",
    "error",
)


def default_parallelism() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{JOBS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{JOBS_ENV} must be >= 1, got {value}")
    return value


@dataclass
class ExperimentManifest:
    generators: list[GenSpec]
    routes: list[ClassSpec]
    exact_eta: bool = True
    eta_cap: int = 10**6
    output: str | None = None
    parallelism: int = 1
    skip_nonmembers: bool = True

    def __post_init__(self):
        if not self.generators:
            raise ValueError("manifest needs at least one generator")
        if not self.routes:
            raise ValueError("manifest needs at least one route")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")

    @classmethod
    def from_dict(cls, d: dict) -> ExperimentManifest:
        d = dict(d)
        known = {"generators", "routes", "exact_eta", "eta_cap", "output", "parallelism", "skip_nonmembers"}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown manifest fields: {sorted(unknown)}")
        gens = [GenSpec.from_dict(g) for g in d.pop("generators", [])]
        routes = [ClassSpec.parse(r) for r in d.pop("routes", [])]
        if "parallelism" not in d:
            d["parallelism"] = default_parallelism()
        return cls(gens, routes, **d)

    @classmethod
    def load(cls, path: str | Path) -> ExperimentManifest:
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return {
            "generators": [g.to_dict() for g in self.generators],
            "routes": [r.label() for r in self.routes],
            "exact_eta": self.exact_eta,
            "eta_cap": self.eta_cap,
            "output": self.output,
            "parallelism": self.parallelism,
            "skip_nonmembers": self.skip_nonmembers,
        }


@dataclass
class ReportRow:
    graph: str
    source: str
    n: int
    omega: int
    alpha: int
    eta: int | None
    route: str
    size: int | None
    claimed_bound: int | None
    verified: bool
    wall_time: float | None
    error: str = ""

    def csv_values(self, reproducible: bool) -> list[str]:
        values = []
        for name in CSV_COLUMNS:
            v = getattr(self, name)
            if name == "wall_time":
                v = "" if reproducible or v is None else f"{v:.6f}"
            elif isinstance(v, bool):
                v = "true" if v else "false"
            elif v is None:
                v = ""
            values.append(str(v))
        return values

    def to_json(self, reproducible: bool) -> dict:
        d = asdict(self)
        if reproducible:
            d["wall_time"] = None
        if d["claimed_bound"] is not None:
            # bounds can exceed double precision; keep them exact
            d["claimed_bound"] = str(d["claimed_bound"])
        return d


@dataclass
class ExperimentResult:
    rows: list[ReportRow] = field(default_factory=list)
    skipped: int = 0

    @property
    def failures(self) -> list[ReportRow]:
        return [r for r in self.rows if not r.verified]

    def summary(self) -> list[dict]:
        """Per route and clique number: rows, largest ``|W|``, largest ``|W| / eta``."""
        buckets: dict[tuple[str, int], dict] = {}
        for r in self.rows:
            if r.size is None:
                continue
            b = buckets.setdefault((r.route, r.omega), {"route": r.route, "omega": r.omega, "rows": 0, "max_size": 0, "max_ratio": None})
            b["rows"] += 1
            b["max_size"] = max(b["max_size"], r.size)
            if r.eta:
                ratio = Fraction(r.size, r.eta)
                if b["max_ratio"] is None or ratio > b["max_ratio"]:
                    b["max_ratio"] = ratio
        out = []
        for key in sorted(buckets):
            b = dict(buckets[key])
            b["max_ratio"] = None if b["max_ratio"] is None else float(b["max_ratio"])
            out.append(b)
        return out


def _task(args: tuple) -> tuple[list[ReportRow], int]:
    """All routes on one graph, run sequentially."""
    code, source, routes, exact_eta, eta_cap, skip_nonmembers = args
    g = graph6.decode(code)
    if g.n == 0:
        return [], len(routes)
    w = omega_size(g)
    a = alpha_size(g)
    eta = eta_exact(g, cap=eta_cap)[0] if exact_eta else None
    rows = []
    skipped = 0
    for label in routes:
        spec = ClassSpec.parse(label)
        start = time.perf_counter()
        try:
            cert = run_class(g, spec)
        except NotInClassError as exc:
            if skip_nonmembers:
                skipped += 1
                continue
            rows.append(ReportRow(code, source, g.n, w, a, eta, label, None, None, False, None, f"NotInClassError: {exc}"))
            continue
        except Exception as exc:  # recorded per row; the run carries on
            rows.append(ReportRow(code, source, g.n, w, a, eta, label, None, None, False, None, f"{type(exc).__name__}: {exc}"))
            continue
        elapsed = time.perf_counter() - start
        ok = verify_hitting_set(g, cert.W)
        err = "" if ok else "VerificationError: W misses a maximum stable set"
        if ok and cert.size > cert.claimed_bound:
            ok, err = False, f"BoundError: |W|={cert.size} > {cert.claimed_bound}"
        rows.append(ReportRow(code, source, g.n, w, a, eta, label, cert.size, cert.claimed_bound, ok, elapsed, err))
    return rows, skipped


def run_experiment(manifest: ExperimentManifest) -> ExperimentResult:
    tasks = []
    labels = [r.label() for r in manifest.routes]
    for gi, spec in enumerate(manifest.generators):
        for k, g in enumerate(spec.graphs()):
            tasks.append((graph6.encode(g), f"{gi}:{spec.kind}:{k}", labels, manifest.exact_eta, manifest.eta_cap, manifest.skip_nonmembers))
    result = ExperimentResult()
    if manifest.parallelism == 1 or len(tasks) < 2:
        outputs = map(_task, tasks)
        for rows, skipped in outputs:
            result.rows.extend(rows)
            result.skipped += skipped
    else:
        with ProcessPoolExecutor(max_workers=manifest.parallelism) as pool:
            # map keeps task order, so the merge is deterministic
            for rows, skipped in pool.map(_task, tasks, chunksize=4):
                result.rows.extend(rows)
                result.skipped += skipped
    return result


def render_csv(result: ExperimentResult, reproducible: bool = False) -> str:
    buf = io.StringIO()
    if not reproducible:
        buf.write(f"# generated {datetime.now(timezone.utc).isoformat(timespec='seconds')}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in result.rows:
        writer.writerow(r.csv_values(reproducible))
    return buf.getvalue()


def render_json(result: ExperimentResult, manifest: ExperimentManifest, reproducible: bool = False) -> str:
    doc = {
        "manifest": manifest.to_dict(),
        "rows": [r.to_json(reproducible) for r in result.rows],
        "skipped": result.skipped,
        "failures": len(result.failures),
        "summary": result.summary(),
    }
    if not reproducible:
        doc["generated"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_reports(result: ExperimentResult, manifest: ExperimentManifest, prefix: str | Path, reproducible: bool = False) -> tuple[Path, Path]:
    prefix = Path(prefix)
    if prefix.parent and not prefix.parent.exists():
        prefix.parent.mkdir(parents=True)
    csv_path = prefix.with_name(prefix.name + ".csv")
    json_path = prefix.with_name(prefix.name + ".json")
    csv_path.write_text(render_csv(result, reproducible))
    json_path.write_text(render_json(result, manifest, reproducible))
    return csv_path, json_path


def is_resource_error(row: ReportRow) -> bool:
    kind = row.error.split(":", 1)[0]
    return kind in {cls.__name__ for cls in _resource_classes()}


def _resource_classes():
    seen = [ResourceCapError]
    i = 0
    while i < len(seen):
        seen.extend(seen[i].__subclasses__())
        i += 1
    return seen
