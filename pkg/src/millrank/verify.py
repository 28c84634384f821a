"""Verification campaigns: axiom sweeps and the standing result reports.

A sweep applies one axiom checker to every ranking of a stream and
aggregates the verdicts. Campaign functions bundle sweeps and pinned
instances into the characterization probe, the incompatibility report,
the satisfaction matrix and the independence report.

All outputs are deterministic for fixed inputs. Ranking batches may be
checked by a pool of worker processes; partial tallies merge by addition
and witnesses carry their stream index, so the number of workers never
changes a report.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from multiprocessing import get_context

from .axioms import AXIOMS, VIOLATED, Witness, rdf_premises, rjad_premises
from .core import CoalitionalRanking, Universe, concomitant_set, members_mask
from .enumeration import EXHAUSTIVE, RankingStream, fubini
from .errors import UnknownAxiomError
from .solutions import RULES, lookup_rule
from .transforms import SlideMove, apply_slide

_CHUNK = 2048
THEOREM_AXIOMS = ("STAG", "SI", "DMON")


@dataclass(frozen=True)
class SweepReport:
    """Aggregate outcome of one rule x axiom x stream sweep.

    ``violations`` counts rankings whose verdict was violated (each
    contributes exactly one witness before capping); ``witnesses`` keeps
    the first ``witness_cap`` of them in stream order. ``wall_time`` is
    informational only and never serialized.
    """

    rule: str
    axiom: str
    n: int
    mode: object
    rankings_checked: int
    premises_found: int
    violations: int
    witness_cap: int
    witnesses: tuple[Witness, ...]
    wall_time: float

    @property
    def verdict(self) -> str:
        if self.violations:
            return "violated"
        return "satisfied" if self.premises_found else "inapplicable"


def _normalize_axiom(axiom_id: str) -> str:
    key = axiom_id.upper()
    if key not in AXIOMS:
        known = ", ".join(sorted(AXIOMS))
        raise UnknownAxiomError(f"unknown axiom {axiom_id!r} (known: {known})")
    return key


def _sweep_chunk(payload):
    rule_id, axiom_id, n, names, cap, start, chunk = payload
    universe = Universe(n, names)
    rule = lookup_rule(rule_id)
    check = AXIOMS[axiom_id]
    premises = violations = 0
    witnesses = []
    for offset, classes in enumerate(chunk):
        ranking = CoalitionalRanking._trusted(universe, classes)
        verdict = check(ranking, rule)
        premises += verdict.premises_checked
        if verdict.status == VIOLATED:
            violations += 1
            if len(witnesses) < cap:
                witnesses.append((start + offset, verdict.witness))
    return len(chunk), premises, violations, witnesses


def _run_chunks(universe, mode, worker, payload_fn, jobs):
    """Feed stream chunks to a worker, inline or through a fork pool."""
    stream = RankingStream(universe, mode)
    results = []

    def payloads():
        start = 0
        chunk = []
        for ranking in stream:
            chunk.append(ranking.classes)
            if len(chunk) == _CHUNK:
                yield payload_fn(start, tuple(chunk))
                start += len(chunk)
                chunk = []
        if chunk:
            yield payload_fn(start, tuple(chunk))

    if jobs and jobs > 1:
        with get_context("fork").Pool(jobs) as pool:
            results = list(pool.imap(worker, payloads()))
    else:
        results = [worker(p) for p in payloads()]
    return results


def sweep(
    rule: str,
    axiom: str,
    n: int,
    mode=EXHAUSTIVE,
    *,
    universe: Universe | None = None,
    jobs: int = 1,
    witness_cap: int = 10,
) -> SweepReport:
    """Check one axiom against one rule over a whole ranking stream.

    Exhaustive mode covers every ranking of the universe (guarded at
    n <= 4); sample mode draws ``mode.count`` uniform rankings from
    ``mode.seed``. The report is identical for any ``jobs`` value.
    """
    axiom = _normalize_axiom(axiom)
    lookup_rule(rule)
    universe = universe or Universe(n)
    started = time.perf_counter()
    parts = _run_chunks(
        universe,
        mode,
        _sweep_chunk,
        lambda start, chunk: (rule, axiom, n, universe.names, witness_cap, start, chunk),
        jobs,
    )
    checked = sum(p[0] for p in parts)
    premises = sum(p[1] for p in parts)
    violations = sum(p[2] for p in parts)
    tagged = sorted((t for p in parts for t in p[3]), key=lambda t: t[0])
    witnesses = tuple(w for _, w in tagged[:witness_cap])
    if mode == EXHAUSTIVE:
        expected = fubini(universe.full_mask)
        if checked != expected:
            raise AssertionError(f"exhaustive sweep covered {checked} of {expected} rankings")
    return SweepReport(
        rule=rule,
        axiom=axiom,
        n=n,
        mode=mode,
        rankings_checked=checked,
        premises_found=premises,
        violations=violations,
        witness_cap=witness_cap,
        witnesses=witnesses,
        wall_time=time.perf_counter() - started,
    )


def check_single(rule: str, axiom: str, ranking: CoalitionalRanking):
    """Run one axiom checker on one ranking, by identifiers."""
    return AXIOMS[_normalize_axiom(axiom)](ranking, lookup_rule(rule))


def find_violation(rule: str, axiom: str, n: int, mode=EXHAUSTIVE, *, universe=None):
    """First (stream index, witness) whose checker reports a violation."""
    axiom = _normalize_axiom(axiom)
    rule_fn = lookup_rule(rule)
    check = AXIOMS[axiom]
    stream = RankingStream(universe or Universe(n), mode)
    for index, ranking in enumerate(stream):
        verdict = check(ranking, rule_fn)
        if verdict.status == VIOLATED:
            return index, verdict.witness
    return None


def theorem1_probe(
    rule: str,
    n: int = 3,
    mode=EXHAUSTIVE,
    *,
    universe: Universe | None = None,
    jobs: int = 1,
    witness_cap: int = 10,
) -> dict:
    """Probe a rule against the characterization by the three axioms.

    Either certifies that the rule agrees with plurality on every
    ranking of the stream (and then sweeps STAG, SI and DMON in full as
    supporting evidence), or returns the first ranking where the outputs
    differ together with the first violation of one of the three axioms.
    The scan checks STAG, then SI, then DMON on each ranking in turn.
    """
    rule_fn = lookup_rule(rule)
    plurality = RULES["plurality"]
    universe = universe or Universe(n)
    stream = RankingStream(universe, mode)
    difference = None
    compared = 0
    for ranking in stream:
        compared += 1
        mine = rule_fn(ranking)
        ref = plurality(ranking)
        if mine != ref:
            difference = {"ranking": ranking, "selection": mine, "plurality_selection": ref}
            break
    report = {
        "rule": rule,
        "n": n,
        "mode": mode,
        "equivalent": difference is None,
        "rankings_compared": compared,
        "difference": difference,
        "witness": None,
        "sweeps": None,
    }
    if difference is None:
        report["sweeps"] = tuple(
            sweep(rule, axiom, n, mode, universe=universe, jobs=jobs, witness_cap=witness_cap)
            for axiom in THEOREM_AXIOMS
        )
        return report
    checks = [AXIOMS[a] for a in THEOREM_AXIOMS]
    for ranking in RankingStream(universe, mode):
        for axiom, check in zip(THEOREM_AXIOMS, checks):
            verdict = check(ranking, rule_fn)
            if verdict.status == VIOLATED:
                report["witness"] = verdict.witness
                return report
    return report


def _relative_lemma_chunk(payload):
    n, names, start, chunk = payload
    universe = Universe(n, names)
    rdf_total = rjad_total = 0
    counterexamples = []
    for offset, classes in enumerate(chunk):
        ranking = CoalitionalRanking._trusted(universe, classes)
        for kind, pairs in (("RDF", rdf_premises(ranking)), ("RJAD", rjad_premises(ranking))):
            if kind == "RDF":
                rdf_total += len(pairs)
            else:
                rjad_total += len(pairs)
            for s0, x in pairs:
                inter = universe.full_mask
                j = ranking.index_of(s0)
                for cls in ranking.classes[:j]:
                    for mask in cls:
                        inter &= mask
                if inter != 1 << x and len(counterexamples) < 5:
                    counterexamples.append((start + offset, kind, s0, x))
    return rdf_total, rjad_total, counterexamples


def relative_construction(x: int, y: int, universe: Universe) -> CoalitionalRanking:
    """Four-level ranking splitting coalitions by membership of x and y.

    Best to worst: containing both, containing only x, containing only y,
    containing neither. Needs n >= 3 so the last level is nonempty.
    """
    n = universe.n
    if n < 3:
        raise ValueError("the construction needs at least three individuals")
    if x == y:
        raise ValueError("x and y must be distinct")
    bx, by = 1 << x, 1 << y
    buckets = ([], [], [], [])
    for mask in range(1, universe.full_mask + 1):
        has_x, has_y = bool(mask & bx), bool(mask & by)
        buckets[0 if has_x and has_y else 1 if has_x else 2 if has_y else 3].append(mask)
    return CoalitionalRanking._trusted(universe, tuple(tuple(b) for b in buckets))


def prop1_report(n: int = 3, *, jobs: int = 1, witness_cap: int = 10) -> dict:
    """Evidence that the relative readings cannot be held together.

    Three parts: (a) for every ordered pair (x, y), the four-level
    construction makes the relative-difference premise force {x} while y
    must also be selected by concomitant variation, so no rule can meet
    both; (b) every relative-difference or relative-joint premise across
    all rankings induces the relative-agreement premise with the same
    conclusion (zero counterexamples expected); (c) the constant rule
    passes weak relative agreement and concomitant variation in full.
    Parts (b) and (c) run exhaustively and need n = 3.
    """
    if n < 3:
        raise ValueError("prop1_report needs n >= 3")
    universe = Universe(n)
    constructions = []
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            ranking = relative_construction(x, y, universe)
            s0 = 1 << y
            premises = rdf_premises(ranking)
            forced = {(s0, x)} <= set(premises)
            conclusion_unique = all(px == x for _, px in premises)
            c_set = concomitant_set(ranking)
            constructions.append(
                {
                    "x": x,
                    "y": y,
                    "ranking": ranking,
                    "rdf_premise_holds": forced,
                    "rdf_forces": (x,) if forced and conclusion_unique else None,
                    "concomitant": c_set,
                    "jointly_unsatisfiable": forced and conclusion_unique and y in c_set,
                }
            )
    report = {
        "n": n,
        "constructions": constructions,
        "incompatibility_certified": all(c["jointly_unsatisfiable"] for c in constructions),
        "lemma": None,
        "wrag_sweep": None,
        "cv_sweep": None,
    }
    if n == 3:
        parts = _run_chunks(
            universe,
            EXHAUSTIVE,
            _relative_lemma_chunk,
            lambda start, chunk: (n, universe.names, start, chunk),
            jobs,
        )
        counterexamples = [c for p in parts for c in p[2]]
        report["lemma"] = {
            "rankings_checked": fubini(universe.full_mask),
            "rdf_premises": sum(p[0] for p in parts),
            "rjad_premises": sum(p[1] for p in parts),
            "counterexamples": len(counterexamples),
        }
        report["wrag_sweep"] = sweep("const_x", "WRAG", n, jobs=jobs, witness_cap=witness_cap)
        report["cv_sweep"] = sweep("const_x", "CV", n, jobs=jobs, witness_cap=witness_cap)
    return report


MATRIX_RULES = ("plurality", "les", "obi")
MATRIX_AXIOMS = ("STAG", "TAG", "TDF", "TJAD", "CV")

# Satisfaction expectations for the three classic rules. The obi/CV cell
# carries two conflicting textual readings; the empirical verdict is
# reported beside both and flagged against the "violated" reading.
MATRIX_EXPECTED = {
    ("plurality", "STAG"): "satisfied",
    ("plurality", "TAG"): "satisfied",
    ("plurality", "TDF"): "satisfied",
    ("plurality", "TJAD"): "satisfied",
    ("plurality", "CV"): "satisfied",
    ("les", "STAG"): "violated",
    ("les", "TAG"): "satisfied",
    ("les", "TDF"): "satisfied",
    ("les", "TJAD"): "satisfied",
    ("les", "CV"): "violated",
    ("obi", "STAG"): "violated",
    ("obi", "TAG"): "violated",
    ("obi", "TDF"): "satisfied",
    ("obi", "TJAD"): "satisfied",
}
OBI_CV_STATEMENT = "violated"
OBI_CV_PROOF = "satisfied"


@dataclass(frozen=True)
class MatrixCell:
    rule: str
    axiom: str
    expected: str
    expected_alt: str | None
    verdict: str
    confirmed: bool
    discrepancy: bool
    sweep: SweepReport


@dataclass(frozen=True)
class MatrixReport:
    n: int
    mode: object
    rules: tuple[str, ...]
    axioms: tuple[str, ...]
    cells: tuple[MatrixCell, ...]

    @property
    def discrepancies(self) -> tuple[MatrixCell, ...]:
        return tuple(c for c in self.cells if c.discrepancy)


def prop3_matrix(
    n: int = 3, mode=EXHAUSTIVE, *, jobs: int = 1, witness_cap: int = 10
) -> MatrixReport:
    """Fill the satisfaction matrix for the three classic rules.

    Exhaustive at n = 3; for larger universes pass a sample mode. Each
    cell records the expected status, the sweep evidence and a
    discrepancy flag (set only when the evidence is conclusive: any
    violation, or an exhaustive clean pass where one was expected).
    """
    cells = []
    for rule in MATRIX_RULES:
        for axiom in MATRIX_AXIOMS:
            report = sweep(rule, axiom, n, mode, jobs=jobs, witness_cap=witness_cap)
            if (rule, axiom) == ("obi", "CV"):
                expected, expected_alt = OBI_CV_PROOF, OBI_CV_STATEMENT
            else:
                expected, expected_alt = MATRIX_EXPECTED[(rule, axiom)], None
            verdict = report.verdict
            confirmed = mode == EXHAUSTIVE or verdict == "violated"
            discrepancy = confirmed and verdict != expected
            cells.append(
                MatrixCell(rule, axiom, expected, expected_alt, verdict, confirmed, discrepancy, report)
            )
    return MatrixReport(n, mode, MATRIX_RULES, MATRIX_AXIOMS, tuple(cells))


def split_plurality_slide_instance(n: int = 4, universe: Universe | None = None):
    """The pinned four-individual slide separating split plurality from SI.

    Best class {1}, {2}, {2,3}, {1,4} (ids 0-based), gamma = {{1,4}, {2}}
    moved one class down, watched pair (0, 1). Returns the base ranking,
    the move and the slid ranking.
    """
    if n < 4:
        raise ValueError("the slide instance needs at least four individuals")
    universe = universe or Universe(n)
    top = (
        members_mask([0], universe),
        members_mask([1], universe),
        members_mask([1, 2], universe),
        members_mask([0, 3], universe),
    )
    rest = tuple(m for m in range(1, universe.full_mask + 1) if m not in top)
    ranking = CoalitionalRanking._trusted(universe, (tuple(sorted(top)), rest))
    gamma = tuple(sorted((members_mask([0, 3], universe), members_mask([1], universe))))
    move = SlideMove(0, 1, gamma)
    return ranking, move, apply_slide(ranking, move)


def les_stag_instance(universe: Universe | None = None) -> CoalitionalRanking:
    """Two-level instance where lexicographic excellence breaks agreement.

    Best class {1,2}, then {1}, then everything else (ids 0-based over
    three individuals unless a larger universe is given).
    """
    universe = universe or Universe(3)
    top = members_mask([0, 1], universe)
    second = members_mask([0], universe)
    rest = tuple(m for m in range(1, universe.full_mask + 1) if m not in (top, second))
    return CoalitionalRanking._trusted(universe, ((top,), (second,), rest))


INDEPENDENCE_EXPECTED = (
    ("f_star", "STAG", "satisfied"),
    ("f_star", "SI", "satisfied"),
    ("f_star", "DMON", "violated"),
    ("split_plurality", "STAG", "satisfied"),
    ("split_plurality", "DMON", "satisfied"),
    ("split_plurality", "SI", "violated"),
    ("les", "SI", "satisfied"),
    ("les", "DMON", "satisfied"),
    ("les", "STAG", "violated"),
)


def independence_report(n: int = 4, *, jobs: int = 1, witness_cap: int = 10) -> dict:
    """Evidence that none of the three characterizing axioms is redundant.

    For each alternative rule, sweeps the two axioms it is expected to
    keep (exhaustively at n = 3) and exhibits a violation of the third:
    a searched witness for f_star against DMON, the pinned
    four-individual slide for split plurality against SI, and the pinned
    two-level instance for les against STAG. Each claim carries a
    discrepancy flag where the evidence contradicts the expectation.
    """
    if n < 4:
        raise ValueError("independence_report needs n >= 4 for the slide instance")
    claims = []

    def add_sweep_claim(rule, axiom, expected):
        report = sweep(rule, axiom, 3, jobs=jobs, witness_cap=witness_cap)
        claims.append(
            {
                "rule": rule,
                "axiom": axiom,
                "expected": expected,
                "verdict": report.verdict,
                "discrepancy": report.verdict != expected,
                "evidence_kind": "sweep",
                "sweep": report,
                "witness": report.witnesses[0] if report.witnesses else None,
            }
        )

    add_sweep_claim("f_star", "STAG", "satisfied")
    add_sweep_claim("f_star", "SI", "satisfied")

    found = find_violation("f_star", "DMON", 3)
    claims.append(
        {
            "rule": "f_star",
            "axiom": "DMON",
            "expected": "violated",
            "verdict": "violated" if found else "satisfied",
            "discrepancy": found is None,
            "evidence_kind": "witness_search",
            "sweep": None,
            "witness": found[1] if found else None,
        }
    )

    add_sweep_claim("split_plurality", "STAG", "satisfied")
    add_sweep_claim("split_plurality", "DMON", "satisfied")

    base, move, slid = split_plurality_slide_instance(n)
    rule_fn = RULES["split_plurality"]
    before = set(rule_fn(base)) & {0, 1}
    after = set(rule_fn(slid)) & {0, 1}
    violated = bool(before) and bool(after) and before != after
    witness = None
    if violated:
        pair = "{" + ",".join(base.universe.names[i] for i in (0, 1)) + "}"
        witness = Witness(
            axiom="SI",
            ranking=base,
            premise={"x": 0, "y": 1, "move": move, "ranking_after": slid},
            expected=f"selection restricted to {pair} unchanged",
            actual={
                "intersection_before": tuple(sorted(before)),
                "intersection_after": tuple(sorted(after)),
            },
        )
    claims.append(
        {
            "rule": "split_plurality",
            "axiom": "SI",
            "expected": "violated",
            "verdict": "violated" if violated else "satisfied",
            "discrepancy": not violated,
            "evidence_kind": "instance",
            "sweep": None,
            "witness": witness,
        }
    )

    add_sweep_claim("les", "SI", "satisfied")
    add_sweep_claim("les", "DMON", "satisfied")

    verdict = check_single("les", "STAG", les_stag_instance())
    claims.append(
        {
            "rule": "les",
            "axiom": "STAG",
            "expected": "violated",
            "verdict": verdict.status,
            "discrepancy": verdict.status != VIOLATED,
            "evidence_kind": "instance",
            "sweep": None,
            "witness": verdict.witness,
        }
    )

    return {
        "n": n,
        "claims": claims,
        "discrepancies": [c for c in claims if c["discrepancy"]],
    }
