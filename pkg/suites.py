"""
Verification suites for the iSchur toolkit
Each suite expands a parameter grid into independent cases, runs them
(optionally on a thread pool) and folds the outcome into a SuiteReport.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from config_manager import check_caps, get_threads
from errors import ParameterRangeError
from longform import (
    FormalCombination,
    commutation_checks,
    divided_power,
    dp2_check,
    dp3_checks,
    j_box,
    k_binomial_checks,
    r_stability_identities,
    zero_diagonal_matrices,
)
from schur import (
    Comparison,
    SchurElement,
    basis,
    basis_size,
    leading_failures,
    leading_term_cases,
    left_factor,
    multi_mul,
    oracle_product,
    ordered_product,
    short_mul,
    strictly_below,
    tr1_replacements,
    triangular_monomial,
    unitriangular_failures,
)
from tensor import (
    check_commuting_and_match,
    check_eta_bijection,
    check_hecke_relations,
    check_hecke_routes,
    check_relations,
)
from weyl import add_vectors, compositions, theta_e, triple_count

Case = Callable[[], List[Comparison]]

SUITES = ("dimension", "short", "multi", "long", "triangular", "leading", "relations",
          "commuting", "divided", "kbinom", "stability")

LONG_IDENTITIES = ("longMF1_left", "longMF1_right", "longMF2", "longMF3", "longMF4")


@dataclass
class SuiteReport:
    """Outcome of one suite run; zero failures means exit code 0"""

    suite: str
    grid: Dict
    cases: int = 0
    failed: List[Comparison] = field(default_factory=list)
    wall_time: Optional[float] = None

    @property
    def failure_count(self) -> int:
        return len(self.failed)

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_json(self, timing: bool = False) -> Dict:
        data = {
            "suite": self.suite,
            "grid": self.grid,
            "cases": self.cases,
            "failures": [c.to_json() for c in self.failed],
            "failure_count": self.failure_count,
        }
        if timing and self.wall_time is not None:
            data["wall_time"] = round(self.wall_time, 3)
        return data


def _failures_as_comparison(label: str, failures: List[str]) -> Comparison:
    return Comparison(label, failures, [])


# ===== Case builders =====

def dimension_cases(n: int, r: int, **_) -> List[Case]:
    def run():
        size = len(basis(n, r))
        return [Comparison(f"|Xi| vs triples (n={n}, r={r})", size, triple_count(n, r)),
                Comparison(f"|Xi| vs closed count (n={n}, r={r})", size, basis_size(n, r))]
    return [run]


def short_cases(n: int, r: int, **_) -> List[Case]:
    if r < 1:
        return []
    shapes = [("e", h) for h in range(1, n)] + [("f", h) for h in range(1, n)] + [("t", n)]
    cases = []
    for kind, h in shapes:
        for lam in compositions(n, r - 1):
            for A in basis(n, r):
                def run(kind=kind, h=h, lam=lam, A=A):
                    left = left_factor(kind, h, 1, lam)
                    return [Comparison(f"{kind}{h} lambda={lam.parts} A={A.rows()}",
                                       short_mul(kind, h, lam, A), oracle_product(left, A))]
                cases.append(run)
    return cases


def multi_cases(n: int, r: int, m_max: int = 3, **_) -> List[Case]:
    cases = []
    for direction, kind, source in (("up", "e", 1), ("down", "f", 0)):
        for h in range(1, n):
            for m in range(1, min(m_max, r) + 1):
                for lam in compositions(n, r - m):
                    ro = add_vectors(theta_e(n, h + source, m), lam.hat())
                    for A in basis(n, r):
                        if A.ro() != ro:
                            continue

                        def run(direction=direction, kind=kind, h=h, m=m, lam=lam, A=A):
                            left = left_factor(kind, h, m, lam)
                            return [Comparison(f"{direction} h={h} m={m} lambda={lam.parts} A={A.rows()}",
                                               multi_mul(direction, h, m, lam, A), oracle_product(left, A))]
                        cases.append(run)
    return cases


def _stability_cases(identities: Sequence[str], n: int, r_set: Sequence[int], jbox: int,
                     max_half: int, perturb: bool) -> List[Case]:
    cases = []
    for identity in identities:
        for case in r_stability_identities(identity, n, jbox, max_half):
            def run(case=case, identity=identity):
                formal = case.formal
                if perturb:
                    formal = formal + FormalCombination.unit(n)
                return [Comparison(f"{identity} {case.label} r={rr}", formal.evaluate(rr), case.numeric(rr))
                        for rr in r_set if rr >= case.min_r]
            cases.append(run)
    return cases


def long_cases(n: int, r: int, jbox: int = 1, perturb: bool = False, max_half: int = 2, **_) -> List[Case]:
    return _stability_cases(LONG_IDENTITIES, n, [r], jbox, max_half, perturb)


def stability_cases(n: int, r: int, jbox: int = 1, perturb: bool = False, max_half: int = 2,
                    r_set: Optional[Sequence[int]] = None, **_) -> List[Case]:
    r_set = list(r_set or (r, r + 1))
    return _stability_cases(LONG_IDENTITIES + ("EaE",), n, r_set, jbox, max_half, perturb)


def triangular_cases(n: int, r: int, **_) -> List[Case]:
    cases = []
    for A in basis(n, r):
        def run(A=A):
            value = triangular_monomial(A) - SchurElement.basis_element(A)
            bad = [B.rows() for B in value.support() if not strictly_below(B, A)]
            checks = [Comparison(f"m(A) - [A] below A={A.rows()}", bad, [])]
            for label, labels in tr1_replacements(A):
                replaced = ordered_product(labels)
                above = [B.rows() for B in replaced.support() if not strictly_below(B, A)]
                checks.append(Comparison(f"replacement {label} A={A.rows()}", above, []))
            return checks
        cases.append(run)
    cases.append(lambda: [_failures_as_comparison(f"unitriangular (n={n}, r={r})",
                                                  unitriangular_failures(n, r))])
    return cases


def leading_cases(n: int, r: int, m_max: int = 2, **_) -> List[Case]:
    return [lambda case=case: [_failures_as_comparison(f"{case.label} A={case.right.rows()}",
                                                       leading_failures(case))]
            for case in leading_term_cases(n, r, m_max)]


def relations_cases(n: int, r: int, **_) -> List[Case]:
    return [lambda: check_relations(n, r), lambda: check_hecke_relations(n, r)]


def commuting_cases(n: int, r: int, **_) -> List[Case]:
    cases: List[Case] = [lambda: check_commuting_and_match(n, r)]
    if n >= r:
        cases += [lambda: check_eta_bijection(n, r), lambda: check_hecke_routes(n, r)]
    return cases


def divided_cases(n: int, r: int, m_max: int = 3, jbox: int = 1, **_) -> List[Case]:
    cases: List[Case] = []
    for kind in ("e", "f"):
        for h in range(1, n):
            for m in range(1, min(m_max, r) + 1):
                cases.append(lambda kind=kind, h=h, m=m: [divided_power(kind, h, m, n, r)])
    for m in range(1, m_max + 1):
        cases.append(lambda m=m: dp2_check(m, n, r))
    for A in zero_diagonal_matrices(n, 1):
        for j in j_box(n, jbox):
            for m in range(1, min(m_max, 2) + 1):
                cases.append(lambda A=A, j=j, m=m: dp3_checks(m, A, j, r))
    cases.append(lambda: commutation_checks(n, r))
    return cases


def kbinom_cases(n: int, r: int, **_) -> List[Case]:
    return [lambda: k_binomial_checks(n, r)]


SUITE_BUILDERS: Dict[str, Callable[..., List[Case]]] = {
    "dimension": dimension_cases,
    "short": short_cases,
    "multi": multi_cases,
    "long": long_cases,
    "triangular": triangular_cases,
    "leading": leading_cases,
    "relations": relations_cases,
    "commuting": commuting_cases,
    "divided": divided_cases,
    "kbinom": kbinom_cases,
    "stability": stability_cases,
}


# Options each builder consumes; the report grid records only these
SUITE_OPTIONS: Dict[str, Tuple[str, ...]] = {
    "dimension": (),
    "short": (),
    "multi": ("m_max",),
    "long": ("jbox", "perturb", "max_half"),
    "triangular": (),
    "leading": ("m_max",),
    "relations": (),
    "commuting": (),
    "divided": ("m_max", "jbox"),
    "kbinom": (),
    "stability": ("jbox", "perturb", "max_half", "r_set"),
}

# Smallest allowed value per integer option
OPTION_MINIMUMS = {"jbox": 0, "m_max": 1, "max_half": 0}


def check_options(threads: Optional[int], options: Dict):
    """
    Raises:
        ParameterRangeError: on an option below its minimum
    """
    if threads is not None and threads < 1:
        raise ParameterRangeError(f"threads must be at least 1, got {threads}")
    for key, minimum in OPTION_MINIMUMS.items():
        value = options.get(key)
        if value is not None and value < minimum:
            raise ParameterRangeError(f"{key} must be at least {minimum}, got {value}")
    bad = [rr for rr in options.get("r_set") or () if rr < 1]
    if bad:
        raise ParameterRangeError(f"r_set entries must be at least 1, got {bad}")


# ===== Runner =====

def run_suite(suite: str, n: int, r: int, threads: Optional[int] = None,
              caps: Optional[Dict[str, int]] = None, **options) -> SuiteReport:
    """
    Run one named suite on the grid (n, r) plus options.

    Args:
        suite: one of SUITES
        threads: worker threads; ISCHUR_THREADS / config when omitted
        caps: desk-scale caps; config when omitted
        **options: jbox, m_max, r_set, perturb, max_half as the suite uses them

    Raises:
        ParameterRangeError: unknown suite or an option out of range
        CapExceededError: grid beyond the caps
    """
    if suite not in SUITE_BUILDERS:
        raise ParameterRangeError(f"Unknown suite: {suite}; choose from {', '.join(SUITES)}")
    options = {k: v for k, v in options.items() if v is not None}
    check_options(threads, options)
    top = max([r] + list(options.get("r_set", [])))
    if suite == "stability" and "r_set" not in options:
        top = r + 1
    check_caps(n, top, caps)

    grid = {"n": n, "r": r}
    grid.update({k: (list(v) if isinstance(v, (tuple, list)) else v)
                 for k, v in sorted(options.items()) if k in SUITE_OPTIONS[suite]})
    report = SuiteReport(suite, grid)

    started = time.perf_counter()
    cases = SUITE_BUILDERS[suite](n, r, **options)
    threads = threads or get_threads()
    if threads > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda case: case(), cases))
    else:
        results = [case() for case in cases]

    # pool.map keeps submission order, so the report is deterministic
    for comparisons in results:
        for comparison in comparisons:
            report.cases += 1
            if not comparison.ok:
                report.failed.append(comparison)
    report.wall_time = time.perf_counter() - started
    return report
