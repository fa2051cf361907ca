"""Exhaustive property suites over configurable shapes and bounds.

Each suite returns one CheckResult per unit of work; the CLI `verify`
subcommand and the acceptance tests both run through this module, so the two
always agree. `run_suites` can shard suites across processes; results are
aggregated in a fixed order so runs are deterministic for a given
configuration (seed included).
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterator, Sequence

from . import classical, peeling
from .enumeration import enumerate_rpps, enumerate_sw_paths, enumerate_tableaux
from .geometry import Partition, content_key, revlex_key, rim_hook_key
from .insertion import (
    InsertionFailure,
    Tableau,
    build,
    extraction_path,
    factorize,
    insertion_path,
    is_compatible,
    rim_hook_of_path,
    try_insert,
)
from .rpp import Rpp
from .series import (
    MultiTraceSeries,
    gansner_product,
    hook_monomial,
    hook_product,
    rpp_series,
    trace_series,
)

DEFAULT_SHAPES = ((2, 2), (3, 2), (3, 3, 3), (4, 3, 1), (5, 2, 1, 1))


@dataclass(frozen=True)
class VerifyConfig:
    shapes: tuple[tuple[int, ...], ...] = DEFAULT_SHAPES
    size_bound: int = 8
    weight_bound: int = 8
    path_size_bound: int = 6
    stanley_degree: int = 10
    trace_degree: int = 8
    gk_shape: tuple[int, ...] = (3, 3, 3)
    gk_total: int = 5
    gk_rmax: int = 4
    syt_n: int = 3
    perm_n: int = 4
    sample: int | None = None
    seed: int = 0

    def partitions(self) -> list[Partition]:
        return [Partition(parts) for parts in self.shapes]

    def pick(self, items: list) -> list:
        """Deterministic subsample (order preserving) when sampling is on."""
        if self.sample is None or len(items) <= self.sample:
            return items
        rng = random.Random(self.seed)
        keep = sorted(rng.sample(range(len(items)), self.sample))
        return [items[i] for i in keep]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.suite}: {self.name}{tail}"


def _result(suite: str, name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(suite, name, passed, detail)


# ---------------------------------------------------------------- suites


def suite_stanley(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for shape in config.partitions():
        lhs = rpp_series(shape, config.stanley_degree)
        rhs = hook_product(shape, config.stanley_degree)
        out.append(
            _result(
                "stanley",
                f"size series equals hook product for {shape}",
                lhs == rhs,
                f"coefficients {list(lhs.coefficients)}",
            )
        )
    return out


def suite_gansner(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for shape in config.partitions():
        lhs = trace_series(shape, config.trace_degree)
        rhs = gansner_product(shape, config.trace_degree)
        out.append(
            _result(
                "gansner",
                f"trace series equals refined hook product for {shape}",
                lhs == rhs,
                f"{len(rhs.terms)} monomials",
            )
        )
        specialized = rhs.specialize()
        expected = hook_product(shape, config.trace_degree)
        out.append(
            _result(
                "gansner",
                f"all-variables-to-q specialization matches for {shape}",
                specialized == expected,
            )
        )
    return out


def suite_bijection(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for shape in config.partitions():
        fillings = config.pick(list(enumerate_rpps(shape, config.size_bound)))
        ok = 0
        for pi in fillings:
            fact = factorize(pi)
            keys = [revlex_key(u) for u in fact.anchors]
            if keys != sorted(keys):
                break
            if build(fact.to_tableau()) != pi:
                break
            ok += 1
        out.append(
            _result(
                "bijection",
                f"factorize then build is the identity on {shape}",
                ok == len(fillings),
                f"{ok}/{len(fillings)} fillings",
            )
        )
        tableaux = config.pick(list(enumerate_tableaux(shape, config.weight_bound)))
        ok = sum(1 for t in tableaux if factorize(build(t)).to_tableau() == t)
        out.append(
            _result(
                "bijection",
                f"build then factorize is the identity on {shape}",
                ok == len(tableaux),
                f"{ok}/{len(tableaux)} tableaux",
            )
        )
    return out


def suite_golden(config: VerifyConfig) -> list[CheckResult]:
    out = []
    shape = Partition((4, 3, 1))
    pi = Rpp(shape, ((0, 1, 2, 3), (1, 2, 2), (1,)))
    out.append(
        _result(
            "golden",
            "candidate set of the running example",
            pi.candidates() == frozenset({(1, 2), (1, 4), (2, 2), (3, 1)}),
        )
    )
    out.append(
        _result(
            "golden",
            "lexicographic factorization of the running example",
            factorize(pi).anchors == ((1, 4), (1, 3), (2, 2), (1, 1)),
        )
    )
    square = Partition((3, 3, 3))
    flat = Rpp(square, ((0, 0, 0), (0, 0, 0), (1, 1, 1)))
    p1 = insertion_path(square.rim_hook((1, 3)), flat)
    p2 = insertion_path(square.rim_hook((2, 2)), flat)
    out.append(
        _result(
            "golden",
            "two insertion paths into the staircase filling",
            p1.cells == ((1, 3), (2, 3), (2, 2)) and p2.cells == ((2, 3), (2, 2), (2, 1)),
        )
    )
    r1 = try_insert(square.rim_hook((1, 3)), flat)
    r2 = try_insert(square.rim_hook((2, 2)), flat)
    out.append(
        _result(
            "golden",
            "the corresponding insertion results",
            isinstance(r1, Rpp)
            and isinstance(r2, Rpp)
            and r1.rows == ((0, 0, 1), (0, 1, 1), (1, 1, 1))
            and r2.rows == ((0, 0, 0), (1, 1, 1), (1, 1, 1)),
        )
    )
    steep = Rpp(square, ((1, 1, 4), (2, 3, 4), (4, 4, 4)))
    toggled = peeling.corner_toggle(steep, (3, 3))
    out.append(
        _result(
            "golden",
            "first corner toggle of the peeling chain",
            toggled.shape == Partition((3, 3, 2))
            and toggled.rows == ((0, 1, 4), (2, 3, 4), (4, 4)),
        )
    )
    peeled = peeling.peel_tableau(steep)
    out.append(
        _result(
            "golden",
            "full peeling chain ends at the recorded tableau",
            peeled.rows == ((1, 1, 2), (0, 1, 0), (3, 0, 0)),
        )
    )
    pair = classical.rsk(Tableau(square, ((1, 1, 2), (0, 1, 0), (3, 0, 0))))
    out.append(
        _result(
            "golden",
            "row insertion of the recorded tableau",
            pair.p.rows == ((1, 1, 1, 1), (2, 2, 3), (3,))
            and pair.q.rows == ((1, 1, 1, 1), (2, 3, 3), (3,)),
        )
    )
    return out


def suite_pak(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for shape in config.partitions():
        fillings = config.pick(list(enumerate_rpps(shape, config.size_bound)))
        agree = all(
            peeling.peel_tableau(pi) == factorize(pi).to_tableau() for pi in fillings
        )
        out.append(
            _result(
                "pak",
                f"peeling equals factorization on {shape}",
                agree,
                f"{len(fillings)} fillings, two independent code paths",
            )
        )
        _, outer = shape.corners()
        independent = True
        for pi in fillings:
            reference = peeling.peel_tableau(pi)
            for first in outer:
                if peeling.peel_tableau(pi, _first_then_default(first)) != reference:
                    independent = False
            if peeling.peel_tableau(pi, _max_corner) != reference:
                independent = False
        out.append(
            _result(
                "pak",
                f"corner choice does not matter on {shape}",
                independent,
                f"forced each of {len(outer)} corners first, plus a reversed policy",
            )
        )
    return out


def _first_then_default(first):
    used = False

    def choose(shape: Partition):
        nonlocal used
        if not used:
            used = True
            return first
        return min(shape.corners()[1], key=revlex_key)

    return choose


def _max_corner(shape: Partition):
    return max(shape.corners()[1], key=revlex_key)


def suite_commute(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for shape in config.partitions():
        _, outer = shape.corners()
        checked, failed = 0, 0
        for x in outer:
            reduced = shape.remove_corner(x)
            tableaux = [
                t
                for t in enumerate_tableaux(shape, config.weight_bound)
                if t.total >= 1 and t.value(x) == 0
            ]
            for t in config.pick(tableaux):
                anchors = t.anchors()
                first, rest = anchors[0], anchors[1:]
                partial = build(t.with_path([first], -1))
                whole = build(t)
                left = peeling.corner_toggle(whole, x)
                inserted = try_insert(
                    reduced.rim_hook(first), peeling.corner_toggle(partial, x)
                )
                checked += 1
                if isinstance(inserted, InsertionFailure) or inserted != left:
                    failed += 1
        out.append(
            _result(
                "commute",
                f"corner toggle commutes with insertion on {shape}",
                failed == 0,
                f"{checked} (corner, multiset) pairs",
            )
        )
    return out


def suite_insertion_uniqueness(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for shape in config.partitions():
        hooks = shape.rim_hooks()
        fillings = config.pick(list(enumerate_rpps(shape, config.path_size_bound)))
        checked, failed = 0, 0
        for pi in fillings:
            for hook in hooks:
                attempted = insertion_path(hook, pi)
                valid = []
                for path in enumerate_sw_paths(shape, hook.tail, len(hook)):
                    if not is_compatible(path, pi):
                        continue
                    try:
                        pi.with_path(path, +1)
                    except ValueError:
                        continue
                    valid.append(path)
                result = try_insert(hook, pi)
                checked += 1
                if isinstance(result, Rpp):
                    if len(valid) != 1 or valid[0].cells != attempted.cells:
                        failed += 1
                else:
                    witness_ok = (
                        result.witness in pi.candidates()
                        and content_key(result.witness) < content_key(attempted.head)
                    )
                    if valid or not witness_ok:
                        failed += 1
        out.append(
            _result(
                "insertion-uniqueness",
                f"unique valid path or certified failure on {shape}",
                failed == 0,
                f"{checked} (hook, filling) pairs against brute force",
            )
        )
    return out


def suite_crossing(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for shape in config.partitions():
        hooks = shape.rim_hooks()
        fillings = config.pick(list(enumerate_rpps(shape, config.path_size_bound)))
        cross_checked, cross_failed = 0, 0
        stab_checked, stab_failed = 0, 0
        for pi in fillings:
            candidates = pi.candidates()
            hooks_at = {
                u: rim_hook_of_path(extraction_path(u, pi), shape) for u in candidates
            }
            for hook in hooks:
                head_key = content_key(insertion_path(hook, pi).head)
                for u in candidates:
                    cross_checked += 1
                    if content_key(u) < head_key:
                        if rim_hook_key(hooks_at[u]) >= rim_hook_key(hook):
                            cross_failed += 1
                    if head_key <= content_key(u):
                        if rim_hook_key(hook) > rim_hook_key(hooks_at[u]):
                            cross_failed += 1
            for v in candidates:
                path = extraction_path(v, pi)
                if not is_compatible(path, pi):
                    continue
                try:
                    reduced = pi.with_path(path, -1)
                except ValueError:
                    continue
                after = reduced.candidates()
                for u in candidates:
                    if u != v:
                        stab_checked += 1
                        if u not in after:
                            stab_failed += 1
                for u in shape.cells():
                    if u not in candidates and content_key(u) < content_key(v):
                        stab_checked += 1
                        if u in after:
                            stab_failed += 1
        out.append(
            _result(
                "crossing",
                f"paths cannot cross on {shape}",
                cross_failed == 0,
                f"{cross_checked} (hook, candidate) pairs",
            )
        )
        out.append(
            _result(
                "crossing",
                f"candidates are stable under extraction on {shape}",
                stab_failed == 0,
                f"{stab_checked} cell checks",
            )
        )
    return out


def suite_hg(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for shape in config.partitions():
        fillings = config.pick(list(enumerate_rpps(shape, config.size_bound)))
        roundtrip = all(classical.hg_inv(classical.hg(pi)) == pi for pi in fillings)
        out.append(
            _result(
                "hg",
                f"inverse undoes the correspondence on {shape}",
                roundtrip,
                f"{len(fillings)} fillings",
            )
        )
        weights = all(classical.hg(pi).weighted_size == pi.size for pi in fillings)
        out.append(
            _result(
                "hg",
                f"recorded hooks account for the full size on {shape}",
                weights,
            )
        )
        var_lo = 1 - shape.length
        var_hi = shape.parts[0] - 1
        acc = MultiTraceSeries(var_lo, var_hi, config.trace_degree, {})
        for pi in enumerate_rpps(shape, config.trace_degree):
            t = classical.hg(pi)
            width = var_hi - var_lo + 1
            exps = [0] * width
            for u, count in t.entries():
                if count:
                    mono = hook_monomial(shape, u)
                    exps = [a + count * b for a, b in zip(exps, mono)]
            acc.add_term(tuple(exps), 1)
        out.append(
            _result(
                "hg",
                f"trace series through the correspondence matches for {shape}",
                acc == gansner_product(shape, config.trace_degree),
            )
        )
    return out


def suite_diag(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for shape in config.partitions():
        tableaux = config.pick(list(enumerate_tableaux(shape, config.weight_bound)))
        failed = 0
        for t in tableaux:
            pi = build(t)
            for k in range(1 - shape.length, shape.parts[0]):
                expected = sum(t.value(u) for u in classical.rectangle_cells(shape, k))
                if pi.trace(k) != expected:
                    failed += 1
        out.append(
            _result(
                "diag",
                f"traces are rectangle sums of the tableau on {shape}",
                failed == 0,
                f"{len(tableaux)} tableaux, every diagonal",
            )
        )
    return out


def _tableaux_by_total(shape: Partition, bound: int) -> Iterator[Tableau]:
    cells = list(shape.cells())
    grid = [[0] * p for p in shape.parts]

    def fill(idx: int, used: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau(shape, [tuple(row) for row in grid])
            return
        i, j = cells[idx]
        for v in range(0, bound - used + 1):
            grid[i - 1][j - 1] = v
            yield from fill(idx + 1, used + v)
        grid[i - 1][j - 1] = 0

    yield from fill(0, 0)


def suite_gk(config: VerifyConfig) -> list[CheckResult]:
    shape = Partition(config.gk_shape)
    tableaux = config.pick(list(_tableaux_by_total(shape, config.gk_total)))
    checked, failed = 0, 0
    for t in tableaux:
        pi = build(t)
        for k in range(1 - shape.length, shape.parts[0]):
            mu = classical.diag_partition(pi, k)
            nu = mu.conjugate()
            for r in range(1, config.gk_rmax + 1):
                checked += 2
                if sum(mu.parts[:r]) != classical.gk_chain_max(t, k, r, "weak"):
                    failed += 1
                if sum(nu.parts[:r]) != classical.gk_chain_max(t, k, r, "strict"):
                    failed += 1
    return [
        _result(
            "gk",
            f"chain maxima match diagonal partial sums on {shape}",
            failed == 0,
            f"{checked} (tableau, diagonal, family size) checks",
        )
    ]


def suite_syt(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for n in range(1, config.syt_n + 1):
        shape = Partition((n,) * n)
        total = n * n
        qualifying = [
            pi
            for pi in enumerate_rpps(shape, total)
            if all(pi.trace(k) == n - k and pi.trace(-k) == n - k for k in range(n))
        ]
        ok = all(classical.check_syt_diagonals(pi) for pi in qualifying)
        out.append(
            _result(
                "syt",
                f"diagonal transpose law for staircase traces, n={n}",
                ok and bool(qualifying),
                f"{len(qualifying)} qualifying fillings",
            )
        )
    return out


def suite_rsk_thm(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for n in range(1, config.perm_n + 1):
        ok = all(
            classical.check_rsk_transpose(classical.permutation_matrix(word))
            for word in permutations(range(1, n + 1))
        )
        out.append(
            _result(
                "rsk-thm",
                f"row insertion transposes through the composite map, n={n}",
                ok,
                f"all {_factorial(n)} permutations",
            )
        )
    return out


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def suite_involution(config: VerifyConfig) -> list[CheckResult]:
    out = []
    for n in range(1, config.perm_n + 1):
        ok = True
        for word in permutations(range(1, n + 1)):
            sigma = classical.permutation_matrix(word)
            tau = classical.hg(build(sigma))
            if not classical.is_permutation_matrix(tau) or classical.hg(build(tau)) != sigma:
                ok = False
        out.append(
            _result(
                "involution",
                f"composite map is an involution on permutation matrices, n={n}",
                ok,
            )
        )
    witness = None
    for parts in ((3, 3), (3, 3, 3)):
        shape = Partition(parts)
        for t in enumerate_tableaux(shape, 8):
            if classical.is_permutation_matrix(t):
                continue
            once = classical.hg(build(t))
            twice = classical.hg(build(once))
            if twice != t:
                witness = (shape, t)
                break
        if witness:
            break
    out.append(
        _result(
            "involution",
            "composite map is not an involution in general",
            witness is not None,
            f"counterexample on {witness[0]}: {witness[1].rows}" if witness else "",
        )
    )
    return out


SUITES: dict[str, Callable[[VerifyConfig], list[CheckResult]]] = {
    "stanley": suite_stanley,
    "gansner": suite_gansner,
    "bijection": suite_bijection,
    "golden": suite_golden,
    "pak": suite_pak,
    "commute": suite_commute,
    "insertion-uniqueness": suite_insertion_uniqueness,
    "crossing": suite_crossing,
    "hg": suite_hg,
    "diag": suite_diag,
    "gk": suite_gk,
    "syt": suite_syt,
    "rsk-thm": suite_rsk_thm,
    "involution": suite_involution,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def _run_one(args: tuple[str, VerifyConfig]) -> list[CheckResult]:
    name, config = args
    return SUITES[name](config)


def run_suites(
    names: Sequence[str], config: VerifyConfig | None = None, jobs: int = 1
) -> list[CheckResult]:
    """Run the named suites (or all of them) and return results in suite order."""
    config = config or VerifyConfig()
    expanded: list[str] = []
    for name in names:
        if name == "all":
            expanded.extend(k for k in SUITES if k not in expanded)
        elif name in SUITES:
            if name not in expanded:
                expanded.append(name)
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    units = [(name, config) for name in expanded]
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            grouped = list(pool.map(_run_one, units))
    else:
        grouped = [_run_one(unit) for unit in units]
    return [res for group in grouped for res in group]
