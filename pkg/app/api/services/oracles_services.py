# app/api/services/oracles_services.py
"""
Brute-force verifiers. Each check rebuilds its answer from hook moves, vertex
relations or union-find and compares with the closed forms used elsewhere.
"""
import asyncio
import logging
from collections import deque
from typing import Callable, Hashable, Iterable, Optional

from sympy import Poly, Symbol as SympySymbol, cyclotomic_poly as sympy_cyclotomic_poly, divisors, primerange

from app.api.services.blocks_services import BlockService, get_block_service
from app.api.services.unipotent_services import UnipotentService, get_unipotent_service
from app.schemas.contracts.reports_dtos import CheckReport
from app.schemas.enums.families_types import Family
from app.schemas.models.beta_sets_models import BetaSet
from app.schemas.models.characters_models import CharLabel, UnipotentChar
from app.schemas.models.groups_models import FiniteGroupSpec
from app.schemas.models.polys_models import CycPoly
from app.schemas.models.symbols_models import Symbol
from app.utility import beta_sets, symbols
from app.utility.cyclotomic import compose_factorization, cyclotomic_poly, d_prime, multiplicative_order
from app.utility.exceptions import InvalidInputError
from app.utility.union_find import common_coarsening

logger = logging.getLogger(__name__)

CLASSICAL_FAMILIES = (Family.A, Family.TWISTED_A, Family.B, Family.C, Family.D, Family.TWISTED_D)
_MIN_RANK = {Family.D: 2, Family.TWISTED_D: 2}

SAMPLE_QS = (2, 3, 4, 5, 7, 9)


def beta_max_closed_form(m: int, k: int) -> int:
    return m if k == 0 else m - (k * k - 3 * k + 2) // 2


def symbol_max_closed_form(n: int, k: int) -> int:
    if k == 0:
        return n
    if k % 2:
        return n - (k * k - 4 * k + 3) // 4
    return n - (k * k - 4 * k + 4) // 4


class OracleService:
    def __init__(self, unipotent_service: UnipotentService, block_service: BlockService):
        self.unipotent_service = unipotent_service
        self.block_service = block_service

    # ======================
    # ENUMERATION BY HOOK ADDITION
    # ======================

    @staticmethod
    def enumerate_beta_sets(m: int, k: int) -> list[BetaSet]:
        """β-sets of rank m and defect k, grown from the padded 2-core by adding 2-hooks."""
        if m < 0 or k < 0:
            raise InvalidInputError(f"rank and defect must be natural, got m={m}, k={k}")
        core_rank = k * (k + 1) // 2
        if m < core_rank or (m - core_rank) % 2:
            return []
        # m leading beads leave room for every β-set of rank m
        padding = m
        start = tuple(range(padding)) + tuple(2 * j + 1 + padding for j in range(k))
        level = {start}
        for _ in range((m - core_rank) // 2):
            level = {
                tuple(sorted((set(state) - {x}) | {x + 2}))
                for state in level
                for x in state
                if x + 2 not in state
            }
        return sorted({beta_sets.beta_normalize(state) for state in level})

    @staticmethod
    def enumerate_symbols(n: int, k: int) -> list[Symbol]:
        """Symbols of rank n and defect k, grown from (0 ... k-1 / -) by adding 1-hooks."""
        if n < 0 or k < 0:
            raise InvalidInputError(f"rank and defect must be natural, got n={n}, k={k}")
        core_rank = k * k // 4
        if n < core_rank:
            return []
        padding = n
        level = {(tuple(range(padding + k)), tuple(range(padding)))}
        for _ in range(n - core_rank):
            grown = set()
            for rows in level:
                for index, row in enumerate(rows):
                    present = set(row)
                    for x in row:
                        if x + 1 not in present:
                            moved = tuple(sorted((present - {x}) | {x + 1}))
                            grown.add((moved, rows[1]) if index == 0 else (rows[0], moved))
            level = grown
        return sorted({Symbol(*symbols.canonical_raw(*rows)) for rows in level})

    # ======================
    # COMBINATORIAL CHECKS
    # ======================

    def check_core_confluence(self, max_rank: int, max_d: int) -> CheckReport:
        name = "core_confluence"
        params = dict(max_rank=max_rank, max_d=max_d)
        for d in range(1, max_d + 1):
            memo: dict = {}
            for m in range(max_rank + 1):
                for b in self._all_beta_sets(m):
                    ends, bad = _terminals(
                        b.elements,
                        memo,
                        moves=lambda state: beta_sets.beta_hooks(state, d),
                        step=lambda state, move: beta_sets.strip_zeros(beta_sets.remove_hook(state, move)),
                        sound=lambda before, after: beta_sets.raw_rank(before) - beta_sets.raw_rank(after) == d,
                    )
                    if bad or ends != {beta_sets.beta_d_core(b, d).elements}:
                        return CheckReport.failed(name, f"β-set {b}, d={d}: ends {sorted(ends)}", **params)

            hook_memo: dict = {}
            cohook_memo: dict = {}
            for n in range(max_rank + 1):
                for sym in self._all_symbols(n):
                    raw = (sym.row_s, sym.row_t)
                    ends, bad = _terminals(
                        raw,
                        hook_memo,
                        moves=lambda state: symbols.symbol_hooks(state, d),
                        step=lambda state, move: symbols.canonical_raw(*symbols.remove_hook(state, move, d)),
                        sound=lambda before, after: _rank_drop(before, after) == d
                        and _defect(before) == _defect(after),
                    )
                    if bad or ends != {_as_raw(symbols.symbol_d_core(sym, d))}:
                        return CheckReport.failed(name, f"symbol {sym}, d={d}: core ends {sorted(ends)}", **params)

                    ends, bad = _terminals(
                        raw,
                        cohook_memo,
                        moves=lambda state: symbols.symbol_cohooks(state, d),
                        step=lambda state, move: symbols.remove_cohook(state, move, d),
                        sound=lambda before, after: _rank_drop(before, after) == d
                        and abs(_signed_defect(before) - _signed_defect(after)) == 2,
                        normalize=lambda state: symbols.canonical_raw(*state),
                    )
                    if bad or ends != {_as_raw(symbols.symbol_d_cocore(sym, d))}:
                        return CheckReport.failed(name, f"symbol {sym}, d={d}: cocore ends {sorted(ends)}", **params)
        return CheckReport.ok(name, **params)

    def check_lemmas(self, max_rank: int, max_k: int) -> CheckReport:
        name = "lemmas"
        params = dict(max_rank=max_rank, max_k=max_k)
        for m in range(max_rank + 1):
            for k in range(max_k + 1):
                found = self.enumerate_beta_sets(m, k)
                expected = m - k * (k + 1) // 2 >= 0 and (m - k * (k + 1) // 2) % 2 == 0
                if bool(found) != expected:
                    return CheckReport.failed(name, f"β-sets m={m}, k={k}: existence {bool(found)}", **params)
                for b in found:
                    stats = beta_sets.beta_stats(b)
                    if (stats.rank, stats.defect) != (m, k):
                        return CheckReport.failed(name, f"β-set {b} enumerated for m={m}, k={k}", **params)
                if found and max(beta_sets.beta_stats(b).class_max for b in found) != beta_max_closed_form(m, k):
                    return CheckReport.failed(name, f"β-sets m={m}, k={k}: maximum", **params)

                found = self.enumerate_symbols(m, k)
                if bool(found) != (k * k // 4 <= m):
                    return CheckReport.failed(name, f"symbols n={m}, k={k}: existence {bool(found)}", **params)
                for sym in found:
                    stats = symbols.symbol_stats(sym)
                    if (stats.rank, stats.defect) != (m, k):
                        return CheckReport.failed(name, f"symbol {sym} enumerated for n={m}, k={k}", **params)
                if found and max(symbols.symbol_stats(s).class_max for s in found) != symbol_max_closed_form(m, k):
                    return CheckReport.failed(name, f"symbols n={m}, k={k}: maximum", **params)
        return CheckReport.ok(name, **params)

    @staticmethod
    def check_cyclotomic_identities(max_n: int = 64, max_compose: int = 12, max_a: int = 6, max_ennola: int = 24) -> CheckReport:
        name = "cyclotomic_identities"
        params = dict(max_n=max_n, max_compose=max_compose, max_a=max_a, max_ennola=max_ennola)
        x = SympySymbol("x")
        for n in range(1, max_n + 1):
            reference = Poly(sympy_cyclotomic_poly(n, x), x).all_coeffs()[::-1]
            if list(cyclotomic_poly(n).coefficients) != [int(c) for c in reference]:
                return CheckReport.failed(name, f"Φ_{n} = {cyclotomic_poly(n)!r}", **params)
            product = CycPoly.of(1)
            for e in divisors(n):
                product = product * cyclotomic_poly(e)
            if product != CycPoly.monomial(n) - 1:
                return CheckReport.failed(name, f"product of Φ_d over d | {n}", **params)
        for n in range(1, max_compose + 1):
            for a in range(1, max_a + 1):
                product = CycPoly.of(1)
                for e, mult in compose_factorization(n, a).factors:
                    product = product * cyclotomic_poly(e) ** mult
                if product != cyclotomic_poly(n).compose_power(a):
                    return CheckReport.failed(name, f"Φ_{n}(x^{a})", **params)
        for d in range(3, max_ennola + 1):
            flipped = cyclotomic_poly(d).negate_variable()
            target = cyclotomic_poly(d_prime(d))
            if flipped != target and -flipped != target:
                return CheckReport.failed(name, f"Φ_{d}(-x) vs Φ_{d_prime(d)}", **params)
        return CheckReport.ok(name, **params)

    # ======================
    # SERIES
    # ======================

    def check_d1_minimality(self, g: FiniteGroupSpec, d: int) -> CheckReport:
        name = "d1_minimality"
        params = dict(group=str(g), d=d)
        chars = self.unipotent_service.enumerate_unipotent(g)

        one_by_cores = _group_by(chars, lambda c: tuple(_one_series_core(label) for label in c.components))
        one_series = self.unipotent_service.one_series_partition(g)
        if one_by_cores != set(one_series.classes):
            return CheckReport.failed(name, f"{g}: 1-series disagree with 1-cores", **params)

        d_series = self.unipotent_service.d_series_partition(g, d)
        finest = common_coarsening(chars, one_series.classes, d_series.classes)
        d1 = self.unipotent_service.d1_series_partition(g, d)
        if finest != set(d1.classes):
            extra = sorted(set(d1.classes) ^ finest, key=len)[0]
            return CheckReport.failed(name, "{" + ", ".join(sorted(str(c) for c in extra)) + "}", **params)
        return CheckReport.ok(name, **params)

    def check_d1_grid(self, max_rank: int, max_d: int) -> CheckReport:
        name = "d1_minimality_grid"
        params = dict(max_rank=max_rank, max_d=max_d)
        for family in CLASSICAL_FAMILIES:
            for rank in range(_MIN_RANK.get(family, 1), max_rank + 1):
                g = FiniteGroupSpec.simple(family, rank)
                for d in range(1, max_d + 1):
                    report = self.check_d1_minimality(g, d)
                    if not report.passed:
                        return CheckReport.failed(name, f"{g}, d={d}: {report.counterexample}", **params)
        return CheckReport.ok(name, **params)

    # ======================
    # BLOCKS
    # ======================

    def check_sc_unfolded(self, n: int, d: int) -> CheckReport:
        name = "sc_unfolded"
        params = dict(n=n, d=d)
        if d < 1 or d % 2:
            raise InvalidInputError(f"S_c is defined for even d only, got d={d}")
        half = d // 2
        unfolded = {
            t
            for t in self.block_service.sp_types(n)
            if all(
                i < t.s * (t.s - 1) + half and i > n - half - t.s2 * (t.s2 - 1)
                for i in self.block_service.sp_type_vertex_range(n, t)
            )
        }
        closed = self.block_service.sp_sc(n, d)
        if unfolded != closed:
            return CheckReport.failed(name, str(sorted(unfolded ^ closed)[0]), **params)
        return CheckReport.ok(name, sc=[str(t) for t in sorted(closed)], **params)

    def check_sc_grid(self, max_n: int) -> CheckReport:
        name = "sc_unfolded_grid"
        for n in range(1, max_n + 1):
            for d in range(2, 2 * n + 3, 2):
                report = self.check_sc_unfolded(n, d)
                if not report.passed:
                    return CheckReport.failed(name, f"n={n}, d={d}: {report.counterexample}", max_n=max_n)
        return CheckReport.ok(name, max_n=max_n)

    def check_block_closure(self, n: int, q: int, ell: int) -> CheckReport:
        name = "block_closure"
        params = dict(n=n, q=q, ell=ell)
        d = multiplicative_order(q, ell)
        if ell == 2:
            return CheckReport.ok(name, skipped=True, **params)

        types = self.block_service.sp_types(n)
        seen: set = set()
        closure = set()
        for start in types:
            if start in seen:
                continue
            component = {start}
            queue = deque([start])
            while queue:
                t = queue.popleft()
                for u in types:
                    if u not in component and any(
                        self.block_service.sp_sim_at_vertex(n, d, i, t, u) for i in range(n + 1)
                    ):
                        component.add(u)
                        queue.append(u)
            seen |= component
            closure.add(frozenset(component))

        expected = set(self.block_service.sp_block_partition(n, q, ell).classes)
        if closure != expected:
            diff = sorted(closure ^ expected, key=lambda c: sorted(c))[0]
            return CheckReport.failed(name, "{" + ", ".join(str(t) for t in sorted(diff)) + "}", d=d, **params)
        return CheckReport.ok(name, d=d, **params)

    def check_block_grid(self, max_n: int, max_ell: int = 23, qs: Iterable[int] = SAMPLE_QS) -> CheckReport:
        name = "block_closure_grid"
        params = dict(max_n=max_n, max_ell=max_ell)
        for n in range(1, max_n + 1):
            for ell in primerange(2, max_ell + 1):
                for q in qs:
                    if q % ell == 0:
                        continue
                    report = self.check_block_closure(n, q, int(ell))
                    if not report.passed:
                        return CheckReport.failed(name, f"n={n}, q={q}, ℓ={ell}: {report.counterexample}", **params)
        return CheckReport.ok(name, **params)

    # ======================
    # SUITE
    # ======================

    async def run_suite(
        self,
        max_rank: int,
        max_d: int,
        n: Optional[int] = None,
        q: Optional[int] = None,
        ell: Optional[int] = None,
    ) -> list[CheckReport]:
        """
        Run the oracle checks concurrently.

        Args:
            max_rank: Rank bound for the combinatorial and series checks.
            max_d: Bound for d in the combinatorial and series checks.
            n, q, ell: When given, the block checks run for these values only.

        Returns:
            One report per check, in submission order.
        """
        checks: list[Callable[[], CheckReport]] = [
            lambda: self.check_core_confluence(min(max_rank, 8), min(max_d, 4)),
            lambda: self.check_lemmas(max_rank, 6),
            self.check_cyclotomic_identities,
            lambda: self.check_d1_grid(min(max_rank, 5), max_d),
        ]
        if n is not None:
            checks += [lambda d=d: self.check_sc_unfolded(n, d) for d in range(2, 2 * n + 3, 2)]
            if q is not None and ell is not None:
                checks.append(lambda: self.check_block_closure(n, q, ell))
        else:
            checks += [lambda: self.check_sc_grid(30), lambda: self.check_block_grid(8)]

        reports = await asyncio.gather(*(asyncio.to_thread(check) for check in checks))
        for report in reports:
            if not report.passed:
                logger.error("check %s failed: %s", report.name, report.counterexample)
        return list(reports)

    # ======================
    # HELPERS
    # ======================

    def _all_beta_sets(self, m: int) -> list[BetaSet]:
        found = []
        k = 0
        while k * (k + 1) // 2 <= m:
            found += self.enumerate_beta_sets(m, k)
            k += 1
        return found

    def _all_symbols(self, n: int) -> list[Symbol]:
        found = []
        k = 0
        while k * k // 4 <= n:
            found += self.enumerate_symbols(n, k)
            k += 1
        return found


def _terminals(start, memo: dict, moves, step, sound, normalize=lambda state: state) -> tuple[set, bool]:
    """Ends of every maximal removal sequence from ``start``, and whether some step broke ``sound``."""
    if start in memo:
        return memo[start]
    available = moves(start)
    if not available:
        result = ({normalize(start)}, False)
    else:
        ends: set = set()
        bad = False
        for move in available:
            following = step(start, move)
            bad = bad or not sound(start, following)
            sub_ends, sub_bad = _terminals(normalize(following), memo, moves, step, sound, normalize)
            ends |= sub_ends
            bad = bad or sub_bad
        result = (ends, bad)
    memo[start] = result
    return result


def _as_raw(sym: Symbol) -> symbols.RawSymbol:
    return sym.row_s, sym.row_t


def _rank_drop(before: symbols.RawSymbol, after: symbols.RawSymbol) -> int:
    return symbols.raw_rank(*before) - symbols.raw_rank(*after)


def _defect(raw: symbols.RawSymbol) -> int:
    return abs(_signed_defect(raw))


def _signed_defect(raw: symbols.RawSymbol) -> int:
    return len(raw[0]) - len(raw[1])


def _one_series_core(label: CharLabel) -> Hashable:
    if label.family == Family.TWISTED_A:
        return beta_sets.beta_d_core(beta_sets.partition_to_beta(label.partition), 2)
    if label.family.uses_symbols:
        return symbols.symbol_d_core(label.symbol, 1)
    return None


def _group_by(chars: Iterable[UnipotentChar], key: Callable[[UnipotentChar], Hashable]) -> set[frozenset]:
    grouped: dict = {}
    for char in chars:
        grouped.setdefault(key(char), set()).add(char)
    return {frozenset(members) for members in grouped.values()}


# Dependency
def get_oracle_service(
    unipotent_service: Optional[UnipotentService] = None,
    block_service: Optional[BlockService] = None,
) -> OracleService:
    unipotent_service = unipotent_service or get_unipotent_service()
    return OracleService(unipotent_service, block_service or get_block_service(unipotent_service))
