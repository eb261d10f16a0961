# app/api/services/unipotent_services.py
import itertools
import logging
import math
from typing import Callable, Hashable, Optional

from sympy.utilities.iterables import partitions

from app.api.services.exceptional_services import ExceptionalService, get_exceptional_service
from app.schemas.enums.families_types import Family
from app.schemas.models.beta_sets_models import PartitionT
from app.schemas.models.characters_models import CharLabel, D1Partition, UnipotentChar, sorted_chars
from app.schemas.models.groups_models import FiniteGroupSpec, GroupFactor
from app.schemas.models.symbols_models import Symbol
from app.utility.beta_sets import beta_d_core, beta_stats, partition_to_beta
from app.utility.cyclotomic import d_prime
from app.utility.exceptions import InvalidInputError, UnsupportedTypeError
from app.utility.symbols import canonical_raw, symbol_d_cocore, symbol_d_core, symbol_stats

logger = logging.getLogger(__name__)

# class key shared by every 1-series merged into E(G, d)
MERGED = "E"

LabelKey = Callable[[CharLabel, GroupFactor], Hashable]


def partitions_of(n: int) -> list[PartitionT]:
    if n == 0:
        return [PartitionT(())]
    result = []
    for multiplicities in partitions(n):
        parts = sorted(itertools.chain.from_iterable([p] * m for p, m in multiplicities.items()))
        result.append(PartitionT(tuple(parts)))
    return sorted(result)


def symbol_defect_rank(k: int) -> int:
    """Rank of the cuspidal symbol (0 1 ... k-1 / -) of defect k."""
    return k * k // 4


def _rows_from_bipartition(alpha: PartitionT, beta: PartitionT, k: int) -> Symbol:
    b = max(len(alpha.parts) - k, len(beta.parts), 0)
    top = (0,) * (b + k - len(alpha.parts)) + alpha.parts
    bottom = (0,) * (b - len(beta.parts)) + beta.parts
    s = tuple(x + i for i, x in enumerate(top))
    t = tuple(y + i for i, y in enumerate(bottom))
    return Symbol(*canonical_raw(s, t))


def symbols_of(rank: int, defect: int) -> list[Symbol]:
    """Symbols of the given rank and defect, via bipartitions of rank - rank(cuspidal)."""
    size = rank - symbol_defect_rank(defect)
    if size < 0:
        return []
    found = set()
    for a in range(size + 1):
        for alpha in partitions_of(a):
            for beta in partitions_of(size - a):
                if defect == 0 and alpha < beta:
                    continue
                found.add(_rows_from_bipartition(alpha, beta, defect))
    return sorted(found)


class UnipotentService:
    def __init__(self, exceptional_service: ExceptionalService):
        self.exceptional_service = exceptional_service

    # ======================
    # ENUMERATION
    # ======================

    def factor_labels(self, index: int, factor: GroupFactor) -> list[CharLabel]:
        family = factor.family
        n = factor.rank
        if family.uses_partitions:
            return [CharLabel(index, family, partition=p) for p in partitions_of(n + 1)]
        if family == Family.TORUS:
            return [CharLabel(index, family)]
        if family == Family.EXCEPTIONAL:
            return [CharLabel(index, family, name=name) for name in self.exceptional_service.enumerate_names(factor.name)]

        labels = []
        for k in self._symbol_defects(family, n):
            for sym in symbols_of(n, k):
                if family == Family.D and sym.is_degenerate:
                    labels.append(CharLabel(index, family, symbol=sym, degenerate_index=0))
                    labels.append(CharLabel(index, family, symbol=sym, degenerate_index=1))
                else:
                    labels.append(CharLabel(index, family, symbol=sym))
        return labels

    @staticmethod
    def _symbol_defects(family: Family, n: int) -> list[int]:
        if family in (Family.B, Family.C):
            start, step = 1, 2
        elif family == Family.D:
            start, step = 0, 4
        else:
            start, step = 2, 4
        defects = []
        k = start
        while symbol_defect_rank(k) <= n:
            defects.append(k)
            k += step
        return defects

    def enumerate_unipotent(self, g: FiniteGroupSpec) -> list[UnipotentChar]:
        per_factor = [self.factor_labels(i, f) for i, f in enumerate(g.factors)]
        chars = [UnipotentChar(tuple(combo)) for combo in itertools.product(*per_factor)]
        logger.debug("%s has %d unipotent characters", g, len(chars))
        return sorted_chars(chars)

    def trivial_char(self, g: FiniteGroupSpec) -> UnipotentChar:
        labels = []
        for index, factor in enumerate(g.factors):
            family, n = factor.family, factor.rank
            if family.uses_partitions:
                labels.append(CharLabel(index, family, partition=PartitionT((n + 1,))))
            elif family in (Family.B, Family.C):
                labels.append(CharLabel(index, family, symbol=Symbol((n,), ())))
            elif family == Family.D:
                labels.append(CharLabel(index, family, symbol=Symbol((n,), (0,))))
            elif family == Family.TWISTED_D:
                labels.append(CharLabel(index, family, symbol=Symbol((0, n), ())))
            elif family == Family.EXCEPTIONAL:
                labels.append(CharLabel(index, family, name="1"))
            else:
                labels.append(CharLabel(index, family))
        return UnipotentChar(tuple(labels))

    # ======================
    # THRESHOLDS
    # ======================

    @staticmethod
    def k_threshold(factor: GroupFactor, d: int) -> int:
        """
        Largest defect k whose 1-series lies in the (d,1)-series of the trivial character.

        For type 2A the argument is d' (the caller applies the Ennola map).
        Returns -1 when no defect qualifies.
        """
        if d < 1:
            raise InvalidInputError(f"d must be positive, got {d}")
        family, n = factor.family, factor.rank
        if family == Family.TWISTED_A:
            fits, k, step = (lambda k: (k * k - 3 * k + 2) / 2 <= n + 1 - d), 1, 1
        elif family in (Family.B, Family.C):
            fits, k, step = (lambda k: (k * k - 4 * k + 3) / 4 <= n - d / 2), 1, 2
        elif family in (Family.D, Family.TWISTED_D):
            fits, k, step = (lambda k: (k * k - 4 * k + 4) / 4 <= n - d / 2), 2, 2
        else:
            raise InvalidInputError(f"no defect threshold for type {factor}")

        # left-hand sides are non-decreasing in k from the first candidate on
        best = -1
        while fits(k):
            best = k
            k += step
        return best

    def factor_thresholds(self, g: FiniteGroupSpec, d: int) -> dict[str, Optional[int]]:
        """k threshold of every factor at d (after restriction of scalars); None where undefined."""
        thresholds: dict[str, Optional[int]] = {}
        for index, factor in enumerate(g.factors):
            d_eff = d // math.gcd(d, factor.ext_degree)
            if factor.family == Family.TWISTED_A:
                value = self.k_threshold(factor, d_prime(d_eff))
            elif factor.family.uses_symbols:
                value = self.k_threshold(factor, d_eff)
            else:
                value = None
            thresholds[f"{index}:{factor}"] = value
        return thresholds

    # ======================
    # PARTITIONS
    # ======================

    def one_series_partition(self, g: FiniteGroupSpec) -> D1Partition:
        return self._partition_by(g, self._one_series_key)

    def d_series_partition(self, g: FiniteGroupSpec, d: int) -> D1Partition:
        self._check_d(d)
        if not g.is_classical:
            raise UnsupportedTypeError(f"d-series of {g} need Deligne-Lusztig data for its exceptional factors")
        return self._partition_by(g, lambda label, factor: self._d_series_key(label, factor, d), d)

    def d1_series_partition(self, g: FiniteGroupSpec, d: int) -> D1Partition:
        self._check_d(d)
        partition = self._partition_by(g, lambda label, factor: self.d1_series_key(label, factor, d), d)
        logger.debug("(d,1)-series of %s at d=%d: %d classes", g, d, len(partition))
        return partition

    def _partition_by(self, g: FiniteGroupSpec, key: LabelKey, d: Optional[int] = None) -> D1Partition:
        grouped: dict[tuple, set[UnipotentChar]] = {}
        for char in self.enumerate_unipotent(g):
            class_key = tuple(key(label, g.factors[label.factor_index]) for label in char.components)
            grouped.setdefault(class_key, set()).add(char)

        classes = sorted(
            (frozenset(members) for members in grouped.values()),
            key=lambda members: min(c.sort_key for c in members),
        )
        trivial = self.trivial_char(g)
        trivial_index = next((i for i, members in enumerate(classes) if trivial in members), None)
        return D1Partition(g, tuple(classes), trivial_index, d)

    # ======================
    # CLASS KEYS
    # ======================

    @staticmethod
    def _one_series_key(label: CharLabel, factor: GroupFactor) -> Hashable:
        family = factor.family
        if family == Family.TWISTED_A:
            return beta_stats(partition_to_beta(label.partition)).defect
        if family.uses_symbols:
            return symbol_stats(label.symbol).defect
        if family == Family.EXCEPTIONAL:
            return label.name
        return None

    @staticmethod
    def _d_series_key(label: CharLabel, factor: GroupFactor, d: int) -> Hashable:
        family = factor.family
        d_eff = d // math.gcd(d, factor.ext_degree)
        if family == Family.A:
            return beta_d_core(partition_to_beta(label.partition), d_eff)
        if family == Family.TWISTED_A:
            return beta_d_core(partition_to_beta(label.partition), d_prime(d_eff))
        if family.uses_symbols:
            if d_eff % 2:
                return symbol_d_core(label.symbol, d_eff)
            return symbol_d_cocore(label.symbol, d_eff // 2)
        return None

    def d1_series_key(self, label: CharLabel, factor: GroupFactor, d: int) -> Hashable:
        family = factor.family
        d_eff = d // math.gcd(d, factor.ext_degree)
        if family in (Family.A, Family.TORUS):
            return None
        if family == Family.EXCEPTIONAL:
            classes = self.exceptional_service.d1_series_exceptional(factor.name, d_eff)
            return next((i for i, members in enumerate(classes) if label.name in members), label.name)

        if family == Family.TWISTED_A:
            defect = beta_stats(partition_to_beta(label.partition)).defect
            d_eff = d_prime(d_eff)
            merges = d_eff % 2 == 1
        else:
            defect = symbol_stats(label.symbol).defect
            merges = d_eff % 2 == 0
        if merges and defect <= self.k_threshold(factor, d_eff):
            return MERGED
        return defect

    @staticmethod
    def _check_d(d: int) -> None:
        if d < 1:
            raise InvalidInputError(f"d must be positive, got {d}")


# Dependency
def get_unipotent_service(exceptional_service: Optional[ExceptionalService] = None) -> UnipotentService:
    return UnipotentService(exceptional_service or get_exceptional_service())
