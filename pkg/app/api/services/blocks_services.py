# app/api/services/blocks_services.py
import logging
from typing import Iterable, Optional

from app.api.services.unipotent_services import UnipotentService, get_unipotent_service
from app.schemas.enums.blocks_regimes import GroupKind, Regime
from app.schemas.enums.families_types import Family
from app.schemas.models.blocks_models import BlockPartition, ChamberType, SpType
from app.schemas.models.groups_models import FiniteGroupSpec, GroupFactor
from app.utility.cyclotomic import check_prime, ell_divides_order, multiplicative_order
from app.utility.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


class BlockService:
    """
    Unipotent depth-zero ℓ-blocks of Sp_2n(F) and SL_n(F).

    Only the n+1 vertex classes x_0, ..., x_n of the building of Sp_2n are
    modelled; x_i has reductive quotient Sp_2i x Sp_2(n-i).
    """

    def __init__(self, unipotent_service: UnipotentService):
        self.unipotent_service = unipotent_service

    # ======================
    # TYPES AND VERTICES
    # ======================

    @staticmethod
    def sp_types(n: int) -> list[SpType]:
        _check_rank(n)
        types = []
        s = 0
        while s * (s + 1) <= n:
            s2 = 0
            while s * (s + 1) + s2 * (s2 + 1) <= n:
                types.append(SpType(s, s2))
                s2 += 1
            s += 1
        return sorted(types)

    @staticmethod
    def sp_vertex_quotient(n: int, i: int) -> FiniteGroupSpec:
        _check_vertex(n, i)
        factors = [GroupFactor(Family.C, rank) for rank in (i, n - i) if rank > 0]
        return FiniteGroupSpec(tuple(factors))

    @staticmethod
    def sp_type_vertex_range(n: int, t: SpType) -> range:
        """Vertices x_i lying in the facet of t: s(s+1) <= i <= n - s'(s'+1)."""
        return range(t.s * (t.s + 1), n - t.s2 * (t.s2 + 1) + 1)

    def sp_sim_at_vertex(self, n: int, d: int, i: int, t: SpType, u: SpType) -> bool:
        """
        Whether t and u induce representations in one (d,1)-series of the quotient at x_i.

        The cuspidal pair of t at x_i has 1-series of defect 2s+1 on Sp_2i and
        2s'+1 on Sp_2(n-i); two defects share a (d,1)-series when they are equal
        or, for even d, both lie under the defect threshold of that factor.
        """
        _check_vertex(n, i)
        if d < 1:
            raise InvalidInputError(f"d must be positive, got {d}")
        if t == u:
            return True
        if i not in self.sp_type_vertex_range(n, t) or i not in self.sp_type_vertex_range(n, u):
            return False
        return self._same_series(i, d, t.s, u.s) and self._same_series(n - i, d, t.s2, u.s2)

    def _same_series(self, rank: int, d: int, s: int, s_other: int) -> bool:
        if s == s_other:
            return True
        if rank == 0 or d % 2:
            return False
        threshold = self.unipotent_service.k_threshold(GroupFactor(Family.C, rank), d)
        return max(2 * s + 1, 2 * s_other + 1) <= threshold

    def sp_sc(self, n: int, d: int) -> set[SpType]:
        """Types forming singleton blocks when d is even."""
        if d < 1 or d % 2:
            raise InvalidInputError(f"S_c is defined for even d only, got d={d}")
        bound = n - d / 2
        return {
            t
            for t in self.sp_types(n)
            if t.s * (t.s + 1) + t.s2 * (t.s2 - 1) > bound and t.s2 * (t.s2 + 1) + t.s * (t.s - 1) > bound
        }

    def merge_vertices(self, n: int, d: int, t: SpType) -> tuple[int, ...]:
        """Vertices at which t is related to some other type."""
        others = [u for u in self.sp_types(n) if u != t]
        return tuple(
            i
            for i in self.sp_type_vertex_range(n, t)
            if any(self.sp_sim_at_vertex(n, d, i, t, u) for u in others)
        )

    # ======================
    # REGIMES
    # ======================

    def is_banal(self, n: int, q: int, ell: int) -> bool:
        """ℓ divides the order of no vertex quotient Sp_2i(q) x Sp_2(n-i)(q)."""
        return not any(ell_divides_order(self.sp_vertex_quotient(n, i), q, ell) for i in range(n + 1))

    @staticmethod
    def condition_star_star(factors: Iterable[GroupFactor], ell: int) -> bool:
        """ℓ is good for every simple type occurring in the reductive quotients."""
        check_prime(ell)
        needed = 3
        for factor in factors:
            if factor.family == Family.EXCEPTIONAL:
                needed = max(needed, 7 if factor.name == "E8" else 5)
        return ell >= needed

    def _star_star_for_sp(self, n: int, ell: int) -> bool:
        return self.condition_star_star(
            (f for i in range(n + 1) for f in self.sp_vertex_quotient(n, i).factors), ell
        )

    # ======================
    # BLOCKS
    # ======================

    def sp_block_partition(self, n: int, q: int, ell: int) -> BlockPartition:
        _check_rank(n)
        d = multiplicative_order(q, ell)
        types = self.sp_types(n)
        meta = dict(group=GroupKind.SP, n=n, q=q, ell=ell, d=d, condition_star_star=self._star_star_for_sp(n, ell))

        if ell == 2:
            logger.info("Sp_%d, q=%d, ℓ=2: a single 2-block", 2 * n, q)
            return BlockPartition(regime=Regime.ELL2, classes=(frozenset(types),), merged_class_index=0, **meta)

        if self.is_banal(n, q, ell):
            logger.info("Sp_%d, q=%d, ℓ=%d is banal", 2 * n, q, ell)
            return BlockPartition(regime=Regime.BANAL, classes=_singletons(types), **meta)

        if d % 2:
            logger.info("Sp_%d, q=%d, ℓ=%d: d=%d odd, blocks indexed by types", 2 * n, q, ell, d)
            return BlockPartition(regime=Regime.D_ODD, classes=_singletons(types), **meta)

        isolated = self.sp_sc(n, d)
        merged = frozenset(t for t in types if t not in isolated)
        classes = _singletons(sorted(isolated))
        merged_index = None
        if merged:
            merged_index = len(classes)
            classes += (merged,)
        logger.info(
            "Sp_%d, q=%d, ℓ=%d: d=%d even, %d isolated types, merged class of %d",
            2 * n, q, ell, d, len(isolated), len(merged),
        )
        thresholds = {
            str(GroupFactor(Family.C, rank)): self.unipotent_service.k_threshold(GroupFactor(Family.C, rank), d)
            for rank in range(1, n + 1)
        }
        return BlockPartition(
            regime=Regime.D_EVEN,
            classes=classes,
            merged_class_index=merged_index,
            k_thresholds=thresholds,
            merge_vertices={t: self.merge_vertices(n, d, t) for t in sorted(merged)},
            **meta,
        )

    def sl_block_partition(self, n: int, q: int, ell: int) -> BlockPartition:
        _check_rank(n)
        d = multiplicative_order(q, ell)
        quotient = FiniteGroupSpec.simple(Family.A, n - 1) if n > 1 else FiniteGroupSpec.simple(Family.TORUS, 0)
        if ell == 2:
            regime = Regime.ELL2
        elif not ell_divides_order(quotient, q, ell):
            regime = Regime.BANAL
        else:
            regime = Regime.D_ODD if d % 2 else Regime.D_EVEN
        logger.info("SL_%d, q=%d, ℓ=%d: a single ℓ-block", n, q, ell)
        return BlockPartition(
            group=GroupKind.SL,
            n=n,
            q=q,
            ell=ell,
            d=d,
            regime=regime,
            classes=(frozenset({ChamberType()}),),
            merged_class_index=0,
            condition_star_star=self.condition_star_star(quotient.factors, ell),
        )


def _check_rank(n: int) -> None:
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")


def _check_vertex(n: int, i: int) -> None:
    if not 0 <= i <= n:
        raise InvalidInputError(f"vertex index must lie in 0..{n}, got {i}")


def _singletons(types: Iterable) -> tuple[frozenset, ...]:
    return tuple(frozenset({t}) for t in types)


# Dependency
def get_block_service(unipotent_service: Optional[UnipotentService] = None) -> BlockService:
    return BlockService(unipotent_service or get_unipotent_service())
