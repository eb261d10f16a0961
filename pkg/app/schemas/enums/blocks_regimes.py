from enum import Enum


class Regime(str, Enum):
    ELL2 = "ell2"
    D_ODD = "d_odd"
    D_EVEN = "d_even"
    BANAL = "banal"


class GroupKind(str, Enum):
    SP = "sp"
    SL = "sl"
