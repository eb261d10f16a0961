from enum import Enum


class Family(str, Enum):
    A = "A"
    TWISTED_A = "2A"
    B = "B"
    C = "C"
    D = "D"
    TWISTED_D = "2D"
    EXCEPTIONAL = "EXC"
    TORUS = "T"

    @property
    def uses_symbols(self) -> bool:
        return self in (Family.B, Family.C, Family.D, Family.TWISTED_D)

    @property
    def uses_partitions(self) -> bool:
        return self in (Family.A, Family.TWISTED_A)


# Names accepted for EXC(name) factors.
EXCEPTIONAL_NAMES = ("3D4", "G2", "F4", "E6", "2E6", "E7", "E8")
