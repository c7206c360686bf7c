"""Quasigroup stream cipher over linear quasigroups on Z_n."""

from .cipher import (
    InvalidKey,
    KeySchedule,
    Mode,
    OddLength,
    StepKey,
    StepTrace,
    WrongMode,
    decrypt,
    decrypt_markovski,
    encrypt,
    encrypt_markovski,
)
from .codec import Codec, SymbolOutOfRange
from .keyfile import InfeasibleConstraints, InvalidKeyFile, keygen, validate
from .modring import CompositeModulus, Modulus, ModulusMismatch, NotAUnit, Residue
from .orthosys import NotOrthogonal, OrthoPair, make_orthopair
from .quasigroup import Kind, Parastrophe, TQuasigroup

__all__ = [
    "Codec",
    "CompositeModulus",
    "InfeasibleConstraints",
    "InvalidKey",
    "InvalidKeyFile",
    "KeySchedule",
    "Kind",
    "Mode",
    "Modulus",
    "ModulusMismatch",
    "NotAUnit",
    "NotOrthogonal",
    "OddLength",
    "OrthoPair",
    "Parastrophe",
    "Residue",
    "StepKey",
    "StepTrace",
    "SymbolOutOfRange",
    "TQuasigroup",
    "WrongMode",
    "decrypt",
    "decrypt_markovski",
    "encrypt",
    "encrypt_markovski",
    "keygen",
    "make_orthopair",
    "validate",
]
