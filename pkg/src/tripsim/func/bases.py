#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\func\bases.py
# Created Date: Tuesday, March 5th 2024, 9:14:02 am
# <LICENSE id="Apache-2.0">
#
#   Tripartite simulation module
#   Copyright 2024 Robert Bosch GmbH and its subsidiaries
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
#
# </LICENSE>
###

# Parametrized entangled bases: generalized d-level Bell basis, two-qubit
# theta basis, GHZ basis, W basis and Bob's single qubit x-basis.

import math
import numpy as np
from typing import Optional

from ..core import defines
from ..core.cls_state import CStateVector
from ..core.cls_sim_trace import CWarning, CWarningList, EWarningType
from ..core.cls_sim_error import CSimError_Argument, CSimError_Contract
from ..util import convert


################################################################################
def CheckAngle(_fAngle: float, _sName: str = "theta") -> float:
    fAngle = float(_fAngle)
    if fAngle < -defines.fAlgebraTol or fAngle > 0.5 * math.pi + defines.fAlgebraTol:
        raise CSimError_Argument(sArg=_sName, xValue=fAngle, sMsg=f"angle {fAngle} outside [0, pi/2]")
    # endif
    return fAngle


# enddef


################################################################################
class CBasisAngles:
    """Entanglement angles of a basis family.

    Two coefficient conventions coexist: the GHZ basis uses b0 = cos(theta),
    b1 = sin(theta), Bob's x-basis uses b0 = sin(theta), b1 = cos(theta).
    """

    def __init__(self, _fTheta: float, _fPhi: float = 0.0):
        self.fTheta = CheckAngle(_fTheta, "theta")
        self.fPhi = CheckAngle(_fPhi, "phi")

    # enddef

    @property
    def fGhzB0(self) -> float:
        return math.cos(self.fTheta)

    # enddef

    @property
    def fGhzB1(self) -> float:
        return math.sin(self.fTheta)

    # enddef

    @property
    def fBobB0(self) -> float:
        return math.sin(self.fTheta)

    # enddef

    @property
    def fBobB1(self) -> float:
        return math.cos(self.fTheta)

    # enddef

    def GhzCoef(self, _iJ: int) -> float:
        return self.fGhzB0 if _iJ % 2 == 0 else self.fGhzB1

    # enddef


# endclass


################################################################################
class CGeneralBellSpec:
    def __init__(self, _iD: int, _aBeta):
        iD = int(_iD)
        if iD < 2:
            raise CSimError_Argument(sArg="d", xValue=iD, sMsg="level count must be at least 2")
        # endif

        aBeta = np.array(_aBeta, dtype=float)
        if aBeta.shape != (iD, iD):
            raise CSimError_Argument(sArg="beta", xValue=aBeta.shape, sMsg=f"expect a {iD}x{iD} coefficient table")
        # endif

        aColNorm = np.sum(aBeta**2, axis=0)
        fDev = float(np.max(np.abs(aColNorm - 1.0)))
        if fDev > defines.fNormTol:
            raise CSimError_Contract(sWhat="beta column is not normalized", fDeviation=fDev)
        # endif

        aBeta.setflags(write=False)
        self.iD = iD
        self.aBeta = aBeta

    # enddef

    @staticmethod
    def Uniform(_iD: int) -> "CGeneralBellSpec":
        return CGeneralBellSpec(_iD, np.full((_iD, _iD), 1.0 / math.sqrt(_iD)))

    # enddef

    @staticmethod
    def Theta(_fTheta: float) -> "CGeneralBellSpec":
        # d = 2 table that reproduces the theta basis
        fC = math.cos(_fTheta)
        fS = math.sin(_fTheta)
        return CGeneralBellSpec(2, [[fC, fS], [fS, fC]])

    # enddef


# endclass


################################################################################
class CWChannelSpec:
    def __init__(self, _cA: complex, _cB: complex, _cC: complex):
        self.cA = complex(_cA)
        self.cB = complex(_cB)
        self.cC = complex(_cC)

        fDev = abs(abs(self.cA) ** 2 + abs(self.cB) ** 2 + abs(self.cC) ** 2 - 1.0)
        if fDev > defines.fNormTol:
            raise CSimError_Argument(
                sArg="w", xValue=(self.cA, self.cB, self.cC), sMsg=f"amplitudes not normalized (deviation {fDev:.3e})"
            )
        # endif

    # enddef

    @staticmethod
    def Symmetric() -> "CWChannelSpec":
        fV = 1.0 / math.sqrt(3.0)
        return CWChannelSpec(fV, fV, fV)

    # enddef

    @property
    def xState(self) -> CStateVector:
        # a|100> + b|010> + c|001>
        aAmp = np.zeros(8, dtype=complex)
        aAmp[0b100] = self.cA
        aAmp[0b010] = self.cB
        aAmp[0b001] = self.cC
        return CStateVector(aAmp)

    # enddef


# endclass


################################################################################
def _CheckBits(*_lBits, iD: int = 2):
    for iBit in _lBits:
        if not isinstance(iBit, (int, np.integer)) or iBit < 0 or iBit >= iD:
            raise CSimError_Argument(sArg="label", xValue=_lBits, sMsg=f"indices must lie in 0..{iD - 1}")
        # endif
    # endfor


# enddef


################################################################################
def GeneralBell(_xSpec: CGeneralBellSpec, _iM: int, _iN: int) -> CStateVector:
    iD = _xSpec.iD
    _CheckBits(_iM, _iN, iD=iD)

    cOmega = np.exp(2j * math.pi / iD)
    aAmp = np.zeros(iD * iD, dtype=complex)
    for iK in range(iD):
        aAmp[iK * iD + (iK + _iN) % iD] += cOmega ** ((_iM * iK) % iD) * _xSpec.aBeta[iK, _iM]
    # endfor
    return CStateVector(aAmp, tDims=(iD, iD))


# enddef


################################################################################
def GeneralBellBasis(_xSpec: CGeneralBellSpec) -> list:
    return [((iM, iN), GeneralBell(_xSpec, iM, iN)) for iM in range(_xSpec.iD) for iN in range(_xSpec.iD)]


# enddef


################################################################################
def Bell2(_fTheta: float, _iM: int, _iN: int) -> CStateVector:
    _CheckBits(_iM, _iN)
    fC = math.cos(_fTheta)
    fS = math.sin(_fTheta)

    aAmp = np.zeros(4, dtype=complex)
    if (_iM, _iN) == (0, 0):
        aAmp[0b00], aAmp[0b11] = fC, fS
    elif (_iM, _iN) == (0, 1):
        aAmp[0b01], aAmp[0b10] = fC, fS
    elif (_iM, _iN) == (1, 0):
        aAmp[0b00], aAmp[0b11] = fS, -fC
    else:
        aAmp[0b01], aAmp[0b10] = fS, -fC
    # endif
    return CStateVector(aAmp)


# enddef


################################################################################
def Bell2Basis(_fTheta: float) -> list:
    return [((iM, iN), Bell2(_fTheta, iM, iN)) for iM in range(2) for iN in range(2)]


# enddef


################################################################################
def GhzBasis(_fTheta: float, _iMu: int, _iLambda: int, _iOmega: int) -> CStateVector:
    _CheckBits(_iMu, _iLambda, _iOmega)
    xAngles = CBasisAngles(_fTheta)

    aAmp = np.zeros(8, dtype=complex)
    for iJ in range(2):
        iIdx = (iJ << 2) | ((iJ ^ _iLambda) << 1) | (iJ ^ _iOmega)
        aAmp[iIdx] += (-1) ** (_iMu * iJ) * xAngles.GhzCoef(_iMu ^ iJ)
    # endfor
    return CStateVector(aAmp)


# enddef


################################################################################
def GhzBasisAll(_fTheta: float) -> list:
    return [
        ((iMu, iLambda, iOmega), GhzBasis(_fTheta, iMu, iLambda, iOmega))
        for iMu in range(2)
        for iLambda in range(2)
        for iOmega in range(2)
    ]


# enddef


################################################################################
def WBasis(
    _fTheta: float, _fPhi: float, _iK: int, *, bAsPrinted: bool = False, xWarnings: Optional[CWarningList] = None
) -> CStateVector:
    """Member k (1..8) of the W basis.

    The members 4 and 8 carry a minus sign on the cos(theta) term. With the
    plus sign they overlap members 1, 2 (resp. 5, 6) by 2 sin(theta) cos(theta)
    times cos(phi) or sin(phi). bAsPrinted selects the plus sign and records a
    BASIS_GRAM warning.
    """
    if not isinstance(_iK, (int, np.integer)) or _iK < 1 or _iK > 8:
        raise CSimError_Argument(sArg="k", xValue=_iK, sMsg="W basis index must lie in 1..8")
    # endif

    xAngles = CBasisAngles(_fTheta, _fPhi)
    fS = math.sin(xAngles.fTheta)
    fC = math.cos(xAngles.fTheta)
    fCp = math.cos(xAngles.fPhi)
    fSp = math.sin(xAngles.fPhi)
    fSign = 1.0 if bAsPrinted is True else -1.0

    # members 1..4 on the odd parity subspace
    lTerms = {
        1: [(0b001, fS * fCp), (0b010, fS * fSp), (0b100, fC)],
        2: [(0b001, fS * fSp), (0b010, -fS * fCp), (0b111, fC)],
        3: [(0b100, -fS * fSp), (0b010, fC), (0b111, fS * fCp)],
        4: [(0b100, fS * fCp), (0b001, fSign * fC), (0b111, fS * fSp)],
    }

    iBase = (_iK - 1) % 4 + 1
    iFlip = 0b111 if _iK > 4 else 0

    aAmp = np.zeros(8, dtype=complex)
    for iIdx, fValue in lTerms[iBase]:
        aAmp[iIdx ^ iFlip] += fValue
    # endfor

    if bAsPrinted is True and iBase == 4 and isinstance(xWarnings, CWarningList):
        xWarnings.Add(
            CWarning(
                _eType=EWarningType.BASIS_GRAM,
                _sKey=f"w[{_iK}]",
                _sShortCtx=f"printed member overlaps its partners for theta={xAngles.fTheta:.6g}",
            )
        )
    # endif

    return CStateVector(aAmp)


# enddef


################################################################################
def WBasisAll(_fTheta: float, _fPhi: float, *, bAsPrinted: bool = False) -> list:
    lBasis = [(iK, WBasis(_fTheta, _fPhi, iK, bAsPrinted=bAsPrinted)) for iK in range(1, 9)]

    fDev = GramDeviation([x[1] for x in lBasis])
    if fDev > defines.fNormTol:
        raise CSimError_Contract(sWhat="W basis Gram check failed", fDeviation=fDev)
    # endif
    return lBasis


# enddef


################################################################################
def BobXBasis(_fTheta: float) -> tuple:
    # inverse of |0> = sin|x0> + cos|x1>, |1> = cos|x0> - sin|x1>
    xAngles = CBasisAngles(_fTheta)
    fB0 = xAngles.fBobB0
    fB1 = xAngles.fBobB1
    return CStateVector([fB0, fB1]), CStateVector([fB1, -fB0])


# enddef


################################################################################
def BobXBasisAll(_fTheta: float) -> list:
    xX0, xX1 = BobXBasis(_fTheta)
    return [((0,), xX0), ((1,), xX1)]


# enddef


################################################################################
def ComputationalBasisAll(_iQubitCnt: int = 1) -> list:
    return [
        (tuple(int(x) for x in format(iIdx, f"0{_iQubitCnt}b")), CStateVector.Basis(format(iIdx, f"0{_iQubitCnt}b")))
        for iIdx in range(2**_iQubitCnt)
    ]


# enddef


################################################################################
def GramDeviation(_lStates: list) -> float:
    aV = np.array([x.aAmp for x in _lStates])
    aGram = aV.conj() @ aV.T
    return float(np.max(np.abs(aGram - np.eye(len(_lStates)))))


# enddef


################################################################################
def BasisDump(_sFamily: str, _dicParams: dict) -> dict:
    sFamily = _sFamily.lower()
    fTheta = convert.ToAngle(_dicParams.get("theta", math.pi / 4))

    if sFamily == "bell2":
        lBasis = Bell2Basis(CheckAngle(fTheta))
        dicParams = {"theta": fTheta}

    elif sFamily == "general-bell":
        iD = convert.ToInt(_dicParams.get("d", 2))
        if "beta" in _dicParams and _dicParams["beta"] is not None:
            xSpec = CGeneralBellSpec(iD, _dicParams["beta"])
        else:
            xSpec = CGeneralBellSpec.Uniform(iD)
        # endif
        lBasis = GeneralBellBasis(xSpec)
        dicParams = {"d": iD, "beta": xSpec.aBeta.tolist()}

    elif sFamily == "ghz":
        lBasis = GhzBasisAll(fTheta)
        dicParams = {"theta": fTheta}

    elif sFamily == "w":
        fPhi = convert.ToAngle(_dicParams.get("phi", math.pi / 4))
        lBasis = WBasisAll(fTheta, fPhi, bAsPrinted=convert.ToBool(_dicParams.get("as_printed", False)))
        dicParams = {"theta": fTheta, "phi": fPhi}

    elif sFamily == "bob-x":
        lBasis = BobXBasisAll(fTheta)
        dicParams = {"theta": fTheta}

    else:
        raise CSimError_Argument(
            sArg="family", xValue=_sFamily, sMsg="expect one of bell2, general-bell, ghz, w, bob-x"
        )
    # endif

    return {
        "family": sFamily,
        "params": dicParams,
        "labels": [list(x[0]) if isinstance(x[0], tuple) else [x[0]] for x in lBasis],
        "vectors": [x[1].ToList() for x in lBasis],
    }


# enddef


################################################################################
def ExpBases(_xRunner, _dicParams: dict, *, sFuncName: str) -> dict:
    return BasisDump(str(_dicParams["family"]), _dicParams)


# enddef


__tripsim_functions__ = {
    "bases": {
        "funcExec": ExpBases,
        "dicDefaults": {"family": "bell2", "theta": "pi/4", "phi": "pi/4", "d": 2, "beta": None, "as_printed": False},
    },
}
