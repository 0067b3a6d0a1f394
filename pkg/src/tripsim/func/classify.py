#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\func\classify.py
# Created Date: Monday, March 11th 2024, 11:26:09 am
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

# Three-qubit pure state classes from purities and the three-tangle.

import enum
import numpy as np
from dataclasses import dataclass, field
from typing import Optional

from ..core import defines, qstate
from ..core.cls_state import CStateVector, CStateRaw
from ..core.cls_sim_trace import CWarning, CWarningList, EWarningType
from ..core.cls_sim_error import CSimError_Argument, CSimError_Dimension
from ..util import convert, io
from . import paradox

lPartyNames = ["A", "B", "C"]

# pair order of the concurrences
lPairs = [(0, 1), (0, 2), (1, 2)]


class EEntClass(enum.Enum):
    FULLY_SEPARABLE = enum.auto()
    BISEPARABLE = enum.auto()
    GENUINE_W = enum.auto()
    GENUINE_GHZ = enum.auto()


# endclass


################################################################################
@dataclass
class CReducedDiagnostics:
    lPurities: list
    lPairConcurrences: list
    fThreeTangle: float

    def ToDict(self) -> dict:
        return {
            "single_qubit_purities": list(self.lPurities),
            "pair_concurrences": list(self.lPairConcurrences),
            "three_tangle": self.fThreeTangle,
        }

    # enddef


# endclass


################################################################################
@dataclass
class CClassResult:
    eClass: EEntClass
    xDiagnostics: CReducedDiagnostics
    sPartition: Optional[str] = None
    bBorderline: bool = False
    xWarnings: CWarningList = field(default_factory=CWarningList)

    @property
    def sTag(self) -> str:
        if self.eClass == EEntClass.FULLY_SEPARABLE:
            return "FullySeparable"
        elif self.eClass == EEntClass.BISEPARABLE:
            return f"Biseparable({self.sPartition})"
        elif self.eClass == EEntClass.GENUINE_W:
            return "GenuineW"
        # endif
        return "GenuineGHZ"

    # enddef

    def ToDict(self) -> dict:
        return {
            "tag": self.sTag,
            "partition": self.sPartition,
            "borderline": self.bBorderline,
            "diagnostics": self.xDiagnostics.ToDict(),
        }

    # enddef


# endclass


################################################################################
def _CheckThreeQubits(_xState: CStateRaw):
    if _xState.tDims != (2, 2, 2):
        raise CSimError_Dimension(sContext="Three-qubit state", xExpected=(2, 2, 2), xGiven=_xState.tDims)
    # endif


# enddef


################################################################################
def PairConcurrence(_xState: CStateRaw, _lPair: list) -> float:
    """Concurrence of the two-qubit reduction of a pure state.

    With rho = V V^dagger the concurrence is s1 - s2 for the singular values
    of V^T (Y x Y) V, which avoids square roots of near-zero eigenvalues.
    """
    iCnt = _xState.iQubitCnt
    lPair = list(_lPair)
    lRest = [i for i in range(iCnt) if i not in lPair]

    aV = np.transpose(_xState.AsTensor(), lPair + lRest).reshape(4, -1)
    aYY = np.kron(defines.aPauliY, defines.aPauliY)
    aTau = aV.T @ aYY @ aV

    aSing = np.linalg.svd(aTau, compute_uv=False)
    fC = float(aSing[0] - np.sum(aSing[1:]))
    return min(max(fC, 0.0), 1.0)


# enddef


################################################################################
def ThreeTangle(_xState: CStateRaw) -> float:
    # 4 |d1 - 2 d2 + 4 d3|, the hyperdeterminant form
    _CheckThreeQubits(_xState)
    a = _xState.AsTensor()

    d1 = (
        a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2
        + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
        + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2
        + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2
    )
    d2 = (
        a[0, 0, 0] * a[1, 1, 1] * a[0, 1, 1] * a[1, 0, 0]
        + a[0, 0, 0] * a[1, 1, 1] * a[1, 0, 1] * a[0, 1, 0]
        + a[0, 0, 0] * a[1, 1, 1] * a[1, 1, 0] * a[0, 0, 1]
        + a[0, 1, 1] * a[1, 0, 0] * a[1, 0, 1] * a[0, 1, 0]
        + a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 0] * a[0, 0, 1]
        + a[1, 0, 1] * a[0, 1, 0] * a[1, 1, 0] * a[0, 0, 1]
    )
    d3 = a[0, 0, 0] * a[1, 1, 0] * a[1, 0, 1] * a[0, 1, 1] + a[1, 1, 1] * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0]

    fTau = 4.0 * float(abs(d1 - 2.0 * d2 + 4.0 * d3))
    return min(max(fTau, 0.0), 1.0)


# enddef


################################################################################
def Diagnostics(_xState: CStateRaw) -> CReducedDiagnostics:
    _CheckThreeQubits(_xState)
    lPurities = [qstate.Purity(qstate.ReducedDensity(_xState, [i])) for i in range(3)]
    return CReducedDiagnostics(
        lPurities=[min(max(x, 0.5), 1.0) for x in lPurities],
        lPairConcurrences=[PairConcurrence(_xState, list(t)) for t in lPairs],
        fThreeTangle=ThreeTangle(_xState),
    )


# enddef


################################################################################
def Classify(_xState: CStateRaw, *, fEps: float = defines.fClassifyEps) -> CClassResult:
    """Fully separable, biseparable, W or GHZ class of a three-qubit pure state.

    A qubit counts as pure when its purity exceeds 1 - eps. Without pure
    qubits the tangle decides between GHZ (> eps) and W. Decision values
    within (eps, 1e3 eps] mark the result as borderline.
    """
    xDiag = Diagnostics(_xState)
    xWarnings = CWarningList()
    fBand = fEps * defines.fBorderlineFactor

    lDefects = [1.0 - x for x in xDiag.lPurities]
    lPure = [i for i, x in enumerate(lDefects) if x < fEps]

    lQuantities = [(f"1-purity({lPartyNames[i]})", x) for i, x in enumerate(lDefects)]
    lQuantities.append(("three_tangle", xDiag.fThreeTangle))
    bBorderline = False
    for sName, fValue in lQuantities:
        if fEps < fValue <= fBand:
            bBorderline = True
            xWarnings.Add(
                CWarning(_eType=EWarningType.BORDERLINE_CLASS, _sKey=sName, _sShortCtx=f"value {fValue:.3e}")
            )
        # endif
    # endfor

    if len(lPure) >= 2:
        # two pure qubits force the third one to be pure as well
        eClass = EEntClass.FULLY_SEPARABLE
        sPartition = None
    elif len(lPure) == 1:
        iK = lPure[0]
        eClass = EEntClass.BISEPARABLE
        sPartition = lPartyNames[iK] + "|" + "".join(x for i, x in enumerate(lPartyNames) if i != iK)
    elif xDiag.fThreeTangle > fEps:
        eClass = EEntClass.GENUINE_GHZ
        sPartition = None
    else:
        eClass = EEntClass.GENUINE_W
        sPartition = None
    # endif

    return CClassResult(
        eClass=eClass, xDiagnostics=xDiag, sPartition=sPartition, bBorderline=bBorderline, xWarnings=xWarnings
    )


# enddef


################################################################################
def StateFromParams(_dicParams: dict) -> tuple:
    if _dicParams.get("state") is not None:
        xData = io.LoadJson(_dicParams["state"])
        return "file", CStateVector.FromDict(xData)
    # endif

    if _dicParams.get("amplitudes") is not None:
        return "custom", CStateVector.FromDict(_dicParams["amplitudes"])
    # endif

    sNamed = _dicParams.get("named")
    if sNamed is None:
        raise CSimError_Argument(sArg="state", xValue=None, sMsg="give a state file, amplitudes or a named state")
    # endif
    return str(sNamed), paradox.NamedState(str(sNamed), convert.ToAngle(_dicParams["theta"]))


# enddef


################################################################################
def ExpClassify(_xRunner, _dicParams: dict, *, sFuncName: str) -> dict:
    sSource, xState = StateFromParams(_dicParams)
    xResult = Classify(xState, fEps=convert.ToFloat(_dicParams["eps"]))
    _xRunner.xWarnings.Extend(xResult.xWarnings)
    _xRunner.LogString(f"Classify '{sSource}': {xResult.sTag}")

    dicResult = {"source": sSource}
    dicResult.update(xResult.ToDict())
    return dicResult


# enddef


__tripsim_functions__ = {
    "classify": {
        "funcExec": ExpClassify,
        "dicDefaults": {
            "state": None,
            "amplitudes": None,
            "named": None,
            "theta": "pi/4",
            "eps": defines.fClassifyEps,
        },
    },
}
