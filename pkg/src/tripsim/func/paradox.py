#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\func\paradox.py
# Created Date: Wednesday, March 6th 2024, 10:03:18 am
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

# GHZ nonlocality: Pauli string expectations and the local realism product check.

import math
from dataclasses import dataclass

from ..core import defines, qstate
from ..core.cls_state import CStateVector, CStateRaw
from ..core.cls_local_op import CLocalOperator
from ..core.cls_sim_error import CSimError_Argument, CSimError_Dimension
from ..util import convert
from . import bases


################################################################################
def PauliOperator(_sPauli: str) -> CLocalOperator:
    sPauli = _sPauli.strip().upper()
    return CLocalOperator.Pauli(sPauli, list(range(len(sPauli))))


# enddef


################################################################################
def PauliExpectation(_xState: CStateRaw, _sPauli: str) -> float:
    sPauli = _sPauli.strip().upper()
    if len(sPauli) != _xState.iQubitCnt:
        raise CSimError_Dimension(sContext="Pauli string", xExpected=_xState.iQubitCnt, xGiven=len(sPauli))
    # endif

    cValue = qstate.Expectation(_xState, PauliOperator(sPauli))
    return float(cValue.real)


# enddef


################################################################################
@dataclass(frozen=True)
class CParadoxReport:
    fXYY: float
    fYXY: float
    fYYX: float
    fXXX: float
    fLhvProduct: float
    bContradiction: bool

    @property
    def fMxxxPredicted(self) -> float:
        # with m^2 = 1 the product of the first three relations predicts m_x^A m_x^B m_x^C
        return self.fLhvProduct

    # enddef

    def ToDict(self) -> dict:
        return {
            "xyy": self.fXYY,
            "yxy": self.fYXY,
            "yyx": self.fYYX,
            "xxx": self.fXXX,
            "lhv_product": self.fLhvProduct,
            "m_xxx_predicted": self.fMxxxPredicted,
            "contradiction": self.bContradiction,
        }

    # enddef


# endclass


################################################################################
def GhzParadox(_xState: CStateRaw) -> CParadoxReport:
    if _xState.iQubitCnt != 3 or _xState.tDims != (2, 2, 2):
        raise CSimError_Dimension(sContext="GHZ paradox state", xExpected="3 qubits", xGiven=_xState.tDims)
    # endif

    fXYY = PauliExpectation(_xState, "XYY")
    fYXY = PauliExpectation(_xState, "YXY")
    fYYX = PauliExpectation(_xState, "YYX")
    fXXX = PauliExpectation(_xState, "XXX")
    fProduct = fXYY * fYXY * fYYX

    bContradiction = abs(fProduct + 1.0) <= defines.fNormTol and abs(fXXX - 1.0) <= defines.fNormTol

    return CParadoxReport(
        fXYY=fXYY, fYXY=fYXY, fYYX=fYYX, fXXX=fXXX, fLhvProduct=fProduct, bContradiction=bContradiction
    )


# enddef


################################################################################
def NamedState(_sName: str, _fTheta: float = math.pi / 4) -> CStateVector:
    # "ghz" is the maximal psi_000 at theta (the nonlocality argument uses pi/4)
    sName = _sName.lower()
    if sName == "ghz":
        return bases.GhzBasis(_fTheta, 0, 0, 0)
    elif sName == "w":
        return bases.CWChannelSpec.Symmetric().xState
    elif sName == "zero":
        return CStateVector.Basis("000")
    # endif
    raise CSimError_Argument(sArg="state", xValue=_sName, sMsg="expect one of ghz, w, zero")


# enddef


################################################################################
def ExpParadox(_xRunner, _dicParams: dict, *, sFuncName: str) -> dict:
    if _dicParams.get("amplitudes") is not None:
        xState = CStateVector.FromDict(_dicParams["amplitudes"])
        sState = "custom"
    else:
        sState = str(_dicParams["state"]).lower()
        xState = NamedState(sState, convert.ToAngle(_dicParams["theta"]))
    # endif

    xReport = GhzParadox(xState)
    _xRunner.LogString(f"GHZ paradox on '{sState}': contradiction={xReport.bContradiction}")

    dicResult = {"state": sState}
    dicResult.update(xReport.ToDict())
    return dicResult


# enddef


__tripsim_functions__ = {
    "paradox": {
        "funcExec": ExpParadox,
        "dicDefaults": {"state": "ghz", "theta": "pi/4", "amplitudes": None},
    },
}
