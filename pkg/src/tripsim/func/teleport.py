#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\func\teleport.py
# Created Date: Friday, March 8th 2024, 2:17:40 pm
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

# Teleportation protocols over GHZ, EPR and W channels.
#
# Register layouts (input qubits first, then the resource):
#   ghz-epr       0 input | 1,2,3 GHZ        Bell (0,1), Bob x-basis (2)    -> 3
#   ghz-meas      0 input | 1,2,3 GHZ(tc)    GHZ basis(tm) on (0,1,2)       -> 3
#   epr-via-ghz   0,1 pair | 2,3,4 GHZ(tc)   GHZ basis(tm) on (0,1,2)       -> 3,4
#   ghz-via-3epr  0,1,2 GHZ | 3-4, 5-6, 7-8  Bell (0,3), (1,5), (2,7)       -> 4,6,8
#   w-channel     0 input | 1,2,3 W          Bell (0,1), computational (3)  -> 2

import math
import functools
import numpy as np
from dataclasses import dataclass
from typing import Optional, Union

from ..core import defines, qstate
from ..core.cls_state import CStateVector, CStateRaw, CInputQubit
from ..core.cls_density import CDensityOp
from ..core.cls_protocol import CMeasureStage, CProtocol, CTeleportReport, SearchCorrections, InputQuadrature
from ..core.cls_sim_error import CSimError_Argument, CSimError_Invariant
from ..util import convert, text
from . import bases

lProtocols = ["ghz-epr", "ghz-meas", "epr-via-ghz", "ghz-via-3epr", "w-channel"]

# Bob's x-basis protocol, keyed by (m, n, j)
_dicCorrectionGhzEpr = {
    (0, 0, 0): "I",
    (0, 0, 1): "Z",
    (0, 1, 0): "X",
    (0, 1, 1): "XZ",
    (1, 0, 0): "Z",
    (1, 0, 1): "I",
    (1, 1, 0): "ZX",
    (1, 1, 1): "X",
}

# Same table with sigma_z sigma_x at (0, 1, 1)
_dicCorrectionGhzEprMainText = dict(_dicCorrectionGhzEpr)
_dicCorrectionGhzEprMainText[(0, 1, 1)] = "ZX"

# W channel corrections per Bell outcome (m, n) when qubit 3 reads 0
_dicCorrectionWChannel = {
    (0, 0): "X",
    (0, 1): "I",
    (1, 0): "ZX",
    (1, 1): "Z",
}


################################################################################
def _Embedding(_iQubitCnt: int) -> np.ndarray:
    # |0...0>, |1...1> as the two columns
    iDim = 2**_iQubitCnt
    aEmbed = np.zeros((iDim, 2), dtype=complex)
    aEmbed[0, 0] = 1.0
    aEmbed[iDim - 1, 1] = 1.0
    return aEmbed


# enddef


################################################################################
def _InputFromPair(_xInput) -> CInputQubit:
    if isinstance(_xInput, CInputQubit):
        return _xInput
    # endif
    if len(_xInput) != 2:
        raise CSimError_Argument(sArg="input", xValue=_xInput, sMsg="expect an amplitude pair (a0, a1)")
    # endif
    return CInputQubit(_xInput[0], _xInput[1])


# enddef


################################################################################
def TableEta(_xInput: CInputQubit, _iM: int, _iN: int) -> CStateVector:
    """Two-qubit state after Alice's Bell outcome (m, n), before Bob measures.

    eta_mn = sum_k (-1)^(m k) a_k |k+n, k+n>
    """
    bases._CheckBits(_iM, _iN)
    aAmp = np.zeros(4, dtype=complex)
    for iK, cA in enumerate(_xInput.aVec):
        iBit = iK ^ _iN
        aAmp[(iBit << 1) | iBit] += (-1) ** (_iM * iK) * cA
    # endfor
    return CStateVector(aAmp)


# enddef


################################################################################
def TableCharlie(_xInput: CInputQubit, _fTheta: float, _iM: int, _iN: int, _iJ: int) -> CStateRaw:
    """Charlie's state for outcome (m, n, x_j) before correction, as tabulated."""
    bases._CheckBits(_iM, _iN, _iJ)
    fS = math.sin(_fTheta)
    fC = math.cos(_fTheta)
    cA0, cA1 = _xInput.aVec

    dicRows = {
        (0, 0, 0): (cA0 * fS, cA1 * fC),
        (0, 0, 1): (cA0 * fC, -cA1 * fS),
        (0, 1, 0): (cA1 * fS, cA0 * fC),
        (0, 1, 1): (cA1 * fC, -cA0 * fS),
        (1, 0, 0): (cA0 * fS, -cA1 * fC),
        (1, 0, 1): (cA0 * fC, cA1 * fS),
        (1, 1, 0): (-cA1 * fS, cA0 * fC),
        (1, 1, 1): (-cA1 * fC, -cA0 * fS),
    }
    return CStateRaw(np.array(dicRows[(_iM, _iN, _iJ)], dtype=complex))


# enddef


################################################################################
def TableCorrection(_iM: int, _iN: int, _iJ: int) -> str:
    bases._CheckBits(_iM, _iN, _iJ)
    return _dicCorrectionGhzEpr[(_iM, _iN, _iJ)]


# enddef


################################################################################
def TableEtaMainText(_xInput: CInputQubit, _iM: int, _iN: int) -> CStateVector:
    # known-bad: the n = 1 rows put the pair on |01>, |10> instead of |11>, |00>
    bases._CheckBits(_iM, _iN)
    cA0, cA1 = _xInput.aVec
    fSign = -1.0 if _iM == 1 else 1.0

    aAmp = np.zeros(4, dtype=complex)
    if _iN == 0:
        aAmp[0b00], aAmp[0b11] = cA0, fSign * cA1
    else:
        aAmp[0b01], aAmp[0b10] = cA0, fSign * cA1
    # endif
    return CStateVector(aAmp)


# enddef


################################################################################
def TableCharlieMainText(_xInput: CInputQubit, _fTheta: float, _iM: int, _iN: int, _iJ: int) -> CStateRaw:
    # known-bad: n = 1 rows swap the roles of sin and cos
    bases._CheckBits(_iM, _iN, _iJ)
    fS = math.sin(_fTheta)
    fC = math.cos(_fTheta)
    cA0, cA1 = _xInput.aVec

    dicRows = {
        (0, 0, 0): (cA0 * fS, cA1 * fC),
        (0, 0, 1): (cA0 * fC, -cA1 * fS),
        (0, 1, 0): (cA1 * fC, cA0 * fS),
        (0, 1, 1): (-cA1 * fS, cA0 * fC),
        (1, 0, 0): (cA0 * fS, -cA1 * fC),
        (1, 0, 1): (cA0 * fC, cA1 * fS),
        (1, 1, 0): (-cA1 * fC, cA0 * fS),
        (1, 1, 1): (cA1 * fS, cA0 * fC),
    }
    return CStateRaw(np.array(dicRows[(_iM, _iN, _iJ)], dtype=complex))


# enddef


################################################################################
def TableCorrectionMainText(_iM: int, _iN: int, _iJ: int) -> str:
    bases._CheckBits(_iM, _iN, _iJ)
    return _dicCorrectionGhzEprMainText[(_iM, _iN, _iJ)]


# enddef


################################################################################
def SimulateEta(_xInput: CInputQubit, _iM: int, _iN: int) -> CStateRaw:
    # projection of input x GHZ onto phi_mn on (0, 1), scaled by 2
    xFull = qstate.Tensor(_xInput.xState, bases.GhzBasis(math.pi / 4, 0, 0, 0))
    xRaw = qstate.ProjectRaw(xFull, bases.Bell2(math.pi / 4, _iM, _iN), [0, 1])
    return CStateRaw(2.0 * xRaw.aAmp)


# enddef


################################################################################
def ProtocolGhzEpr(_fBobTheta: float, *, bMainTextCorrections: bool = False) -> CProtocol:
    fTheta = bases.CheckAngle(_fBobTheta, "bob_theta")
    dicCorr = _dicCorrectionGhzEprMainText if bMainTextCorrections is True else _dicCorrectionGhzEpr

    return CProtocol(
        sName="ghz-epr",
        aEmbedIn=_Embedding(1),
        xResource=bases.GhzBasis(math.pi / 4, 0, 0, 0),
        lStages=[
            CMeasureStage("bell", [0, 1], bases.Bell2Basis(math.pi / 4)),
            CMeasureStage("bob-x", [2], bases.BobXBasisAll(fTheta)),
        ],
        aEmbedOut=_Embedding(1),
        funcCorrection=lambda tLabel: dicCorr[tuple(tLabel)],
        dicParams={"bob_theta": fTheta},
    )


# enddef


################################################################################
def _CorrectionGhzMeasurement(_tLabel: tuple) -> str:
    # U = sigma_z^mu sigma_x^lambda
    iMu, iLambda, _ = _tLabel
    return ("Z" if iMu == 1 else "") + ("X" if iLambda == 1 else "") or "I"


# enddef


################################################################################
def ProtocolGhzMeasurement(_fThetaChannel: float, _fThetaMeas: float) -> CProtocol:
    fThetaC = bases.CheckAngle(_fThetaChannel, "theta_channel")
    fThetaM = bases.CheckAngle(_fThetaMeas, "theta_meas")

    return CProtocol(
        sName="ghz-meas",
        aEmbedIn=_Embedding(1),
        xResource=bases.GhzBasis(fThetaC, 0, 0, 0),
        lStages=[CMeasureStage("ghz", [0, 1, 2], bases.GhzBasisAll(fThetaM))],
        aEmbedOut=_Embedding(1),
        funcCorrection=_CorrectionGhzMeasurement,
        dicParams={"theta_channel": fThetaC, "theta_meas": fThetaM},
    )


# enddef


################################################################################
def _ProtocolEprViaGhz(_fThetaChannel: float, _fThetaMeas: float, _funcCorrection) -> CProtocol:
    return CProtocol(
        sName="epr-via-ghz",
        aEmbedIn=_Embedding(2),
        xResource=bases.GhzBasis(_fThetaChannel, 0, 0, 0),
        lStages=[CMeasureStage("ghz", [0, 1, 2], bases.GhzBasisAll(_fThetaMeas))],
        aEmbedOut=_Embedding(2),
        funcCorrection=_funcCorrection,
        dicParams={"theta_channel": _fThetaChannel, "theta_meas": _fThetaMeas},
    )


# enddef


################################################################################
def _ProtocolGhzVia3Epr(_tThetas: tuple, _funcCorrection) -> CProtocol:
    xResource = CStateVector.Scalar()
    for fTheta in _tThetas:
        xResource = qstate.Tensor(xResource, bases.Bell2(fTheta, 0, 0))
    # endfor

    lBell = bases.Bell2Basis(math.pi / 4)
    return CProtocol(
        sName="ghz-via-3epr",
        aEmbedIn=_Embedding(3),
        xResource=xResource,
        lStages=[
            CMeasureStage("bell-1", [0, 3], lBell),
            CMeasureStage("bell-2", [1, 5], lBell),
            CMeasureStage("bell-3", [2, 7], lBell),
        ],
        aEmbedOut=_Embedding(3),
        funcCorrection=_funcCorrection,
        dicParams={"theta1": _tThetas[0], "theta2": _tThetas[1], "theta3": _tThetas[2]},
    )


# enddef


################################################################################
@functools.lru_cache(maxsize=None)
def SearchedCorrections(_sProtocol: str) -> dict:
    """Correction table of a protocol without tabulated corrections.

    Built once per protocol by exhaustive search at maximal entanglement.
    """
    if _sProtocol == "epr-via-ghz":
        xProtocol = _ProtocolEprViaGhz(math.pi / 4, math.pi / 4, lambda t: "I I")
    elif _sProtocol == "ghz-via-3epr":
        xProtocol = _ProtocolGhzVia3Epr((math.pi / 4,) * 3, lambda t: "I I I")
    else:
        raise CSimError_Argument(sArg="protocol", xValue=_sProtocol, sMsg="no searched correction table")
    # endif
    return SearchCorrections(xProtocol)


# enddef


################################################################################
def ProtocolEprViaGhz(_fThetaChannel: float, _fThetaMeas: float = math.pi / 4) -> CProtocol:
    fThetaC = bases.CheckAngle(_fThetaChannel, "theta_channel")
    fThetaM = bases.CheckAngle(_fThetaMeas, "theta_meas")
    dicCorr = SearchedCorrections("epr-via-ghz")
    return _ProtocolEprViaGhz(fThetaC, fThetaM, lambda tLabel: dicCorr[tuple(tLabel)])


# enddef


################################################################################
def ProtocolGhzVia3Epr(_tThetas: tuple) -> CProtocol:
    if len(_tThetas) != 3:
        raise CSimError_Argument(sArg="channels", xValue=_tThetas, sMsg="expect three EPR angles")
    # endif
    tThetas = tuple(bases.CheckAngle(x, f"theta{i + 1}") for i, x in enumerate(_tThetas))
    dicCorr = SearchedCorrections("ghz-via-3epr")
    return _ProtocolGhzVia3Epr(tThetas, lambda tLabel: dicCorr[tuple(tLabel)])


# enddef


################################################################################
def ProtocolWChannel(_xW: bases.CWChannelSpec) -> CProtocol:
    def _Correction(_tLabel: tuple) -> str:
        iM, iN, iK = _tLabel
        if iK != 0:
            return "I"
        # endif
        return _dicCorrectionWChannel[(iM, iN)]

    # enddef

    return CProtocol(
        sName="w-channel",
        aEmbedIn=_Embedding(1),
        xResource=_xW.xState,
        lStages=[
            CMeasureStage("bell", [0, 1], bases.Bell2Basis(math.pi / 4)),
            CMeasureStage("computational", [3], bases.ComputationalBasisAll(1)),
        ],
        aEmbedOut=_Embedding(1),
        funcCorrection=_Correction,
        funcSuccess=lambda tLabel: tLabel[2] == 0,
        dicParams={"a": [_xW.cA.real, _xW.cA.imag], "b": [_xW.cB.real, _xW.cB.imag], "c": [_xW.cC.real, _xW.cC.imag]},
    )


# enddef


################################################################################
def _WithResource(_xProtocol: CProtocol, _rhoResource: Optional[CDensityOp]) -> CProtocol:
    if _rhoResource is None:
        return _xProtocol
    # endif
    return _xProtocol.WithResource(_rhoResource)


# enddef


################################################################################
def TeleportGhzEpr(
    _xInput: CInputQubit, _fBobTheta: float, *, bDirect: bool = False, rhoResource: Optional[CDensityOp] = None
) -> CTeleportReport:
    return _WithResource(ProtocolGhzEpr(_fBobTheta), rhoResource).Run(_xInput, bDirect=bDirect)


# enddef


################################################################################
def TeleportGhzMeasurement(
    _xInput: CInputQubit,
    _fThetaChannel: float,
    _fThetaMeas: float,
    *,
    bDirect: bool = False,
    rhoResource: Optional[CDensityOp] = None,
) -> CTeleportReport:
    xProtocol = _WithResource(ProtocolGhzMeasurement(_fThetaChannel, _fThetaMeas), rhoResource)
    return xProtocol.Run(_xInput, bDirect=bDirect)


# enddef


################################################################################
def TeleportEprViaGhz(
    _xInputPair,
    _fThetaChannel: float,
    _fThetaMeas: float = math.pi / 4,
    *,
    bDirect: bool = False,
    rhoResource: Optional[CDensityOp] = None,
) -> CTeleportReport:
    xProtocol = _WithResource(ProtocolEprViaGhz(_fThetaChannel, _fThetaMeas), rhoResource)
    return xProtocol.Run(_InputFromPair(_xInputPair), bDirect=bDirect)


# enddef


################################################################################
def TeleportGhzVia3Epr(
    _xInputGhz, _tThetas: tuple, *, bDirect: bool = False, rhoResource: Optional[CDensityOp] = None
) -> CTeleportReport:
    xProtocol = _WithResource(ProtocolGhzVia3Epr(_tThetas), rhoResource)
    return xProtocol.Run(_InputFromPair(_xInputGhz), bDirect=bDirect)


# enddef


################################################################################
def TeleportWChannel(
    _xInput: CInputQubit,
    _xW: bases.CWChannelSpec,
    *,
    bDirect: bool = False,
    rhoResource: Optional[CDensityOp] = None,
) -> CTeleportReport:
    return _WithResource(ProtocolWChannel(_xW), rhoResource).Run(_xInput, bDirect=bDirect)


# enddef


################################################################################
def _ParamAmplitude(_dicParams: dict, _sKey: str, _cDefault: complex) -> complex:
    xValue = _dicParams.get(_sKey)
    if xValue is None:
        return complex(_cDefault)
    # endif
    return convert.ToComplex(xValue)


# enddef


################################################################################
def WSpecFromParams(_dicParams: dict, *, bNormalize: bool = False) -> bases.CWChannelSpec:
    fV = 1.0 / math.sqrt(3.0)
    lAmp = [_ParamAmplitude(_dicParams, s, fV) for s in ("a", "b", "c")]
    if bNormalize is True:
        fNorm = math.sqrt(sum(abs(x) ** 2 for x in lAmp))
        if fNorm < defines.fZeroProbTol:
            raise CSimError_Argument(sArg="w", xValue=lAmp, sMsg="W amplitudes are all zero")
        # endif
        lAmp = [x / fNorm for x in lAmp]
    # endif
    return bases.CWChannelSpec(*lAmp)


# enddef


################################################################################
def InputFromParams(_dicParams: dict, *, bNormalize: bool = False) -> CInputQubit:
    cC0 = _ParamAmplitude(_dicParams, "c0", 1.0)
    cC1 = _ParamAmplitude(_dicParams, "c1", 0.0)
    if bNormalize is True:
        fNorm = math.sqrt(abs(cC0) ** 2 + abs(cC1) ** 2)
        if fNorm < defines.fZeroProbTol:
            raise CSimError_Argument(sArg="input", xValue=(cC0, cC1), sMsg="input amplitudes are all zero")
        # endif
        cC0, cC1 = cC0 / fNorm, cC1 / fNorm
    # endif
    return CInputQubit(cC0, cC1)


# enddef


################################################################################
def BuildProtocol(_sProtocol: str, _dicParams: dict, *, bNormalize: bool = False) -> CProtocol:
    """Protocol instance by name with angles and amplitudes taken from a parameter dict.

    Missing keys fall back to maximal entanglement.
    """
    sProtocol = str(_sProtocol).lower()

    def _Angle(_sKey: str) -> float:
        xValue = _dicParams.get(_sKey)
        return math.pi / 4 if xValue is None else convert.ToAngle(xValue)

    # enddef

    if sProtocol == "ghz-epr":
        return ProtocolGhzEpr(_Angle("bob_theta"))
    elif sProtocol == "ghz-meas":
        return ProtocolGhzMeasurement(_Angle("theta_channel"), _Angle("theta_meas"))
    elif sProtocol == "epr-via-ghz":
        return ProtocolEprViaGhz(_Angle("theta_channel"), _Angle("theta_meas"))
    elif sProtocol == "ghz-via-3epr":
        return ProtocolGhzVia3Epr((_Angle("theta1"), _Angle("theta2"), _Angle("theta3")))
    elif sProtocol == "w-channel":
        return ProtocolWChannel(WSpecFromParams(_dicParams, bNormalize=bNormalize))
    # endif

    raise CSimError_Argument(sArg="protocol", xValue=_sProtocol, sMsg=f"expect one of {', '.join(lProtocols)}")


# enddef


################################################################################
@dataclass
class CFidelitySurface:
    aTheta: np.ndarray
    aPhi: np.ndarray
    aValues: np.ndarray

    @property
    def aClosedForm(self) -> np.ndarray:
        return AvgFidelityClosedForm(self.aTheta[:, np.newaxis], self.aPhi[np.newaxis, :])

    # enddef

    @property
    def fMaxDeviation(self) -> float:
        return float(np.max(np.abs(self.aValues - self.aClosedForm)))

    # enddef

    def ToRows(self) -> list:
        aClosed = self.aClosedForm
        return [
            [float(fTheta), float(fPhi), float(self.aValues[iT, iP]), float(aClosed[iT, iP])]
            for iT, fTheta in enumerate(self.aTheta)
            for iP, fPhi in enumerate(self.aPhi)
        ]

    # enddef

    def ToDict(self) -> dict:
        return {
            "theta_grid": self.aTheta.tolist(),
            "phi_grid": self.aPhi.tolist(),
            "values": self.aValues.tolist(),
            "max_deviation": self.fMaxDeviation,
        }

    # enddef


# endclass


################################################################################
def AvgFidelityClosedForm(_xTheta, _xPhi):
    return 2.0 / 3.0 + np.sin(2.0 * np.asarray(_xTheta)) * np.sin(2.0 * np.asarray(_xPhi)) / 3.0


# enddef


################################################################################
def AvgFidelitySurface(
    _aTheta, _aPhi=None, *, iNodes: int = defines.iQuadNodes, iPhases: int = defines.iQuadPhases
) -> CFidelitySurface:
    """Input averaged fidelity of the GHZ measurement protocol over channel and measurement angles.

    The input average is the quadrature over |c0|^2 and the relative phase
    applied to the simulated branch operators.
    """
    aTheta = np.asarray(_aTheta, dtype=float)
    aPhi = aTheta if _aPhi is None else np.asarray(_aPhi, dtype=float)
    for fAngle in np.concatenate([aTheta, aPhi]):
        bases.CheckAngle(fAngle, "grid")
    # endfor

    aC, aW = InputQuadrature(iNodes, iPhases)
    aValues = np.zeros((aTheta.size, aPhi.size))
    for iT, fTheta in enumerate(aTheta):
        for iP, fPhi in enumerate(aPhi):
            xProtocol = ProtocolGhzMeasurement(float(fTheta), float(fPhi))
            aValues[iT, iP] = float(np.dot(aW, xProtocol.BranchFidelitySums(aC)))
        # endfor
    # endfor

    return CFidelitySurface(aTheta=aTheta, aPhi=aPhi, aValues=np.clip(aValues, 0.0, 1.0))


# enddef


################################################################################
def Teleport(
    _sProtocol: str, _xInput, _dicParams: dict, *, bDirect: bool = False, bNormalize: bool = False
) -> CTeleportReport:
    xProtocol = BuildProtocol(_sProtocol, _dicParams, bNormalize=bNormalize)
    return xProtocol.Run(_InputFromPair(_xInput), bDirect=bDirect)


# enddef


################################################################################
def ExpTeleport(_xRunner, _dicParams: dict, *, sFuncName: str) -> dict:
    sProtocol = str(_dicParams["protocol"]).lower()
    bNormalize = convert.ToBool(_dicParams["normalize"])
    xInput = InputFromParams(_dicParams, bNormalize=bNormalize)

    xProtocol = BuildProtocol(sProtocol, _dicParams, bNormalize=bNormalize)
    xReport = xProtocol.Run(xInput, bDirect=convert.ToBool(_dicParams["direct"]))
    _xRunner.xWarnings.Extend(xReport.xWarnings)

    fInputAvg = xProtocol.AverageFidelity()
    _xRunner.LogString(
        f"Teleport '{sProtocol}': avg_fidelity={xReport.fAvgFidelity:.12g}, input average={fInputAvg:.12g}"
    )

    dicResult = xReport.ToDict()
    dicResult["input"] = xInput.ToList()
    dicResult["input_avg_fidelity"] = fInputAvg
    return dicResult


# enddef


################################################################################
def TableTeleport(_dicResult: dict) -> tuple:
    lHeader = ["label", "p", "correction", "fidelity", "success"]
    lRows = [[x["label"], x["p"], x["correction"], x["fidelity"], x["success"]] for x in _dicResult["branches"]]
    return lHeader, lRows


# enddef


################################################################################
def ExpFidelitySurface(_xRunner, _dicParams: dict, *, sFuncName: str) -> dict:
    iGrid = convert.ToInt(_dicParams["grid"])
    if iGrid < 2:
        raise CSimError_Argument(sArg="grid", xValue=iGrid, sMsg="grid needs at least 2 points")
    # endif

    aGrid = np.linspace(0.0, math.pi / 2, iGrid)
    xSurface = AvgFidelitySurface(
        aGrid, iNodes=convert.ToInt(_dicParams["nodes"]), iPhases=convert.ToInt(_dicParams["phases"])
    )
    _xRunner.LogString(f"Fidelity surface {iGrid}x{iGrid}: max deviation {xSurface.fMaxDeviation:.3e}")

    if xSurface.fMaxDeviation > float(_dicParams["tolerance"]):
        raise CSimError_Invariant(
            sInvariant="closed-form-fidelity", sWhere="fidelity-surface", xValue=f"{xSurface.fMaxDeviation:.3e}"
        )
    # endif

    dicResult = xSurface.ToDict()
    dicResult["rows"] = xSurface.ToRows()
    return dicResult


# enddef


################################################################################
def TableFidelitySurface(_dicResult: dict) -> tuple:
    return ["theta", "phi", "avg_fidelity", "closed_form"], _dicResult["rows"]


# enddef


################################################################################
def BuildTables(_xInput: CInputQubit, _fTheta: float, *, bMainText: bool = False) -> dict:
    """Tabulated states and corrections of the Bob x-basis protocol next to the simulated ones."""
    funcEta = TableEtaMainText if bMainText is True else TableEta
    funcCharlie = TableCharlieMainText if bMainText is True else TableCharlie
    funcCorrection = TableCorrectionMainText if bMainText is True else TableCorrection

    fTheta = bases.CheckAngle(_fTheta, "theta")
    fMaxDev = 0.0

    lEta = []
    for iM in range(2):
        for iN in range(2):
            aTable = funcEta(_xInput, iM, iN).aAmp
            aSim = SimulateEta(_xInput, iM, iN).aAmp
            fMaxDev = max(fMaxDev, float(np.max(np.abs(aTable - aSim))))
            lEta.append({"label": f"{iM}{iN}", "table": text.ComplexList(aTable), "simulated": text.ComplexList(aSim)})
        # endfor
    # endfor

    xReport = ProtocolGhzEpr(fTheta, bMainTextCorrections=bMainText).Run(_xInput)
    lCharlie = []
    for xBranch in xReport.lBranches:
        aTable = funcCharlie(_xInput, fTheta, *xBranch.tLabel).aAmp
        aSim = 2.0 * xBranch.xRawState.aAmp
        fMaxDev = max(fMaxDev, float(np.max(np.abs(aTable - aSim))))
        lCharlie.append(
            {
                "label": xBranch.sLabel,
                "table": text.ComplexList(aTable),
                "simulated": text.ComplexList(aSim),
                "correction": funcCorrection(*xBranch.tLabel),
                "p": xBranch.fProb,
                "fidelity": xBranch.fFidelity,
            }
        )
    # endfor

    return {
        "variant": "main-text" if bMainText is True else "erratum",
        "theta": fTheta,
        "input": _xInput.ToList(),
        "eta": lEta,
        "charlie": lCharlie,
        "avg_fidelity": xReport.fAvgFidelity,
        "max_deviation": fMaxDev,
    }


# enddef


################################################################################
def ExpTables(_xRunner, _dicParams: dict, *, sFuncName: str) -> dict:
    xInput = InputFromParams(_dicParams, bNormalize=convert.ToBool(_dicParams["normalize"]))
    sVariant = str(_dicParams["variant"]).lower()
    if sVariant not in ("erratum", "main-text"):
        raise CSimError_Argument(sArg="variant", xValue=sVariant, sMsg="expect 'erratum' or 'main-text'")
    # endif

    dicResult = BuildTables(xInput, convert.ToAngle(_dicParams["theta"]), bMainText=(sVariant == "main-text"))
    _xRunner.LogString(f"Tables ({sVariant}): max deviation from simulation {dicResult['max_deviation']:.3e}")

    if sVariant == "erratum" and dicResult["max_deviation"] > defines.fAlgebraTol:
        raise CSimError_Invariant(
            sInvariant="erratum-tables", sWhere="tables", xValue=f"{dicResult['max_deviation']:.3e}"
        )
    # endif
    return dicResult


# enddef


################################################################################
def TableTables(_dicResult: dict) -> tuple:
    lRows = []
    for sTable in ("eta", "charlie"):
        for dicRow in _dicResult[sTable]:
            for iIdx, (lTab, lSim) in enumerate(zip(dicRow["table"], dicRow["simulated"])):
                lRows.append([sTable, dicRow["label"], iIdx, lTab[0], lTab[1], lSim[0], lSim[1]])
            # endfor
        # endfor
    # endfor
    return ["table", "label", "index", "table_re", "table_im", "simulated_re", "simulated_im"], lRows


# enddef


__tripsim_functions__ = {
    "teleport": {
        "funcExec": ExpTeleport,
        "funcTable": TableTeleport,
        "dicDefaults": {
            "protocol": "ghz-meas",
            "c0": 0.6,
            "c1": 0.8,
            "bob_theta": "pi/4",
            "theta_channel": "pi/4",
            "theta_meas": "pi/4",
            "theta1": "pi/4",
            "theta2": "pi/4",
            "theta3": "pi/4",
            "a": None,
            "b": None,
            "c": None,
            "normalize": True,
            "direct": False,
        },
    },
    "fidelity-surface": {
        "funcExec": ExpFidelitySurface,
        "funcTable": TableFidelitySurface,
        "dicDefaults": {"grid": 21, "nodes": defines.iQuadNodes, "phases": defines.iQuadPhases, "tolerance": 1e-6},
    },
    "tables": {
        "funcExec": ExpTables,
        "funcTable": TableTables,
        "dicDefaults": {"c0": 0.6, "c1": 0.8, "theta": "pi/4", "variant": "erratum", "normalize": True},
    },
}
