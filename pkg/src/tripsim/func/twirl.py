#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\func\twirl.py
# Created Date: Tuesday, March 5th 2024, 2:47:31 pm
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

import math
import numpy as np
from concurrent.futures import ThreadPoolExecutor

from ..core import defines, qstate
from ..core.cls_density import CDensityOp
from ..core.cls_state import CStateVector
from ..core.cls_sim_error import CSimError_Argument, CSimError_Dimension
from ..util import convert
from . import bases


################################################################################
def _CheckLevel(_iD: int) -> int:
    iD = int(_iD)
    if iD < 2:
        raise CSimError_Argument(sArg="d", xValue=_iD, sMsg="level count must be at least 2")
    # endif
    return iD


# enddef


################################################################################
def _CheckUnit(_fValue: float, _sName: str) -> float:
    fValue = float(_fValue)
    if fValue < 0.0 or fValue > 1.0:
        raise CSimError_Argument(sArg=_sName, xValue=fValue, sMsg=f"'{_sName}' must lie in [0, 1]")
    # endif
    return fValue


# enddef


################################################################################
def FlipOperator(_iD: int) -> np.ndarray:
    # V = sum_ij |ij><ji|
    iD = _CheckLevel(_iD)
    aV = np.zeros((iD * iD, iD * iD), dtype=complex)
    for iI in range(iD):
        for iJ in range(iD):
            aV[iI * iD + iJ, iJ * iD + iI] = 1.0
        # endfor
    # endfor
    return aV


# enddef


################################################################################
def ProjSymmetric(_iD: int) -> np.ndarray:
    return 0.5 * (np.eye(_iD * _iD, dtype=complex) + FlipOperator(_iD))


# enddef


################################################################################
def ProjAntisymmetric(_iD: int) -> np.ndarray:
    return 0.5 * (np.eye(_iD * _iD, dtype=complex) - FlipOperator(_iD))


# enddef


################################################################################
def ProjMaxEntangled(_iD: int) -> np.ndarray:
    # |phi_00^(d)><phi_00^(d)| with |phi_00^(d)> = sum_k |kk> / sqrt(d)
    xPhi = bases.GeneralBell(bases.CGeneralBellSpec.Uniform(_CheckLevel(_iD)), 0, 0)
    return np.outer(xPhi.aAmp, xPhi.aAmp.conj())


# enddef


################################################################################
def Werner(_iD: int, _fP: float) -> CDensityOp:
    """(1-p) 2/(d^2+d) P+ + p 2/(d^2-d) P-, with P+- = (1 +- V)/2."""
    iD = _CheckLevel(_iD)
    fP = _CheckUnit(_fP, "p")
    aMat = (1.0 - fP) * 2.0 / (iD * iD + iD) * ProjSymmetric(iD) + fP * 2.0 / (iD * iD - iD) * ProjAntisymmetric(iD)
    return CDensityOp(aMat, tDims=(iD, iD))


# enddef


################################################################################
def Isotropic(_iD: int, _fF: float, *, bRangeGuard: bool = True) -> CDensityOp:
    """(1-f)/(d^2-1) 1 + (f d^2 - 1)/(d^2-1) P_+.

    With the range guard, f below 1/d^2 is rejected.
    """
    iD = _CheckLevel(_iD)
    fF = _CheckUnit(_fF, "f")
    iD2 = iD * iD
    if bRangeGuard is True and fF < 1.0 / iD2 - defines.fAlgebraTol:
        raise CSimError_Argument(
            sArg="f", xValue=fF, sMsg=f"isotropic weight must lie in [1/d^2, 1] = [{1.0 / iD2:.6g}, 1]"
        )
    # endif

    aMat = (1.0 - fF) / (iD2 - 1) * np.eye(iD2, dtype=complex) + (fF * iD2 - 1.0) / (iD2 - 1) * ProjMaxEntangled(iD)
    return CDensityOp(aMat, tDims=(iD, iD))


# enddef


################################################################################
def IsotropicBellDiagonal(_iD: int, _fF: float) -> CDensityOp:
    # weight f on |phi_00>, (1-f)/(d^2-1) on each of the other generalized Bell states
    iD = _CheckLevel(_iD)
    fF = _CheckUnit(_fF, "f")
    fRest = (1.0 - fF) / (iD * iD - 1)

    aMat = np.zeros((iD * iD, iD * iD), dtype=complex)
    for tLabel, xPhi in bases.GeneralBellBasis(bases.CGeneralBellSpec.Uniform(iD)):
        fW = fF if tLabel == (0, 0) else fRest
        aMat += fW * np.outer(xPhi.aAmp, xPhi.aAmp.conj())
    # endfor
    return CDensityOp(aMat, tDims=(iD, iD))


# enddef


################################################################################
def GenWerner3Q(_fP: float, _fTheta: float) -> CDensityOp:
    # p |psi_000(theta)><psi_000(theta)| + (1-p)/8 1_8
    fP = _CheckUnit(_fP, "p")
    xPsi = bases.GhzBasis(_fTheta, 0, 0, 0)
    aMat = fP * np.outer(xPsi.aAmp, xPsi.aAmp.conj()) + (1.0 - fP) / 8.0 * np.eye(8, dtype=complex)
    return CDensityOp(aMat)


# enddef


################################################################################
def _TwoPartyLevel(_rho: CDensityOp) -> int:
    if len(_rho.tDims) == 2 and _rho.tDims[0] == _rho.tDims[1]:
        return _rho.tDims[0]
    # endif
    iD = int(round(math.sqrt(_rho.iDim)))
    if iD * iD != _rho.iDim:
        raise CSimError_Dimension(sContext="Two-party operator", xExpected="d x d", xGiven=_rho.tDims)
    # endif
    return iD


# enddef


################################################################################
def WernerInvariant(_rho: CDensityOp) -> float:
    # p = tr(P- rho)
    return float(np.trace(ProjAntisymmetric(_TwoPartyLevel(_rho)) @ _rho.aMat).real)


# enddef


################################################################################
def IsotropicInvariant(_rho: CDensityOp) -> float:
    # f = tr(P_+ rho)
    return float(np.trace(ProjMaxEntangled(_TwoPartyLevel(_rho)) @ _rho.aMat).real)


# enddef


################################################################################
def SingletFraction(_rho: CDensityOp) -> float:
    if _rho.iDim != 4:
        raise CSimError_Dimension(sContext="Singlet fraction", xExpected=4, xGiven=_rho.iDim)
    # endif
    xSinglet = bases.Bell2(math.pi / 4, 1, 1)
    return float(np.vdot(xSinglet.aAmp, _rho.aMat @ xSinglet.aAmp).real)


# enddef


################################################################################
def _ChunkSizes(_iSamples: int, _iChunks: int) -> list:
    iBase, iRem = divmod(_iSamples, _iChunks)
    return [iBase + (1 if i < iRem else 0) for i in range(_iChunks)]


# enddef


################################################################################
def _TwirlChunk(_aRho: np.ndarray, _iD: int, _iCount: int, _iSeed: int, _bStar: bool) -> np.ndarray:
    xRng = np.random.default_rng(_iSeed)
    aSum = np.zeros_like(_aRho)
    for _ in range(_iCount):
        aU = qstate.HaarMatrix(_iD, xRng)
        aW = np.kron(aU, aU.conj() if _bStar else aU)
        aSum += aW @ _aRho @ aW.conj().T
    # endfor
    return aSum


# enddef


################################################################################
def TwirlChunks(
    _rho: CDensityOp, _iSamples: int, _xRng: np.random.Generator, *, bStar: bool, iThreads: int = 1
) -> list:
    """Sampled twirl split into a fixed number of chunks.

    Each chunk draws from its own generator seeded from _xRng, so the
    result does not depend on the thread count. Returns (count, sum) per chunk.
    """
    iSamples = int(_iSamples)
    if iSamples < 1:
        raise CSimError_Argument(sArg="samples", xValue=_iSamples, sMsg="at least one sample required")
    # endif

    iD = _TwoPartyLevel(_rho)
    lSizes = _ChunkSizes(iSamples, defines.iMonteCarloChunks)
    lSeeds = [int(x) for x in _xRng.integers(0, 2**63 - 1, size=len(lSizes))]
    lJobs = [(iCnt, iSeed) for iCnt, iSeed in zip(lSizes, lSeeds) if iCnt > 0]

    def _Run(_tJob):
        return _TwirlChunk(_rho.aMat, iD, _tJob[0], _tJob[1], bStar)

    # enddef

    if iThreads > 1:
        with ThreadPoolExecutor(max_workers=iThreads) as xPool:
            lSums = list(xPool.map(_Run, lJobs))
        # endwith
    else:
        lSums = [_Run(x) for x in lJobs]
    # endif

    return [(tJob[0], aSum) for tJob, aSum in zip(lJobs, lSums)]


# enddef


################################################################################
def _Average(_lChunks: list, _tDims: tuple) -> CDensityOp:
    iTotal = sum(x[0] for x in _lChunks)
    aSum = sum(x[1] for x in _lChunks)
    return CDensityOp(aSum / iTotal, tDims=_tDims)


# enddef


################################################################################
def TwirlUU(_rho: CDensityOp, _iSamples: int, _xRng: np.random.Generator, *, iThreads: int = 1) -> CDensityOp:
    lChunks = TwirlChunks(_rho, _iSamples, _xRng, bStar=False, iThreads=iThreads)
    return _Average(lChunks, _rho.tDims)


# enddef


################################################################################
def TwirlUUStar(_rho: CDensityOp, _iSamples: int, _xRng: np.random.Generator, *, iThreads: int = 1) -> CDensityOp:
    lChunks = TwirlChunks(_rho, _iSamples, _xRng, bStar=True, iThreads=iThreads)
    return _Average(lChunks, _rho.tDims)


# enddef


################################################################################
def RandomPureState(_iD: int, _xRng: np.random.Generator) -> CStateVector:
    aZ = _xRng.standard_normal(_iD * _iD) + 1j * _xRng.standard_normal(_iD * _iD)
    return CStateVector(aZ / np.linalg.norm(aZ), tDims=(_iD, _iD))


# enddef


################################################################################
def ExpTwirl(_xRunner, _dicParams: dict, *, sFuncName: str) -> dict:
    sFamily = str(_dicParams["family"]).lower()
    iD = _CheckLevel(convert.ToInt(_dicParams["d"]))
    sInput = str(_dicParams["input"]).lower()
    iSamples = convert.ToInt(_dicParams["samples"])
    iThreads = max(1, convert.ToInt(_dicParams["threads"]))
    xRng = _xRunner.GetRng()

    if sFamily not in ("werner", "isotropic"):
        raise CSimError_Argument(sArg="family", xValue=sFamily, sMsg="expect 'werner' or 'isotropic'")
    # endif
    bStar = sFamily == "isotropic"

    if sInput == "self":
        fValue = convert.ToFloat(_dicParams["value"])
        rhoIn = Isotropic(iD, fValue) if bStar else Werner(iD, fValue)
    elif sInput == "bell":
        rhoIn = CDensityOp(ProjMaxEntangled(iD), tDims=(iD, iD))
    elif sInput == "mixed":
        rhoIn = CDensityOp.MaximallyMixed((iD, iD))
    elif sInput == "random":
        rhoIn = qstate.DensityFromState(RandomPureState(iD, xRng))
    else:
        raise CSimError_Argument(sArg="input", xValue=sInput, sMsg="expect one of self, bell, mixed, random")
    # endif

    if bStar:
        fInvariant = IsotropicInvariant(rhoIn)
        rhoTarget = Isotropic(iD, min(max(fInvariant, 0.0), 1.0), bRangeGuard=False)
    else:
        fInvariant = WernerInvariant(rhoIn)
        rhoTarget = Werner(iD, min(max(fInvariant, 0.0), 1.0))
    # endif

    _xRunner.LogString(f"Twirling {sFamily} input '{sInput}' (d={iD}) with {iSamples} samples")
    lChunks = TwirlChunks(rhoIn, iSamples, xRng, bStar=bStar, iThreads=iThreads)

    lHistory = []
    iCount = 0
    aSum = np.zeros_like(rhoIn.aMat)
    for iCnt, aChunk in lChunks:
        iCount += iCnt
        aSum = aSum + aChunk
        lHistory.append([iCount, qstate.TraceDistance(aSum / iCount, rhoTarget)])
    # endfor

    return {
        "family": sFamily,
        "d": iD,
        "input": sInput,
        "invariant": fInvariant,
        "samples": iSamples,
        "trace_distance": lHistory[-1][1],
        "trace_distance_history": lHistory,
    }


# enddef


################################################################################
def TableTwirl(_dicResult: dict) -> tuple:
    return ["samples", "trace_distance"], _dicResult["trace_distance_history"]


# enddef


__tripsim_functions__ = {
    "twirl": {
        "funcExec": ExpTwirl,
        "funcTable": TableTwirl,
        "dicDefaults": {"family": "werner", "d": 2, "input": "self", "value": 0.7, "samples": 2000, "threads": 1},
    },
}
