#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\core\qstate.py
# Created Date: Monday, March 4th 2024, 1:20:36 pm
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

# Dense kernel over small registers.
# Index order is big-endian: subsystem 0 is the most significant index digit,
# i.e. the leftmost ket symbol.

import string
import functools
import numpy as np
from scipy.linalg import qr
from typing import NamedTuple, Optional, Sequence, Union

from . import defines
from .cls_state import CStateVector, CStateRaw
from .cls_density import CDensityOp
from .cls_local_op import CLocalOperator
from .cls_sim_error import (
    CSimError_Capacity,
    CSimError_Contract,
    CSimError_Index,
    CSimError_Argument,
    CSimError_Dimension,
)


################################################################################
class SchmidtData(NamedTuple):
    # coefficients are the squared Schmidt values, descending
    aCoef: np.ndarray
    lLeftBasis: list
    lRightBasis: list

    def Reconstruct(self) -> np.ndarray:
        # amplitudes ordered as (left subsystems, right subsystems)
        aAmp = 0.0
        for fLambda, aLeft, aRight in zip(self.aCoef, self.lLeftBasis, self.lRightBasis):
            aAmp = aAmp + np.sqrt(fLambda) * np.kron(aLeft, aRight)
        # endfor
        return aAmp

    # enddef

    def Rank(self, fTol: float = defines.fNormTol) -> int:
        return int(np.count_nonzero(self.aCoef > fTol))

    # enddef


# endclass


################################################################################
def _CheckTargets(_lTargets: Sequence[int], _iCnt: int, *, sContext: str = None, bAllowEmpty: bool = True):
    lTargets = [int(x) for x in _lTargets]
    if bAllowEmpty is False and len(lTargets) == 0:
        raise CSimError_Argument(sArg="targets", xValue=lTargets, sMsg="at least one qubit index expected")
    # endif
    if len(set(lTargets)) != len(lTargets) or any(x < 0 or x >= _iCnt for x in lTargets):
        raise CSimError_Index(lTargets=lTargets, iQubitCnt=_iCnt, sContext=sContext)
    # endif
    return lTargets


# enddef


################################################################################
def _ApplyToAxes(_aTensor: np.ndarray, _aMat: np.ndarray, _lAxes: Sequence[int], _tOpDims: tuple) -> np.ndarray:
    iCnt = len(_lAxes)
    if iCnt == 0:
        return _aTensor * _aMat.reshape(())
    # endif
    aOp = _aMat.reshape(_tOpDims + _tOpDims)
    aRes = np.tensordot(aOp, _aTensor, axes=(list(range(iCnt, 2 * iCnt)), list(_lAxes)))
    return np.moveaxis(aRes, list(range(iCnt)), list(_lAxes))


# enddef


################################################################################
def _CheckOperatorDims(_xOp: CLocalOperator, _tDims: tuple):
    tOpDims = tuple(_tDims[i] for i in _xOp.lTargets)
    if tOpDims != _xOp.tDims:
        raise CSimError_Dimension(sContext="Local operator targets", xExpected=tOpDims, xGiven=_xOp.tDims)
    # endif


# enddef


################################################################################
def KronAll(_lMats: Sequence[np.ndarray]) -> np.ndarray:
    if len(_lMats) == 0:
        return np.ones((1, 1), dtype=complex)
    # endif
    return functools.reduce(np.kron, [np.asarray(x, dtype=complex) for x in _lMats])


# enddef


################################################################################
def Tensor(_xA: CStateRaw, _xB: CStateRaw, *, iQubitCap: Optional[int] = None) -> CStateVector:
    """Kronecker product; the subsystems of the second factor follow those of the first."""

    iCap = defines.iQubitCap if iQubitCap is None else iQubitCap
    iCnt = _xA.iQubitCnt + _xB.iQubitCnt
    if iCnt > iCap:
        raise CSimError_Capacity(iQubitCnt=iCnt, iQubitCap=iCap)
    # endif

    aAmp = np.kron(_xA.aAmp, _xB.aAmp)
    tDims = _xA.tDims + _xB.tDims
    if isinstance(_xA, CStateVector) and isinstance(_xB, CStateVector):
        return CStateVector(aAmp, tDims=tDims)
    # endif
    return CStateRaw(aAmp, tDims=tDims)


# enddef


################################################################################
def TensorDensity(_rhoA: CDensityOp, _rhoB: CDensityOp, *, iQubitCap: Optional[int] = None) -> CDensityOp:
    iCap = defines.iQubitCap if iQubitCap is None else iQubitCap
    iCnt = _rhoA.iQubitCnt + _rhoB.iQubitCnt
    if iCnt > iCap:
        raise CSimError_Capacity(iQubitCnt=iCnt, iQubitCap=iCap)
    # endif
    return CDensityOp(np.kron(_rhoA.aMat, _rhoB.aMat), tDims=_rhoA.tDims + _rhoB.tDims, bCheck=False)


# enddef


################################################################################
def ApplyLocal(_xOp: CLocalOperator, _xState: CStateRaw) -> CStateRaw:
    """Apply (1 x ... x U x ... x 1) to the state.

    Returns a CStateVector for normalized input and unitary operators,
    otherwise the raw amplitudes.
    """
    _CheckTargets(_xOp.lTargets, _xState.iQubitCnt, sContext="Operator targets")
    _CheckOperatorDims(_xOp, _xState.tDims)

    aRes = _ApplyToAxes(_xState.AsTensor(), _xOp.aMat, _xOp.lTargets, _xOp.tDims)

    if _xOp.bUnitary is True and isinstance(_xState, CStateVector):
        return CStateVector(aRes.reshape(-1), tDims=_xState.tDims)
    # endif
    return CStateRaw(aRes.reshape(-1), tDims=_xState.tDims)


# enddef


################################################################################
def ApplyLocalMatrix(_aMat: np.ndarray, _tDims: tuple, _xOp: CLocalOperator, *, bBothSides: bool = True) -> np.ndarray:
    # operator level: U M U^dagger, or U M if bBothSides is False
    iCnt = len(_tDims)
    aT = np.asarray(_aMat).reshape(_tDims + _tDims)
    aT = _ApplyToAxes(aT, _xOp.aMat, list(_xOp.lTargets), _xOp.tDims)
    if bBothSides is True:
        aT = _ApplyToAxes(aT, _xOp.aMat.conj(), [iCnt + i for i in _xOp.lTargets], _xOp.tDims)
    # endif
    iDim = int(np.prod(_tDims, dtype=np.int64))
    return aT.reshape(iDim, iDim)


# enddef


################################################################################
def ApplyLocalDensity(_xOp: CLocalOperator, _rho: CDensityOp) -> CDensityOp:
    _CheckTargets(_xOp.lTargets, _rho.iQubitCnt, sContext="Operator targets")
    _CheckOperatorDims(_xOp, _rho.tDims)
    aMat = ApplyLocalMatrix(_rho.aMat, _rho.tDims, _xOp)
    return CDensityOp(aMat, tDims=_rho.tDims, bCheck=_xOp.bUnitary)


# enddef


################################################################################
def ProjectRaw(_xState: CStateRaw, _xBasis: CStateRaw, _lTargets: Sequence[int]) -> CStateRaw:
    lTargets = _CheckTargets(_lTargets, _xState.iQubitCnt, sContext="Projection targets")
    tTrgDims = tuple(_xState.tDims[i] for i in lTargets)
    if _xBasis.tDims != tTrgDims:
        raise CSimError_Dimension(sContext="Projection basis state", xExpected=tTrgDims, xGiven=_xBasis.tDims)
    # endif

    iCnt = len(lTargets)
    aBra = _xBasis.aAmp.conj().reshape(tTrgDims)
    aRes = np.tensordot(aBra, _xState.AsTensor(), axes=(list(range(iCnt)), lTargets))
    tRest = tuple(d for i, d in enumerate(_xState.tDims) if i not in lTargets)
    return CStateRaw(aRes.reshape(-1), tDims=tRest)


# enddef


################################################################################
def Project(_xState: CStateRaw, _xBasis: CStateRaw, _lTargets: Sequence[int]) -> tuple:
    """Project the target subsystems onto a basis state.

    Returns (probability, post). The post state lives on the untouched
    subsystems in their original order. A zero probability branch returns
    the raw zero-flagged CStateRaw instead of dividing by zero.
    """
    xRaw = ProjectRaw(_xState, _xBasis, _lTargets)
    fProb = xRaw.fNormSq
    if fProb < defines.fZeroProbTol:
        return fProb, xRaw
    # endif
    return fProb, xRaw.Normalized()


# enddef


################################################################################
def ProjectOperatorRaw(_aMat: np.ndarray, _tDims: tuple, _xBasis: CStateRaw, _lTargets: Sequence[int]) -> tuple:
    # <b| M |b> on the target subsystems for any operator M, no positivity assumed
    iCnt = len(_tDims)
    lTargets = _CheckTargets(_lTargets, iCnt, sContext="Projection targets")
    tTrgDims = tuple(_tDims[i] for i in lTargets)
    if _xBasis.tDims != tTrgDims:
        raise CSimError_Dimension(sContext="Projection basis state", xExpected=tTrgDims, xGiven=_xBasis.tDims)
    # endif

    iTrg = len(lTargets)
    aBasis = _xBasis.aAmp.reshape(tTrgDims)
    aT = np.asarray(_aMat).reshape(_tDims + _tDims)
    aT = np.tensordot(aBasis.conj(), aT, axes=(list(range(iTrg)), lTargets))
    aT = np.tensordot(aT, aBasis, axes=([iCnt - iTrg + i for i in lTargets], list(range(iTrg))))

    tRest = tuple(d for i, d in enumerate(_tDims) if i not in lTargets)
    iRest = int(np.prod(tRest, dtype=np.int64))
    return aT.reshape(iRest, iRest), tRest


# enddef


################################################################################
def ProjectDensity(_rho: CDensityOp, _xBasis: CStateRaw, _lTargets: Sequence[int]) -> tuple:
    """Mixed-state projection. Returns (probability, post) with post None for a zero branch."""

    aMat, tRest = ProjectOperatorRaw(_rho.aMat, _rho.tDims, _xBasis, _lTargets)
    fProb = float(np.trace(aMat).real)
    if fProb < defines.fZeroProbTol:
        return max(fProb, 0.0), None
    # endif
    aMat = aMat / fProb
    return fProb, CDensityOp(0.5 * (aMat + aMat.conj().T), tDims=tRest, bCheck=False)


# enddef


################################################################################
def PartialTrace(_rho: CDensityOp, _lKeep: Sequence[int]) -> CDensityOp:
    iCnt = _rho.iQubitCnt
    lKeep = _CheckTargets(_lKeep, iCnt, sContext="Kept subsystems", bAllowEmpty=False)

    if lKeep == list(range(iCnt)):
        return _rho
    # endif

    sLetters = string.ascii_letters
    lRow = [sLetters[i] for i in range(iCnt)]
    lCol = [sLetters[iCnt + i] if i in lKeep else sLetters[i] for i in range(iCnt)]
    sOut = "".join(lRow[i] for i in lKeep) + "".join(lCol[i] for i in lKeep)
    aRes = np.einsum("".join(lRow) + "".join(lCol) + "->" + sOut, _rho.AsTensor())

    tKeep = tuple(_rho.tDims[i] for i in lKeep)
    iDim = int(np.prod(tKeep, dtype=np.int64))
    return CDensityOp(aRes.reshape(iDim, iDim), tDims=tKeep, bCheck=False)


# enddef


################################################################################
def ReducedDensity(_xState: CStateRaw, _lKeep: Sequence[int]) -> CDensityOp:
    # reduced operator of a pure state without forming the full density matrix
    iCnt = _xState.iQubitCnt
    lKeep = _CheckTargets(_lKeep, iCnt, sContext="Kept subsystems", bAllowEmpty=False)
    lRest = [i for i in range(iCnt) if i not in lKeep]

    tKeep = tuple(_xState.tDims[i] for i in lKeep)
    iKeep = int(np.prod(tKeep, dtype=np.int64))
    aM = np.transpose(_xState.AsTensor(), lKeep + lRest).reshape(iKeep, -1)
    return CDensityOp(aM @ aM.conj().T, tDims=tKeep, bCheck=False)


# enddef


################################################################################
def DensityFromState(_xState: CStateRaw) -> CDensityOp:
    aAmp = _xState.aAmp
    return CDensityOp(np.outer(aAmp, aAmp.conj()), tDims=_xState.tDims, bCheck=isinstance(_xState, CStateVector))


# enddef


################################################################################
def FidelityPure(_rho: CDensityOp, _xTarget: CStateRaw) -> float:
    if _rho.tDims != _xTarget.tDims:
        raise CSimError_Dimension(sContext="Fidelity target", xExpected=_rho.tDims, xGiven=_xTarget.tDims)
    # endif

    fDev = abs(_xTarget.fNormSq - 1.0)
    if fDev > defines.fNormTol:
        raise CSimError_Contract(sWhat="fidelity target is not normalized", fDeviation=fDev)
    # endif

    fDev = abs(complex(np.trace(_rho.aMat)) - 1.0)
    if fDev > defines.fNormTol:
        raise CSimError_Contract(sWhat="density operator trace is not one", fDeviation=fDev)
    # endif

    fF = float(np.vdot(_xTarget.aAmp, _rho.aMat @ _xTarget.aAmp).real)
    if fF < -defines.fNormTol or fF > 1.0 + defines.fNormTol:
        raise CSimError_Contract(sWhat="fidelity outside [0, 1]", fDeviation=max(-fF, fF - 1.0))
    # endif

    # only round-off remains outside [0, 1]
    return min(max(fF, 0.0), 1.0)


# enddef


################################################################################
def SchmidtDecompose(_xState: CStateVector, _lLeft: Sequence[int]) -> SchmidtData:
    iCnt = _xState.iQubitCnt
    lLeft = _CheckTargets(_lLeft, iCnt, sContext="Schmidt cut")
    lRight = [i for i in range(iCnt) if i not in lLeft]

    iLeft = int(np.prod([_xState.tDims[i] for i in lLeft], dtype=np.int64))
    aM = np.transpose(_xState.AsTensor(), lLeft + lRight).reshape(iLeft, -1)
    aU, aS, aVh = np.linalg.svd(aM, full_matrices=False)

    # svd returns singular values in descending order
    return SchmidtData(
        aCoef=aS**2,
        lLeftBasis=[aU[:, j] for j in range(aS.size)],
        lRightBasis=[aVh[j, :] for j in range(aS.size)],
    )


# enddef


################################################################################
def HaarMatrix(_iDim: int, _xRng: np.random.Generator) -> np.ndarray:
    if _iDim < 1:
        raise CSimError_Argument(sArg="d", xValue=_iDim, sMsg="dimension must be at least 1")
    # endif

    # Ginibre matrix, QR, then fix the phases of R's diagonal
    aZ = (_xRng.standard_normal((_iDim, _iDim)) + 1j * _xRng.standard_normal((_iDim, _iDim))) / np.sqrt(2.0)
    aQ, aR = qr(aZ)
    aDiag = np.diag(aR)
    return aQ * (aDiag / np.abs(aDiag))


# enddef


################################################################################
def HaarUnitary(_iDim: int, _xRng: np.random.Generator) -> CLocalOperator:
    aU = HaarMatrix(_iDim, _xRng)

    iQubits = _iDim.bit_length() - 1
    if _iDim > 1 and 2**iQubits == _iDim:
        return CLocalOperator(aU, list(range(iQubits)), sLabel="haar")
    # endif
    return CLocalOperator(aU, [0], sLabel="haar", tDims=(_iDim,))


# enddef


################################################################################
def Expectation(_xValue: Union[CStateRaw, CDensityOp], _xOp: Union[CLocalOperator, np.ndarray]) -> complex:
    if isinstance(_xValue, CDensityOp):
        tDims = _xValue.tDims
        aOp = _xOp
        if isinstance(_xOp, CLocalOperator):
            _CheckOperatorDims(_xOp, tDims)
            aOp = ApplyLocalMatrix(np.eye(_xValue.iDim, dtype=complex), tDims, _xOp, bBothSides=False)
        # endif
        return complex(np.trace(aOp @ _xValue.aMat))
    # endif

    if isinstance(_xOp, CLocalOperator):
        _CheckOperatorDims(_xOp, _xValue.tDims)
        aRes = _ApplyToAxes(_xValue.AsTensor(), _xOp.aMat, _xOp.lTargets, _xOp.tDims).reshape(-1)
    else:
        aRes = np.asarray(_xOp) @ _xValue.aAmp
    # endif
    return complex(np.vdot(_xValue.aAmp, aRes))


# enddef


################################################################################
def TraceDistance(_xA: Union[CDensityOp, np.ndarray], _xB: Union[CDensityOp, np.ndarray]) -> float:
    aA = _xA.aMat if isinstance(_xA, CDensityOp) else np.asarray(_xA)
    aB = _xB.aMat if isinstance(_xB, CDensityOp) else np.asarray(_xB)
    if aA.shape != aB.shape:
        raise CSimError_Dimension(sContext="Trace distance", xExpected=aA.shape, xGiven=aB.shape)
    # endif
    aD = aA - aB
    return float(0.5 * np.sum(np.abs(np.linalg.eigvalsh(0.5 * (aD + aD.conj().T)))))


# enddef


################################################################################
def Purity(_rho: CDensityOp) -> float:
    return float(np.real(np.trace(_rho.aMat @ _rho.aMat)))


# enddef
