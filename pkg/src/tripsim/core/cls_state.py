#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\core\cls_state.py
# Created Date: Monday, March 4th 2024, 10:31:07 am
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
from typing import Optional, Sequence

from . import defines
from .cls_sim_error import CSimError_Contract, CSimError_Dimension, CSimError_Argument


################################################################################
def _ToDims(_iSize: int, _tDims: Optional[Sequence[int]]) -> tuple:
    # default: qubit register inferred from the amplitude count
    if _tDims is None:
        iCnt = int(round(math.log2(_iSize))) if _iSize > 0 else 0
        if 2**iCnt != _iSize:
            raise CSimError_Dimension(
                sContext="Amplitude array", xExpected="a power of two", xGiven=_iSize
            )
        # endif
        return (2,) * iCnt
    # endif

    tDims = tuple(int(x) for x in _tDims)
    if any(x < 1 for x in tDims):
        raise CSimError_Argument(sArg="tDims", xValue=tDims, sMsg="local dimensions must be positive")
    # endif
    if int(np.prod(tDims, dtype=np.int64)) != _iSize:
        raise CSimError_Dimension(sContext="Amplitude array", xExpected=int(np.prod(tDims)), xGiven=_iSize)
    # endif
    return tDims


# enddef


################################################################################
class CStateRaw:
    """Unnormalized amplitude array over a labeled register.

    Carries raw projection results. Index order is big-endian: subsystem 0
    is the most significant index digit.
    """

    def __init__(self, _aAmp, *, tDims: Optional[Sequence[int]] = None):
        aAmp = np.array(_aAmp, dtype=complex).reshape(-1)
        self._tDims: tuple = _ToDims(aAmp.size, tDims)
        aAmp.setflags(write=False)
        self._aAmp: np.ndarray = aAmp

    # enddef

    @property
    def aAmp(self) -> np.ndarray:
        return self._aAmp

    # enddef

    @property
    def tDims(self) -> tuple:
        return self._tDims

    # enddef

    @property
    def iQubitCnt(self) -> int:
        return len(self._tDims)

    # enddef

    @property
    def iDim(self) -> int:
        return self._aAmp.size

    # enddef

    @property
    def fNormSq(self) -> float:
        return float(np.vdot(self._aAmp, self._aAmp).real)

    # enddef

    @property
    def bIsZero(self) -> bool:
        return self.fNormSq < defines.fZeroProbTol

    # enddef

    def AsTensor(self) -> np.ndarray:
        return self._aAmp.reshape(self._tDims)

    # enddef

    def Normalized(self) -> "CStateVector":
        fNormSq = self.fNormSq
        if fNormSq < defines.fZeroProbTol:
            raise CSimError_Contract(sWhat="cannot normalize a zero-flagged state", fDeviation=fNormSq)
        # endif
        return CStateVector(self._aAmp / math.sqrt(fNormSq), tDims=self._tDims)

    # enddef

    def ToList(self) -> list:
        return [[float(x.real), float(x.imag)] for x in self._aAmp]

    # enddef

    def __repr__(self):
        return "{}(dims={}, amp={})".format(type(self).__name__, self._tDims, np.array2string(self._aAmp, precision=6))

    # enddef


# endclass


################################################################################
class CStateVector(CStateRaw):
    """Normalized pure state. Construction fails if the norm deviates by more than 1e-9."""

    def __init__(self, _aAmp, *, tDims: Optional[Sequence[int]] = None):
        super().__init__(_aAmp, tDims=tDims)

        fDev = abs(self.fNormSq - 1.0)
        if fDev > defines.fNormTol:
            raise CSimError_Contract(sWhat="state vector is not normalized", fDeviation=fDev)
        # endif

    # enddef

    @staticmethod
    def Scalar() -> "CStateVector":
        return CStateVector(np.ones(1, dtype=complex), tDims=())

    # enddef

    @staticmethod
    def Basis(_sBits: str) -> "CStateVector":
        # computational basis state from a bit string, e.g. "010"
        iCnt = len(_sBits)
        aAmp = np.zeros(2**iCnt, dtype=complex)
        aAmp[int(_sBits, 2) if iCnt > 0 else 0] = 1.0
        return CStateVector(aAmp)

    # enddef

    @staticmethod
    def FromDict(_xData) -> "CStateVector":
        # accepts {"amplitudes": [[re, im], ...], "dims": [...]} or a bare amplitude list
        if isinstance(_xData, dict):
            lAmp = _xData.get("amplitudes")
            tDims = _xData.get("dims")
        else:
            lAmp = _xData
            tDims = None
        # endif

        if not isinstance(lAmp, (list, tuple)):
            raise CSimError_Argument(sArg="amplitudes", xValue=lAmp, sMsg="expect a list of amplitudes")
        # endif

        lValues = []
        for xAmp in lAmp:
            if isinstance(xAmp, (list, tuple)):
                if len(xAmp) != 2:
                    raise CSimError_Argument(sArg="amplitudes", xValue=xAmp, sMsg="expect [re, im] pairs")
                # endif
                lValues.append(complex(float(xAmp[0]), float(xAmp[1])))
            else:
                lValues.append(complex(xAmp))
            # endif
        # endfor

        return CStateVector(lValues, tDims=tDims)

    # enddef


# endclass


################################################################################
class CInputQubit:
    def __init__(self, _c0: complex, _c1: complex):
        self.c0 = complex(_c0)
        self.c1 = complex(_c1)

        fDev = abs(abs(self.c0) ** 2 + abs(self.c1) ** 2 - 1.0)
        if fDev > defines.fNormTol:
            raise CSimError_Contract(sWhat="input qubit is not normalized", fDeviation=fDev)
        # endif

    # enddef

    @staticmethod
    def FromWeight(_fWeight0: float, _fPhase: float = 0.0) -> "CInputQubit":
        # |c0|^2 = weight, relative phase on c1
        fW = min(max(float(_fWeight0), 0.0), 1.0)
        return CInputQubit(math.sqrt(fW), math.sqrt(1.0 - fW) * complex(math.cos(_fPhase), math.sin(_fPhase)))

    # enddef

    @staticmethod
    def Random(_xRng: np.random.Generator) -> "CInputQubit":
        aZ = _xRng.standard_normal(2) + 1j * _xRng.standard_normal(2)
        aZ /= np.linalg.norm(aZ)
        return CInputQubit(aZ[0], aZ[1])

    # enddef

    @property
    def aVec(self) -> np.ndarray:
        return np.array([self.c0, self.c1], dtype=complex)

    # enddef

    @property
    def xState(self) -> CStateVector:
        return CStateVector(self.aVec)

    # enddef

    def ToList(self) -> list:
        return [[self.c0.real, self.c0.imag], [self.c1.real, self.c1.imag]]

    # enddef

    def __repr__(self):
        return "CInputQubit({:.6g}, {:.6g})".format(self.c0, self.c1)

    # enddef


# endclass
