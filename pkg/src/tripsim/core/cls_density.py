#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\core\cls_density.py
# Created Date: Monday, March 4th 2024, 11:15:44 am
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
from .cls_sim_error import CSimError_Contract, CSimError_Dimension


class CDensityOp:
    """Hermitian, positive semidefinite, trace-one operator.

    Checks run at construction with tolerance 1e-9: entrywise hermiticity,
    unit trace and eigenvalues not below -1e-9.
    """

    def __init__(self, _aMat, *, tDims: Optional[Sequence[int]] = None, bCheck: bool = True):
        aMat = np.array(_aMat, dtype=complex)
        if aMat.ndim != 2 or aMat.shape[0] != aMat.shape[1]:
            raise CSimError_Dimension(sContext="Density operator", xExpected="square matrix", xGiven=aMat.shape)
        # endif

        iDim = aMat.shape[0]
        if tDims is None:
            iCnt = int(round(math.log2(iDim))) if iDim > 0 else 0
            if 2**iCnt != iDim:
                raise CSimError_Dimension(sContext="Density operator", xExpected="a power of two", xGiven=iDim)
            # endif
            tDims = (2,) * iCnt
        else:
            tDims = tuple(int(x) for x in tDims)
            if int(np.prod(tDims, dtype=np.int64)) != iDim:
                raise CSimError_Dimension(sContext="Density operator", xExpected=int(np.prod(tDims)), xGiven=iDim)
            # endif
        # endif

        if bCheck is True:
            fHerm = float(np.max(np.abs(aMat - aMat.conj().T))) if iDim > 0 else 0.0
            if fHerm > defines.fNormTol:
                raise CSimError_Contract(sWhat="density operator is not Hermitian", fDeviation=fHerm)
            # endif

            fTrace = abs(np.trace(aMat) - 1.0)
            if fTrace > defines.fNormTol:
                raise CSimError_Contract(sWhat="density operator trace is not one", fDeviation=fTrace)
            # endif

            fMinEig = float(np.min(np.linalg.eigvalsh(0.5 * (aMat + aMat.conj().T))))
            if fMinEig < -defines.fNormTol:
                raise CSimError_Contract(sWhat="density operator is not positive semidefinite", fDeviation=fMinEig)
            # endif
        # endif

        aMat.setflags(write=False)
        self._aMat: np.ndarray = aMat
        self._tDims: tuple = tDims

    # enddef

    @property
    def aMat(self) -> np.ndarray:
        return self._aMat

    # enddef

    @property
    def tDims(self) -> tuple:
        return self._tDims

    # enddef

    @property
    def iDim(self) -> int:
        return self._aMat.shape[0]

    # enddef

    @property
    def iQubitCnt(self) -> int:
        return len(self._tDims)

    # enddef

    def AsTensor(self) -> np.ndarray:
        return self._aMat.reshape(self._tDims + self._tDims)

    # enddef

    @staticmethod
    def MaximallyMixed(_tDims: Sequence[int]) -> "CDensityOp":
        iDim = int(np.prod(tuple(_tDims), dtype=np.int64))
        return CDensityOp(np.eye(iDim, dtype=complex) / iDim, tDims=_tDims)

    # enddef

    def ToList(self) -> list:
        return [[[float(x.real), float(x.imag)] for x in aRow] for aRow in self._aMat]

    # enddef

    def __repr__(self):
        return "CDensityOp(dims={})\n{}".format(self._tDims, np.array2string(self._aMat, precision=4))

    # enddef


# endclass
