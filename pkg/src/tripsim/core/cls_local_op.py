#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\core\cls_local_op.py
# Created Date: Monday, March 4th 2024, 11:48:20 am
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

import numpy as np
from typing import Optional, Sequence

from . import defines
from .cls_sim_error import CSimError_Contract, CSimError_Dimension, CSimError_Index, CSimError_Argument


class CLocalOperator:
    def __init__(
        self,
        _aMat,
        _lTargets: Sequence[int],
        *,
        bUnitary: bool = True,
        sLabel: Optional[str] = None,
        tDims: Optional[Sequence[int]] = None,
    ):
        aMat = np.array(_aMat, dtype=complex)
        lTargets = [int(x) for x in _lTargets]

        if len(set(lTargets)) != len(lTargets) or any(x < 0 for x in lTargets):
            raise CSimError_Index(lTargets=lTargets, iQubitCnt=-1, sContext="Operator targets")
        # endif

        if tDims is None:
            tDims = (2,) * len(lTargets)
        else:
            tDims = tuple(int(x) for x in tDims)
            if len(tDims) != len(lTargets):
                raise CSimError_Argument(sArg="tDims", xValue=tDims, sMsg="one local dimension per target expected")
            # endif
        # endif

        iDim = int(np.prod(tDims, dtype=np.int64))
        if aMat.shape != (iDim, iDim):
            raise CSimError_Dimension(sContext="Local operator matrix", xExpected=(iDim, iDim), xGiven=aMat.shape)
        # endif

        if bUnitary is True:
            fDev = float(np.max(np.abs(aMat.conj().T @ aMat - np.eye(iDim))))
            if fDev > defines.fNormTol:
                raise CSimError_Contract(sWhat="operator flagged unitary is not unitary", fDeviation=fDev)
            # endif
        # endif

        aMat.setflags(write=False)
        self._aMat = aMat
        self._lTargets = tuple(lTargets)
        self._tDims = tDims
        self.bUnitary = bUnitary
        self.sLabel = sLabel

    # enddef

    @property
    def aMat(self) -> np.ndarray:
        return self._aMat

    # enddef

    @property
    def lTargets(self) -> tuple:
        return self._lTargets

    # enddef

    @property
    def tDims(self) -> tuple:
        return self._tDims

    # enddef

    def Retarget(self, _lTargets: Sequence[int]) -> "CLocalOperator":
        return CLocalOperator(self._aMat, _lTargets, bUnitary=False, sLabel=self.sLabel, tDims=self._tDims)

    # enddef

    @staticmethod
    def Pauli(_sLetters: str, _lTargets: Sequence[int]) -> "CLocalOperator":
        # tensor product of single qubit Pauli letters, one per target
        if len(_sLetters) != len(_lTargets):
            raise CSimError_Argument(sArg="letters", xValue=_sLetters, sMsg="one letter per target expected")
        # endif

        aMat = np.ones((1, 1), dtype=complex)
        for sLetter in _sLetters:
            if sLetter not in defines.dicPauli:
                raise CSimError_Argument(sArg="letters", xValue=_sLetters, sMsg=f"unknown Pauli letter '{sLetter}'")
            # endif
            aMat = np.kron(aMat, defines.dicPauli[sLetter])
        # endfor

        return CLocalOperator(aMat, _lTargets, sLabel=_sLetters)

    # enddef

    def __repr__(self):
        return "CLocalOperator(label={}, targets={})".format(self.sLabel, list(self._lTargets))

    # enddef


# endclass
