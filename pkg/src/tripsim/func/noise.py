#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\func\noise.py
# Created Date: Tuesday, March 12th 2024, 4:52:31 pm
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

# Kraus noise on resource qubits and fidelity-versus-noise sweeps.

import math
import numpy as np
from typing import Optional, Sequence, Union

from ..core import defines, qstate
from ..core.cls_density import CDensityOp
from ..core.cls_local_op import CLocalOperator
from ..core.cls_protocol import CProtocol, InputQuadrature, InputMonteCarlo
from ..core.cls_sim_error import CSimError_Argument, CSimError_Contract, CSimError_Index
from ..util import convert, text
from . import teleport

lChannelKinds = ["bitflip", "phaseflip", "depolarizing", "amplitude-damping"]


################################################################################
def KrausCompletenessError(_lKraus: Sequence[np.ndarray]) -> float:
    # max entrywise deviation of sum K^dagger K from the identity
    if len(_lKraus) == 0:
        return math.inf
    # endif
    iDim = np.asarray(_lKraus[0]).shape[0]
    aSum = np.zeros((iDim, iDim), dtype=complex)
    for aK in _lKraus:
        aK = np.asarray(aK, dtype=complex)
        aSum += aK.conj().T @ aK
    # endfor
    return float(np.max(np.abs(aSum - np.eye(iDim))))


# enddef


################################################################################
class CKrausChannel:
    def __init__(self, _sKind: str, _fParam: Optional[float], _lKraus: Sequence[np.ndarray]):
        lKraus = [np.array(x, dtype=complex) for x in _lKraus]
        if any(x.shape != (2, 2) for x in lKraus):
            raise CSimError_Argument(
                sArg="kraus", xValue=[x.shape for x in lKraus], sMsg="expect single-qubit operators"
            )
        # endif

        fDev = KrausCompletenessError(lKraus)
        if fDev > defines.fAlgebraTol:
            raise CSimError_Contract(sWhat=f"Kraus set '{_sKind}' is not complete", fDeviation=fDev)
        # endif

        for aK in lKraus:
            aK.setflags(write=False)
        # endfor
        self.sKind = _sKind
        self.fParam = _fParam
        self.lKraus = lKraus

    # enddef

    @staticmethod
    def _CheckParam(_fParam: float, _sKind: str) -> float:
        fParam = float(_fParam)
        if fParam < 0.0 or fParam > 1.0:
            raise CSimError_Argument(sArg=_sKind, xValue=fParam, sMsg="channel parameter outside [0, 1]")
        # endif
        return fParam

    # enddef

    @staticmethod
    def BitFlip(_fP: float) -> "CKrausChannel":
        fP = CKrausChannel._CheckParam(_fP, "bitflip")
        return CKrausChannel("bitflip", fP, [math.sqrt(1.0 - fP) * defines.aPauliI, math.sqrt(fP) * defines.aPauliX])

    # enddef

    @staticmethod
    def PhaseFlip(_fP: float) -> "CKrausChannel":
        fP = CKrausChannel._CheckParam(_fP, "phaseflip")
        return CKrausChannel("phaseflip", fP, [math.sqrt(1.0 - fP) * defines.aPauliI, math.sqrt(fP) * defines.aPauliZ])

    # enddef

    @staticmethod
    def Depolarizing(_fP: float) -> "CKrausChannel":
        fP = CKrausChannel._CheckParam(_fP, "depolarizing")
        fR = math.sqrt(fP / 4.0)
        return CKrausChannel(
            "depolarizing",
            fP,
            [
                math.sqrt(max(0.0, 1.0 - 3.0 * fP / 4.0)) * defines.aPauliI,
                fR * defines.aPauliX,
                fR * defines.aPauliY,
                fR * defines.aPauliZ,
            ],
        )

    # enddef

    @staticmethod
    def AmplitudeDamping(_fGamma: float) -> "CKrausChannel":
        fG = CKrausChannel._CheckParam(_fGamma, "amplitude-damping")
        return CKrausChannel(
            "amplitude-damping",
            fG,
            [np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - fG)]]), np.array([[0.0, math.sqrt(fG)], [0.0, 0.0]])],
        )

    # enddef

    @staticmethod
    def FromName(_sKind: str, _fParam: float) -> "CKrausChannel":
        dicMake = {
            "bitflip": CKrausChannel.BitFlip,
            "phaseflip": CKrausChannel.PhaseFlip,
            "depolarizing": CKrausChannel.Depolarizing,
            "amplitude-damping": CKrausChannel.AmplitudeDamping,
        }
        sKind = str(_sKind).lower()
        if sKind not in dicMake:
            raise CSimError_Argument(sArg="channel", xValue=_sKind, sMsg=f"expect one of {', '.join(lChannelKinds)}")
        # endif
        return dicMake[sKind](_fParam)

    # enddef

    @staticmethod
    def FromKraus(_lKraus: Sequence[np.ndarray], _sKind: str = "custom") -> "CKrausChannel":
        return CKrausChannel(_sKind, None, _lKraus)

    # enddef

    def __repr__(self):
        return f"CKrausChannel({self.sKind}, {self.fParam})"

    # enddef


# endclass


################################################################################
def ComposeChannels(_xFirst: CKrausChannel, _xSecond: CKrausChannel) -> CKrausChannel:
    # _xFirst acts first
    lKraus = [aB @ aA for aA in _xFirst.lKraus for aB in _xSecond.lKraus]
    return CKrausChannel.FromKraus(lKraus, f"{_xSecond.sKind}*{_xFirst.sKind}")


# enddef


################################################################################
def ApplyChannel(_rho: CDensityOp, _xChannel: CKrausChannel, _xTarget: Union[int, Sequence[int]]) -> CDensityOp:
    """Sum of K rho K^dagger on a qubit; a list of targets applies the channel to each of them."""
    lTargets = [int(_xTarget)] if isinstance(_xTarget, (int, np.integer)) else [int(x) for x in _xTarget]
    if len(set(lTargets)) != len(lTargets) or any(x < 0 or x >= _rho.iQubitCnt for x in lTargets):
        raise CSimError_Index(lTargets=lTargets, iQubitCnt=_rho.iQubitCnt, sContext="Channel targets")
    # endif

    aMat = _rho.aMat
    for iTarget in lTargets:
        aOut = np.zeros_like(aMat)
        for aK in _xChannel.lKraus:
            xOp = CLocalOperator(aK, [iTarget], bUnitary=False)
            aOut += qstate.ApplyLocalMatrix(aMat, _rho.tDims, xOp)
        # endfor
        aMat = aOut
    # endfor

    return CDensityOp(0.5 * (aMat + aMat.conj().T), tDims=_rho.tDims)


# enddef


################################################################################
def ResolveTargets(_xProtocol: CProtocol, _xTarget) -> list:
    """Register indices of the noisy qubits; they must belong to the resource state."""
    if isinstance(_xTarget, str):
        sTarget = _xTarget.strip().lower()
        if sTarget == "all":
            return list(_xProtocol.lResourceQubits)
        # endif
        lTargets = [convert.ToInt(x) for x in text.SplitArgs(sTarget)]
    elif isinstance(_xTarget, (int, np.integer)):
        lTargets = [int(_xTarget)]
    else:
        lTargets = [convert.ToInt(x) for x in _xTarget]
    # endif

    lBad = [x for x in lTargets if x not in _xProtocol.lResourceQubits]
    if len(lTargets) == 0 or len(lBad) > 0:
        raise CSimError_Argument(
            sArg="target",
            xValue=_xTarget,
            sMsg=f"'{_xProtocol.sName}' resource qubits are {_xProtocol.lResourceQubits}",
        )
    # endif
    return lTargets


# enddef


################################################################################
def NoisyResource(_xProtocol: CProtocol, _xChannel: CKrausChannel, _lTargets: list) -> CDensityOp:
    # channel on the prepared resource, before any measurement
    iOffset = _xProtocol.iInputCnt
    return ApplyChannel(_xProtocol.ResourceDensity(), _xChannel, [x - iOffset for x in _lTargets])


# enddef


################################################################################
def NoisyTeleportSweep(
    _sProtocol: str,
    _sChannel: str,
    _xTarget,
    _aGrid: Sequence[float],
    *,
    iInputSamples: int = 0,
    xRng: Optional[np.random.Generator] = None,
    dicParams: Optional[dict] = None,
    iNodes: int = defines.iQuadNodes,
    iPhases: int = defines.iQuadPhases,
) -> list:
    """(p, input averaged fidelity) for each channel parameter on the grid.

    Inputs are the quadrature nodes, or iInputSamples Haar random qubits drawn
    once from xRng and reused for every grid point.
    """
    xProtocol = teleport.BuildProtocol(_sProtocol, dicParams or {}, bNormalize=True)
    lTargets = ResolveTargets(xProtocol, _xTarget)

    if iInputSamples > 0:
        if xRng is None:
            raise CSimError_Argument(sArg="rng", xValue=None, sMsg="Monte-Carlo inputs need a generator")
        # endif
        aC, aW = InputMonteCarlo(iInputSamples, xRng)
    else:
        aC, aW = InputQuadrature(iNodes, iPhases)
    # endif

    lRows = []
    for fP in _aGrid:
        xChannel = CKrausChannel.FromName(_sChannel, float(fP))
        xNoisy = xProtocol.WithResource(NoisyResource(xProtocol, xChannel, lTargets))
        fF = float(np.dot(aW, xNoisy.BranchFidelitySums(aC)))
        lRows.append((float(fP), min(max(fF, 0.0), 1.0)))
    # endfor
    return lRows


# enddef


################################################################################
def ExpNoiseSweep(_xRunner, _dicParams: dict, *, sFuncName: str) -> dict:
    sProtocol = str(_dicParams["protocol"]).lower()
    sChannel = str(_dicParams["channel"]).lower()
    aGrid = text.ParseGrid(_dicParams["grid"])
    iSamples = convert.ToInt(_dicParams["input_samples"])

    lRows = NoisyTeleportSweep(
        sProtocol,
        sChannel,
        _dicParams["target"],
        aGrid,
        iInputSamples=iSamples,
        xRng=_xRunner.GetRng() if iSamples > 0 else None,
        dicParams=_dicParams,
    )
    _xRunner.LogString(f"Noise sweep '{sProtocol}' / '{sChannel}': {len(lRows)} grid points")

    return {
        "protocol": sProtocol,
        "channel": sChannel,
        "target": str(_dicParams["target"]),
        "input_samples": iSamples,
        "rows": [{"p": fP, "avg_fidelity": fF} for fP, fF in lRows],
    }


# enddef


################################################################################
def TableNoiseSweep(_dicResult: dict) -> tuple:
    return ["p", "avg_fidelity"], [[x["p"], x["avg_fidelity"]] for x in _dicResult["rows"]]


# enddef


__tripsim_functions__ = {
    "noise-sweep": {
        "funcExec": ExpNoiseSweep,
        "funcTable": TableNoiseSweep,
        "dicDefaults": {
            "protocol": "ghz-meas",
            "channel": "bitflip",
            "target": "3",
            "grid": "0:1:0.05",
            "input_samples": 0,
            "bob_theta": "pi/4",
            "theta_channel": "pi/4",
            "theta_meas": "pi/4",
            "theta1": "pi/4",
            "theta2": "pi/4",
            "theta3": "pi/4",
            "a": None,
            "b": None,
            "c": None,
        },
    },
}
