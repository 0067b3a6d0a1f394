#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\core\cls_protocol.py
# Created Date: Thursday, March 7th 2024, 9:41:56 am
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

# Branch engine for teleportation protocols.
#
# A protocol is a register [input qubits | resource qubits], a list of
# measurement stages on disjoint qubit sets, and a correction per outcome on
# the unmeasured (output) qubits. The logical input c0|L0> + c1|L1> is mapped
# linearly, so every outcome o has a branch operator K_o with
# raw post state K_o c. Input averaging is done on these operators.

import itertools
import numpy as np
from dataclasses import dataclass, field
from numpy.polynomial.legendre import leggauss
from typing import Callable, NamedTuple, Optional, Union

from . import defines, qstate
from .cls_state import CStateVector, CStateRaw, CInputQubit
from .cls_density import CDensityOp
from .cls_local_op import CLocalOperator
from .cls_sim_trace import CWarning, CWarningList, EWarningType
from .cls_sim_error import CSimError_Argument, CSimError_Capacity, CSimError_Dimension, CSimError_Invariant


################################################################################
class CMeasureStage(NamedTuple):
    sName: str
    lTargets: list
    # (label tuple, basis state) in lexicographic label order
    lOutcomes: list


# endclass


################################################################################
@dataclass
class CBranchRecord:
    tLabel: tuple
    fProb: float
    sCorrection: str
    fTraceTerm: float
    fFidelity: Optional[float] = None
    xPostState: Optional[CStateVector] = None
    xPostDensity: Optional[CDensityOp] = None
    xRawState: Optional[CStateRaw] = None
    bSuccess: bool = True

    @property
    def sLabel(self) -> str:
        return "".join(str(x) for x in self.tLabel)

    # enddef

    @property
    def bDegenerate(self) -> bool:
        return self.fFidelity is None

    # enddef

    def ToDict(self) -> dict:
        return {
            "label": self.sLabel,
            "p": self.fProb,
            "correction": self.sCorrection,
            "fidelity": self.fFidelity,
            "success": self.bSuccess,
        }

    # enddef


# endclass


################################################################################
@dataclass
class CTeleportReport:
    sProtocol: str
    dicParams: dict
    lBranches: list
    fAvgFidelity: float
    fAvgFidelityTrace: float
    fSuccessProbability: float
    fSuccessFidelity: Optional[float]
    xWarnings: CWarningList = field(default_factory=CWarningList)

    def GetBranch(self, _xLabel) -> CBranchRecord:
        sLabel = _xLabel if isinstance(_xLabel, str) else "".join(str(x) for x in _xLabel)
        for xBranch in self.lBranches:
            if xBranch.sLabel == sLabel:
                return xBranch
            # endif
        # endfor
        raise CSimError_Argument(sArg="label", xValue=_xLabel, sMsg=f"no branch '{sLabel}' in '{self.sProtocol}'")

    # enddef

    def ToDict(self) -> dict:
        return {
            "protocol": self.sProtocol,
            "params": self.dicParams,
            "branches": [x.ToDict() for x in self.lBranches],
            "avg_fidelity": self.fAvgFidelity,
            "avg_fidelity_trace": self.fAvgFidelityTrace,
            "success_probability": self.fSuccessProbability,
            "success_fidelity": self.fSuccessFidelity,
        }

    # enddef


# endclass


################################################################################
def CorrectionMatrix(_sCorrection: str) -> np.ndarray:
    """Matrix of a correction label.

    Letters inside a group multiply as written ("ZX" = Z @ X, X acts first).
    Space separated groups address consecutive output qubits.
    """
    lMats = []
    for sGroup in _sCorrection.split():
        aMat = np.eye(2, dtype=complex)
        for sLetter in sGroup:
            if sLetter not in defines.dicPauli:
                raise CSimError_Argument(sArg="correction", xValue=_sCorrection, sMsg=f"unknown letter '{sLetter}'")
            # endif
            aMat = aMat @ defines.dicPauli[sLetter]
        # endfor
        lMats.append(aMat)
    # endfor
    return qstate.KronAll(lMats)


# enddef


################################################################################
def InputQuadrature(iNodes: int = defines.iQuadNodes, iPhases: int = defines.iQuadPhases) -> tuple:
    """Nodes and weights over input qubits, uniform in |c0|^2 and in the relative phase.

    Gauss-Legendre in |c0|^2, equidistant nodes in the phase. Returns
    (aC, aW) with aC of shape (N, 2) and weights summing to one.
    """
    aX, aWx = leggauss(int(iNodes))
    aU = 0.5 * (aX + 1.0)
    aWu = 0.5 * aWx
    aPhi = 2.0 * np.pi * np.arange(int(iPhases)) / int(iPhases)

    aUU, aPP = np.meshgrid(aU, aPhi, indexing="ij")
    aWW = np.outer(aWu, np.full(int(iPhases), 1.0 / int(iPhases)))

    aC = np.stack([np.sqrt(aUU).reshape(-1), (np.sqrt(1.0 - aUU) * np.exp(1j * aPP)).reshape(-1)], axis=1)
    return aC.astype(complex), aWW.reshape(-1)


# enddef


################################################################################
def InputMonteCarlo(_iSamples: int, _xRng: np.random.Generator) -> tuple:
    # Haar random input qubits with equal weights
    iSamples = int(_iSamples)
    aZ = _xRng.standard_normal((iSamples, 2)) + 1j * _xRng.standard_normal((iSamples, 2))
    aZ /= np.linalg.norm(aZ, axis=1, keepdims=True)
    return aZ, np.full(iSamples, 1.0 / iSamples)


# enddef


################################################################################
def ProbeInputs() -> np.ndarray:
    # the six Pauli eigenstates
    fR = 1.0 / np.sqrt(2.0)
    return np.array(
        [[1.0, 0.0], [0.0, 1.0], [fR, fR], [fR, -fR], [fR, 1j * fR], [fR, -1j * fR]],
        dtype=complex,
    )


# enddef


################################################################################
class CProtocol:
    def __init__(
        self,
        *,
        sName: str,
        aEmbedIn: np.ndarray,
        xResource: Union[CStateVector, CDensityOp],
        lStages: list,
        aEmbedOut: np.ndarray,
        funcCorrection: Callable[[tuple], str],
        funcSuccess: Optional[Callable[[tuple], bool]] = None,
        dicParams: Optional[dict] = None,
    ):
        self.sName = sName
        self.aEmbedIn = np.array(aEmbedIn, dtype=complex)
        self.aEmbedOut = np.array(aEmbedOut, dtype=complex)
        self.xResource = xResource
        self.lStages: list[CMeasureStage] = list(lStages)
        self.funcCorrection = funcCorrection
        self.funcSuccess = funcSuccess
        self.dicParams = dict(dicParams) if dicParams is not None else {}

        iIn = int(round(np.log2(self.aEmbedIn.shape[0])))
        if self.aEmbedIn.shape != (2**iIn, 2):
            raise CSimError_Dimension(sContext="Input embedding", xExpected="(2^k, 2)", xGiven=self.aEmbedIn.shape)
        # endif
        self.iInputCnt = iIn
        self.iQubitCnt = iIn + xResource.iQubitCnt

        if self.iQubitCnt > defines.iQubitCap:
            raise CSimError_Capacity(iQubitCnt=self.iQubitCnt, iQubitCap=defines.iQubitCap)
        # endif

        lMeasured = [i for xStage in self.lStages for i in xStage.lTargets]
        if len(set(lMeasured)) != len(lMeasured) or any(i < 0 or i >= self.iQubitCnt for i in lMeasured):
            raise CSimError_Argument(sArg="stages", xValue=lMeasured, sMsg="stage targets must be disjoint and valid")
        # endif

        self.lOutputQubits = [i for i in range(self.iQubitCnt) if i not in lMeasured]
        if self.aEmbedOut.shape != (2 ** len(self.lOutputQubits), 2):
            raise CSimError_Dimension(
                sContext="Output embedding", xExpected=(2 ** len(self.lOutputQubits), 2), xGiven=self.aEmbedOut.shape
            )
        # endif

        self.lResourceQubits = list(range(iIn, self.iQubitCnt))
        self._lBranchOps: Optional[list] = None
        self._dicCorrMats: dict = {}

    # enddef

    ################################################################################
    @property
    def bMixed(self) -> bool:
        return isinstance(self.xResource, CDensityOp)

    # enddef

    ################################################################################
    def WithResource(self, _xResource: Union[CStateVector, CDensityOp]) -> "CProtocol":
        if _xResource.tDims != self.xResource.tDims:
            raise CSimError_Dimension(
                sContext="Resource state", xExpected=self.xResource.tDims, xGiven=_xResource.tDims
            )
        # endif
        return CProtocol(
            sName=self.sName,
            aEmbedIn=self.aEmbedIn,
            xResource=_xResource,
            lStages=self.lStages,
            aEmbedOut=self.aEmbedOut,
            funcCorrection=self.funcCorrection,
            funcSuccess=self.funcSuccess,
            dicParams=self.dicParams,
        )

    # enddef

    ################################################################################
    def ResourceDensity(self) -> CDensityOp:
        if self.bMixed:
            return self.xResource
        # endif
        return qstate.DensityFromState(self.xResource)

    # enddef

    ################################################################################
    def IsSuccess(self, _tLabel: tuple) -> bool:
        if self.funcSuccess is None:
            return True
        # endif
        return bool(self.funcSuccess(_tLabel))

    # enddef

    ################################################################################
    def CorrectionOf(self, _tLabel: tuple) -> np.ndarray:
        sCorr = self.funcCorrection(_tLabel)
        aMat = self._dicCorrMats.get(sCorr)
        if aMat is None:
            aMat = CorrectionMatrix(sCorr)
            if aMat.shape[0] != self.aEmbedOut.shape[0]:
                raise CSimError_Dimension(
                    sContext=f"Correction '{sCorr}'", xExpected=self.aEmbedOut.shape[0], xGiven=aMat.shape[0]
                )
            # endif
            self._dicCorrMats[sCorr] = aMat
        # endif
        return aMat

    # enddef

    ################################################################################
    def InputState(self, _xInput: CInputQubit) -> CStateVector:
        return CStateVector(self.aEmbedIn @ _xInput.aVec)

    # enddef

    ################################################################################
    def TargetState(self, _xInput: CInputQubit) -> CStateVector:
        return CStateVector(self.aEmbedOut @ _xInput.aVec)

    # enddef

    ################################################################################
    def _EnumerateRaw(self, _xState: CStateRaw, _iStage: int, _lRemaining: list, _tPrefix: tuple):
        if _iStage == len(self.lStages):
            yield _tPrefix, _xState
            return
        # endif

        xStage = self.lStages[_iStage]
        lLocal = [_lRemaining.index(i) for i in xStage.lTargets]
        lNext = [i for i in _lRemaining if i not in xStage.lTargets]
        for tLabel, xBasis in xStage.lOutcomes:
            xRaw = qstate.ProjectRaw(_xState, xBasis, lLocal)
            yield from self._EnumerateRaw(xRaw, _iStage + 1, lNext, _tPrefix + tuple(tLabel))
        # endfor

    # enddef

    ################################################################################
    def _EnumerateOperator(self, _aMat: np.ndarray, _tDims: tuple, _iStage: int, _lRemaining: list, _tPrefix: tuple):
        if _iStage == len(self.lStages):
            yield _tPrefix, _aMat
            return
        # endif

        xStage = self.lStages[_iStage]
        lLocal = [_lRemaining.index(i) for i in xStage.lTargets]
        lNext = [i for i in _lRemaining if i not in xStage.lTargets]
        for tLabel, xBasis in xStage.lOutcomes:
            aRaw, tRest = qstate.ProjectOperatorRaw(_aMat, _tDims, xBasis, lLocal)
            yield from self._EnumerateOperator(aRaw, tRest, _iStage + 1, lNext, _tPrefix + tuple(tLabel))
        # endfor

    # enddef

    ################################################################################
    def EnumerateBranches(self, _xState: CStateRaw):
        # raw post states on the output qubits in lexicographic outcome order
        return self._EnumerateRaw(_xState, 0, list(range(self.iQubitCnt)), ())

    # enddef

    ################################################################################
    def BranchOperators(self) -> list:
        """List of (label, K) with K of shape (dim_out, 2); pure resource only."""
        if self.bMixed:
            raise CSimError_Argument(sArg="resource", xValue="density", sMsg="branch operators need a pure resource")
        # endif

        if self._lBranchOps is None:
            lCols = []
            for iK in range(2):
                xLogical = CStateRaw(self.aEmbedIn[:, iK])
                xFull = qstate.Tensor(xLogical, self.xResource)
                lCols.append(list(self.EnumerateBranches(xFull)))
            # endfor

            self._lBranchOps = [
                (tLabel, np.stack([xRaw0.aAmp, xRaw1.aAmp], axis=1))
                for (tLabel, xRaw0), (_, xRaw1) in zip(lCols[0], lCols[1])
            ]
        # endif
        return self._lBranchOps

    # enddef

    ################################################################################
    def BranchSuperOperators(self) -> list:
        """List of (label, M) with M[k, l] the projected |L_k><L_l| x rho_res on the output qubits."""
        rhoRes = self.ResourceDensity()
        tDims = (2,) * self.iInputCnt + rhoRes.tDims

        lPerInput = {}
        for iK in range(2):
            for iL in range(2):
                aIn = np.outer(self.aEmbedIn[:, iK], self.aEmbedIn[:, iL].conj())
                aFull = np.kron(aIn, rhoRes.aMat)
                lPerInput[(iK, iL)] = list(self._EnumerateOperator(aFull, tDims, 0, list(range(self.iQubitCnt)), ()))
            # endfor
        # endfor

        lResult = []
        for iIdx, (tLabel, _) in enumerate(lPerInput[(0, 0)]):
            iOut = lPerInput[(0, 0)][iIdx][1].shape[0]
            aM = np.zeros((2, 2, iOut, iOut), dtype=complex)
            for (iK, iL), lBranches in lPerInput.items():
                aM[iK, iL] = lBranches[iIdx][1]
            # endfor
            lResult.append((tLabel, aM))
        # endfor
        return lResult

    # enddef

    ################################################################################
    def _Record(
        self, _tLabel, _fProb, _fTrace, _xPost, _xPostDensity, _xRaw, _xWarnings: CWarningList
    ) -> CBranchRecord:
        sCorr = self.funcCorrection(_tLabel)
        bSuccess = self.IsSuccess(_tLabel)
        if _fProb < defines.fZeroProbTol:
            _xWarnings.Add(
                CWarning(
                    _eType=EWarningType.DEGENERATE_BRANCH,
                    _sKey=f"{self.sName}:{''.join(str(x) for x in _tLabel)}",
                    _sShortCtx=f"p = {_fProb:.3e}",
                )
            )
            return CBranchRecord(
                tLabel=_tLabel, fProb=max(_fProb, 0.0), sCorrection=sCorr, fTraceTerm=_fTrace, xRawState=_xRaw,
                bSuccess=bSuccess,
            )
        # endif

        return CBranchRecord(
            tLabel=_tLabel,
            fProb=_fProb,
            sCorrection=sCorr,
            fTraceTerm=_fTrace,
            fFidelity=min(max(_fTrace / _fProb, 0.0), 1.0),
            xPostState=_xPost,
            xPostDensity=_xPostDensity,
            xRawState=_xRaw,
            bSuccess=bSuccess,
        )

    # enddef

    ################################################################################
    def _RunOperators(self, _xInput: CInputQubit, _xWarnings: CWarningList) -> list:
        aC = _xInput.aVec
        aT = self.aEmbedOut @ aC
        lRecords = []
        for tLabel, aK in self.BranchOperators():
            aRaw = aK @ aC
            fProb = float(np.vdot(aRaw, aRaw).real)
            aCorr = self.CorrectionOf(tLabel) @ aRaw
            fTrace = float(abs(np.vdot(aT, aCorr)) ** 2)

            xPost = None
            if fProb >= defines.fZeroProbTol:
                xPost = CStateVector(aCorr / np.sqrt(fProb))
            # endif
            xRecord = self._Record(tLabel, fProb, fTrace, None, None, CStateRaw(aRaw), _xWarnings)
            if xPost is not None:
                xRecord.xPostState = xPost
            # endif
            lRecords.append(xRecord)
        # endfor
        return lRecords

    # enddef

    ################################################################################
    def _RunDirect(self, _xInput: CInputQubit, _xWarnings: CWarningList) -> list:
        xFull = qstate.Tensor(self.InputState(_xInput), self.xResource)
        xTarget = self.TargetState(_xInput)
        lOutLocal = list(range(len(self.lOutputQubits)))

        lRecords = []
        for tLabel, xRaw in self.EnumerateBranches(xFull):
            fProb = xRaw.fNormSq
            if fProb < defines.fZeroProbTol:
                lRecords.append(self._Record(tLabel, fProb, 0.0, None, None, xRaw, _xWarnings))
                continue
            # endif

            xOp = CLocalOperator(self.CorrectionOf(tLabel), lOutLocal, sLabel=self.funcCorrection(tLabel))
            xPost = qstate.ApplyLocal(xOp, xRaw.Normalized())
            fFid = qstate.FidelityPure(qstate.DensityFromState(xPost), xTarget)
            xRecord = self._Record(tLabel, fProb, fProb * fFid, None, None, xRaw, _xWarnings)
            xRecord.xPostState = xPost
            xRecord.fFidelity = fFid
            lRecords.append(xRecord)
        # endfor
        return lRecords

    # enddef

    ################################################################################
    def _RunMixed(self, _xInput: CInputQubit, _xWarnings: CWarningList) -> list:
        rhoIn = qstate.DensityFromState(self.InputState(_xInput))
        rhoFull = qstate.TensorDensity(rhoIn, self.ResourceDensity())
        xTarget = self.TargetState(_xInput)
        lOutLocal = list(range(len(self.lOutputQubits)))

        lRecords = []
        for tLabel, aRaw in self._EnumerateOperator(rhoFull.aMat, rhoFull.tDims, 0, list(range(self.iQubitCnt)), ()):
            fProb = float(np.trace(aRaw).real)
            if fProb < defines.fZeroProbTol:
                lRecords.append(self._Record(tLabel, fProb, 0.0, None, None, None, _xWarnings))
                continue
            # endif

            aCorr = self.CorrectionOf(tLabel)
            aPost = aCorr @ aRaw @ aCorr.conj().T
            fTrace = float(np.vdot(xTarget.aAmp, aPost @ xTarget.aAmp).real)
            rhoPost = CDensityOp(aPost / fProb, bCheck=False)
            xRecord = self._Record(tLabel, fProb, fTrace, None, rhoPost, None, _xWarnings)
            xRecord.fFidelity = qstate.FidelityPure(rhoPost, xTarget)
            lRecords.append(xRecord)
        # endfor
        return lRecords

    # enddef

    ################################################################################
    def Run(self, _xInput: CInputQubit, *, bDirect: bool = False) -> CTeleportReport:
        """Enumerate all outcome branches for one input.

        bDirect runs the state vector enumeration on the full register instead
        of the branch operators. A mixed resource always uses the density path.
        """
        xWarnings = CWarningList()
        if self.bMixed:
            lRecords = self._RunMixed(_xInput, xWarnings)
        elif bDirect is True:
            lRecords = self._RunDirect(_xInput, xWarnings)
        else:
            lRecords = self._RunOperators(_xInput, xWarnings)
        # endif

        fProbSum = sum(x.fProb for x in lRecords)
        if abs(fProbSum - 1.0) > defines.fNormTol:
            raise CSimError_Invariant(
                sInvariant="branch-completeness", sWhere=self.sName, xValue=f"sum of probabilities {fProbSum:.15g}"
            )
        # endif

        fAvg = sum(x.fProb * x.fFidelity for x in lRecords if x.fFidelity is not None)
        fAvgTrace = sum(x.fTraceTerm for x in lRecords)
        if abs(fAvg - fAvgTrace) > defines.fNormTol:
            raise CSimError_Invariant(
                sInvariant="fidelity-accounting", sWhere=self.sName, xValue=f"{fAvg:.15g} != {fAvgTrace:.15g}"
            )
        # endif

        fSuccess = sum(x.fProb for x in lRecords if x.bSuccess)
        fSuccessFid = None
        if fSuccess >= defines.fZeroProbTol:
            fSuccessFid = (
                sum(x.fProb * x.fFidelity for x in lRecords if x.bSuccess and x.fFidelity is not None) / fSuccess
            )
        # endif

        return CTeleportReport(
            sProtocol=self.sName,
            dicParams=dict(self.dicParams),
            lBranches=lRecords,
            fAvgFidelity=min(max(fAvg, 0.0), 1.0),
            fAvgFidelityTrace=min(max(fAvgTrace, 0.0), 1.0),
            fSuccessProbability=min(max(fSuccess, 0.0), 1.0),
            fSuccessFidelity=None if fSuccessFid is None else min(max(fSuccessFid, 0.0), 1.0),
            xWarnings=xWarnings,
        )

    # enddef

    ################################################################################
    def BranchFidelitySums(self, _aC: np.ndarray) -> np.ndarray:
        """Per input node c: sum over outcomes of Tr(rho_in rho~_f) after correction."""
        aC = np.asarray(_aC, dtype=complex)

        if not self.bMixed:
            aValues = np.zeros(aC.shape[0])
            for tLabel, aK in self.BranchOperators():
                aG = self.aEmbedOut.conj().T @ self.CorrectionOf(tLabel) @ aK
                aAmp = np.einsum("na,ab,nb->n", aC.conj(), aG, aC)
                aValues += np.abs(aAmp) ** 2
            # endfor
            return aValues
        # endif

        # B[k, l] = E^dagger U M[k, l] U^dagger E summed over outcomes
        aB = np.zeros((2, 2, 2, 2), dtype=complex)
        for tLabel, aM in self.BranchSuperOperators():
            aU = self.CorrectionOf(tLabel)
            aUE = aU.conj().T @ self.aEmbedOut
            aB += np.einsum("ia,klij,jb->klab", aUE.conj(), aM, aUE)
        # endfor
        aValues = np.einsum("nk,nl,na,nb,klab->n", aC, aC.conj(), aC.conj(), aC, aB)
        return aValues.real

    # enddef

    ################################################################################
    def AverageFidelity(self, *, iNodes: int = defines.iQuadNodes, iPhases: int = defines.iQuadPhases,
                        iSamples: int = 0, xRng: Optional[np.random.Generator] = None) -> float:
        """Input averaged fidelity, by quadrature or by Haar random inputs when iSamples > 0."""
        if iSamples > 0:
            if xRng is None:
                raise CSimError_Argument(sArg="rng", xValue=None, sMsg="Monte-Carlo inputs need a generator")
            # endif
            aC, aW = InputMonteCarlo(iSamples, xRng)
        else:
            aC, aW = InputQuadrature(iNodes, iPhases)
        # endif
        return float(np.dot(aW, self.BranchFidelitySums(aC)))

    # enddef


# endclass


################################################################################
def SearchCorrections(_xProtocol: CProtocol, *, lAlphabet: Optional[list] = None) -> dict:
    """Per outcome, the Pauli product maximizing the worst-case fidelity over the probe inputs.

    Candidates are ordered by the number of non-identity letters, then by
    alphabet order; a later candidate wins only if strictly better.
    Outcomes without probability on any probe get the identity.
    """
    lAlpha = defines.lCorrectionAlphabet if lAlphabet is None else list(lAlphabet)
    iOut = len(_xProtocol.lOutputQubits)

    lCands = sorted(
        itertools.product(range(len(lAlpha)), repeat=iOut),
        key=lambda t: (sum(1 for i in t if lAlpha[i] != "I"), t),
    )
    lLabels = [" ".join(lAlpha[i] for i in t) for t in lCands]
    aMats = np.stack([CorrectionMatrix(s) for s in lLabels])

    aProbe = ProbeInputs()
    aTarget = aProbe @ _xProtocol.aEmbedOut.T
    sIdentity = " ".join(["I"] * iOut)

    dicResult = {}
    for tLabel, aK in _xProtocol.BranchOperators():
        aRaw = aProbe @ aK.T
        aNorm = np.sum(np.abs(aRaw) ** 2, axis=1)
        aValid = aNorm >= defines.fZeroProbTol
        if not np.any(aValid):
            dicResult[tLabel] = sIdentity
            continue
        # endif

        aOverlap = np.einsum("pi,cij,pj->cp", aTarget[aValid].conj(), aMats, aRaw[aValid])
        aFid = np.abs(aOverlap) ** 2 / aNorm[aValid][np.newaxis, :]
        aWorst = np.min(aFid, axis=1)

        iBest = 0
        for iIdx in range(1, len(lCands)):
            if aWorst[iIdx] > aWorst[iBest] + defines.fAlgebraTol:
                iBest = iIdx
            # endif
        # endfor
        dicResult[tLabel] = lLabels[iBest]
    # endfor

    return dicResult


# enddef
