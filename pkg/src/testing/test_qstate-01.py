#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /testing/test_qstate-01.py
# Created Date: Monday, March 4th 2024, 4:12:19 pm
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
import pytest
import numpy as np
from numpy.testing import assert_allclose

from tripsim.core import qstate, defines
from tripsim.core.cls_state import CStateVector, CStateRaw, CInputQubit
from tripsim.core.cls_density import CDensityOp
from tripsim.core.cls_local_op import CLocalOperator
from tripsim.core.cls_sim_error import (
    CSimError_Argument,
    CSimError_Capacity,
    CSimError_Contract,
    CSimError_Index,
)
from tripsim.func import bases


def _RandomState(_iQubits: int, _xRng: np.random.Generator) -> CStateVector:
    aZ = _xRng.standard_normal(2**_iQubits) + 1j * _xRng.standard_normal(2**_iQubits)
    return CStateVector(aZ / np.linalg.norm(aZ))


# enddef


class TestClass:

    ################################################################################
    def test_tensor_01(self):
        xState = qstate.Tensor(CStateVector.Basis("0"), CStateVector.Basis("1"))
        assert_allclose(xState.aAmp, [0, 1, 0, 0])
        assert xState.iQubitCnt == 2

    # enddef

    ################################################################################
    def test_tensor_02(self):
        xInput = CInputQubit(0.6, 0.8j)
        xFull = qstate.Tensor(xInput.xState, bases.GhzBasis(math.pi / 4, 0, 0, 0))

        assert xFull.aAmp.size == 16
        assert sorted(np.flatnonzero(np.abs(xFull.aAmp) > 1e-15).tolist()) == [0b0000, 0b0111, 0b1000, 0b1111]

    # enddef

    ################################################################################
    def test_tensor_scalar_01(self):
        xPsi = bases.Bell2(0.3, 0, 1)
        xRes = qstate.Tensor(xPsi, CStateVector.Scalar())
        assert_allclose(xRes.aAmp, xPsi.aAmp, atol=1e-15)
        assert xRes.tDims == xPsi.tDims

    # enddef

    ################################################################################
    def test_tensor_capacity_01(self):
        with pytest.raises(CSimError_Capacity):
            qstate.Tensor(CStateVector.Basis("00"), CStateVector.Basis("0"), iQubitCap=2)
        # endwith

    # enddef

    ################################################################################
    def test_apply_local_01(self):
        xRes = qstate.ApplyLocal(CLocalOperator.Pauli("X", [0]), CStateVector.Basis("0"))
        assert_allclose(xRes.aAmp, [0, 1])

        xRes = qstate.ApplyLocal(CLocalOperator.Pauli("Y", [0]), CStateVector.Basis("1"))
        assert_allclose(xRes.aAmp, [-1j, 0])

    # enddef

    ################################################################################
    def test_apply_local_02(self):
        xRng = np.random.default_rng(1)
        xPsi = _RandomState(3, xRng)
        xRes = qstate.ApplyLocal(CLocalOperator.Pauli("I", [1]), xPsi)
        assert np.max(np.abs(xRes.aAmp - xPsi.aAmp)) < 1e-15

        # X on the middle qubit of |010> gives |000>
        xRes = qstate.ApplyLocal(CLocalOperator.Pauli("X", [1]), CStateVector.Basis("010"))
        assert_allclose(xRes.aAmp, CStateVector.Basis("000").aAmp)

    # enddef

    ################################################################################
    def test_apply_local_norm_01(self):
        xRng = np.random.default_rng(2)
        for _ in range(200):
            xOp = qstate.HaarUnitary(4, xRng)
            xOp = CLocalOperator(xOp.aMat, [2, 0])
            xRes = qstate.ApplyLocal(xOp, _RandomState(3, xRng))
            assert abs(np.linalg.norm(xRes.aAmp) - 1.0) < 1e-12
        # endfor

    # enddef

    ################################################################################
    def test_apply_local_error_01(self):
        with pytest.raises(CSimError_Index):
            qstate.ApplyLocal(CLocalOperator.Pauli("X", [3]), CStateVector.Basis("00"))
        # endwith

        with pytest.raises(CSimError_Index):
            CLocalOperator.Pauli("XX", [1, 1])
        # endwith

        with pytest.raises(CSimError_Contract):
            CLocalOperator([[1.0, 1.0], [0.0, 1.0]], [0])
        # endwith

    # enddef

    ################################################################################
    def test_state_contract_01(self):
        with pytest.raises(CSimError_Contract):
            CStateVector([1.0, 1.0])
        # endwith

        with pytest.raises(CSimError_Contract):
            CInputQubit(1.0, 0.1)
        # endwith

        xRaw = CStateRaw([0.5, 0.0])
        assert abs(xRaw.fNormSq - 0.25) < 1e-15
        assert_allclose(xRaw.Normalized().aAmp, [1.0, 0.0])

    # enddef

    ################################################################################
    def test_project_01(self):
        # Alice's Bell outcome phi_00 on (0, 1) leaves a0|00> + a1|11> on the remaining pair
        xInput = CInputQubit(0.6, 0.8j)
        xFull = qstate.Tensor(xInput.xState, bases.GhzBasis(math.pi / 4, 0, 0, 0))
        fProb, xPost = qstate.Project(xFull, bases.Bell2(math.pi / 4, 0, 0), [0, 1])

        assert abs(fProb - 0.25) < 1e-12
        assert_allclose(xPost.aAmp, [0.6, 0, 0, 0.8j], atol=1e-12)

    # enddef

    ################################################################################
    def test_project_02(self):
        fProb, xPost = qstate.Project(CStateVector.Basis("00"), CStateVector.Basis("1"), [0])
        assert fProb == 0.0
        assert xPost.bIsZero
        assert not isinstance(xPost, CStateVector)

    # enddef

    ################################################################################
    def test_project_completeness_01(self):
        xRng = np.random.default_rng(3)
        lBasis = bases.GhzBasisAll(0.4)
        for _ in range(100):
            xPsi = _RandomState(4, xRng)
            fSum = sum(qstate.Project(xPsi, xB, [1, 2, 3])[0] for _, xB in lBasis)
            assert abs(fSum - 1.0) < 1e-12
        # endfor

    # enddef

    ################################################################################
    def test_project_density_01(self):
        xRng = np.random.default_rng(4)
        xPsi = _RandomState(3, xRng)
        xBasis = bases.Bell2(0.7, 1, 0)

        fProb, xPost = qstate.Project(xPsi, xBasis, [2, 0])
        fProbRho, rhoPost = qstate.ProjectDensity(qstate.DensityFromState(xPsi), xBasis, [2, 0])

        assert abs(fProb - fProbRho) < 1e-12
        assert_allclose(rhoPost.aMat, np.outer(xPost.aAmp, xPost.aAmp.conj()), atol=1e-12)

    # enddef

    ################################################################################
    def test_partial_trace_01(self):
        # tracing one qubit of GHZ leaves a classical mixture
        rhoGhz = qstate.DensityFromState(bases.GhzBasis(math.pi / 4, 0, 0, 0))
        rhoRed = qstate.PartialTrace(rhoGhz, [0, 1])
        assert_allclose(rhoRed.aMat, np.diag([0.5, 0, 0, 0.5]), atol=1e-12)

        rhoRed = qstate.ReducedDensity(bases.GhzBasis(math.pi / 4, 0, 0, 0), [0, 1])
        assert_allclose(rhoRed.aMat, np.diag([0.5, 0, 0, 0.5]), atol=1e-12)

    # enddef

    ################################################################################
    def test_partial_trace_02(self):
        # tracing one qubit of W keeps EPR entanglement
        xW = bases.CWChannelSpec.Symmetric().xState
        rhoRed = qstate.PartialTrace(qstate.DensityFromState(xW), [0, 1])

        xPhi01 = bases.Bell2(math.pi / 4, 0, 1)
        aExpect = 2.0 / 3.0 * np.outer(xPhi01.aAmp, xPhi01.aAmp.conj()) + 1.0 / 3.0 * np.diag([1, 0, 0, 0])
        assert_allclose(rhoRed.aMat, aExpect, atol=1e-12)
        assert_allclose(qstate.ReducedDensity(xW, [1, 2]).aMat, aExpect, atol=1e-12)

    # enddef

    ################################################################################
    def test_partial_trace_03(self):
        xRng = np.random.default_rng(5)
        rho = qstate.DensityFromState(_RandomState(3, xRng))
        assert qstate.PartialTrace(rho, [0, 1, 2]) is rho

        with pytest.raises(CSimError_Argument):
            qstate.PartialTrace(rho, [])
        # endwith

        with pytest.raises(CSimError_Index):
            qstate.PartialTrace(rho, [0, 3])
        # endwith

    # enddef

    ################################################################################
    def test_partial_trace_order_01(self):
        # kept subsystems come out in the given order
        rho = qstate.DensityFromState(CStateVector.Basis("01"))
        assert_allclose(qstate.PartialTrace(rho, [1, 0]).aMat, np.diag([0, 0, 1, 0]))

    # enddef

    ################################################################################
    def test_fidelity_pure_01(self):
        rhoZero = qstate.DensityFromState(CStateVector.Basis("0"))
        assert abs(qstate.FidelityPure(rhoZero, CStateVector.Basis("0")) - 1.0) < 1e-15

        rhoMixed = CDensityOp.MaximallyMixed((2,))
        xRng = np.random.default_rng(6)
        assert abs(qstate.FidelityPure(rhoMixed, _RandomState(1, xRng)) - 0.5) < 1e-12

    # enddef

    ################################################################################
    def test_fidelity_pure_02(self):
        rhoZero = qstate.DensityFromState(CStateVector.Basis("0"))
        with pytest.raises(CSimError_Contract):
            qstate.FidelityPure(rhoZero, CStateRaw(np.array([2.0, 0.0], dtype=complex)))
        # endwith

        rhoDouble = CDensityOp(np.diag([2.0, 0.0]).astype(complex), bCheck=False)
        with pytest.raises(CSimError_Contract):
            qstate.FidelityPure(rhoDouble, CStateVector.Basis("0"))
        # endwith

        # trace one but not positive
        rhoBad = CDensityOp(np.diag([1.5, -0.5]).astype(complex), bCheck=False)
        with pytest.raises(CSimError_Contract):
            qstate.FidelityPure(rhoBad, CStateVector.Basis("0"))
        # endwith

    # enddef

    ################################################################################
    def test_density_contract_01(self):
        with pytest.raises(CSimError_Contract):
            CDensityOp(np.diag([0.5, 0.6]))
        # endwith

        with pytest.raises(CSimError_Contract):
            CDensityOp(np.diag([1.5, -0.5]))
        # endwith

    # enddef

    ################################################################################
    @pytest.mark.parametrize("fTheta", [0.0, 0.3, math.pi / 8])
    def test_schmidt_01(self, fTheta):
        xData = qstate.SchmidtDecompose(bases.Bell2(fTheta, 0, 0), [0])
        assert_allclose(xData.aCoef, [math.cos(fTheta) ** 2, math.sin(fTheta) ** 2], atol=1e-12)

    # enddef

    ################################################################################
    def test_schmidt_02(self):
        xData = qstate.SchmidtDecompose(CStateVector.Basis("01"), [0])
        assert_allclose(xData.aCoef, [1.0, 0.0], atol=1e-12)
        assert xData.Rank() == 1

        xData = qstate.SchmidtDecompose(bases.Bell2(math.pi / 4, 1, 1), [0])
        assert_allclose(xData.aCoef, [0.5, 0.5], atol=1e-12)
        assert_allclose(xData.Reconstruct(), bases.Bell2(math.pi / 4, 1, 1).aAmp, atol=1e-12)

    # enddef

    ################################################################################
    @pytest.mark.parametrize("iSeed", [0, 1, 2])
    @pytest.mark.parametrize("lLeft", [[0], [0, 2], [1, 3], [0, 1, 3]])
    def test_schmidt_03(self, iSeed, lLeft):
        xRng = np.random.default_rng(100 + iSeed)
        xState = CStateVector(qstate.HaarMatrix(16, xRng)[:, 0])
        lRight = [i for i in range(4) if i not in lLeft]

        xData = qstate.SchmidtDecompose(xState, lLeft)
        aOrdered = np.transpose(xState.AsTensor(), lLeft + lRight).reshape(-1)
        assert np.max(np.abs(xData.Reconstruct() - aOrdered)) < 1e-12
        assert abs(np.sum(xData.aCoef) - 1.0) < 1e-12
        assert np.all(np.diff(xData.aCoef) <= 1e-15)

        aMat = aOrdered.reshape(2 ** len(lLeft), -1)
        assert xData.Rank() == np.linalg.matrix_rank(aMat, tol=1e-6)

    # enddef

    ################################################################################
    def test_schmidt_04(self):
        # product across the cut, entangled inside each half
        xRng = np.random.default_rng(11)
        xState = qstate.Tensor(_RandomState(2, xRng), _RandomState(2, xRng))

        xData = qstate.SchmidtDecompose(xState, [0, 1])
        assert xData.Rank() == 1
        assert abs(xData.aCoef[0] - 1.0) < 1e-12

        xData = qstate.SchmidtDecompose(xState, [0, 2])
        aOrdered = np.transpose(xState.AsTensor(), [0, 2, 1, 3]).reshape(-1)
        assert np.max(np.abs(xData.Reconstruct() - aOrdered)) < 1e-12
        assert xData.Rank() == np.linalg.matrix_rank(aOrdered.reshape(4, 4), tol=1e-6)

    # enddef

    ################################################################################
    def test_haar_01(self):
        xRng = np.random.default_rng(7)
        for _ in range(1000):
            aU = qstate.HaarMatrix(3, xRng)
            assert np.max(np.abs(aU.conj().T @ aU - np.eye(3))) < 1e-12
        # endfor

        aU = qstate.HaarMatrix(1, xRng)
        assert abs(abs(aU[0, 0]) - 1.0) < 1e-12

    # enddef

    ################################################################################
    def test_haar_02(self):
        # E|U_00|^2 = 1/d; for d = 2 the value is uniform on [0, 1]
        xRng = np.random.default_rng(8)
        iDraws = 20000
        aValues = np.array([abs(qstate.HaarMatrix(2, xRng)[0, 0]) ** 2 for _ in range(iDraws)])
        fStdErr = math.sqrt(1.0 / 12.0 / iDraws)
        assert abs(np.mean(aValues) - 0.5) < 3.0 * fStdErr

    # enddef

    ################################################################################
    def test_haar_03(self):
        with pytest.raises(CSimError_Argument):
            qstate.HaarMatrix(0, np.random.default_rng(0))
        # endwith

        xOp = qstate.HaarUnitary(4, np.random.default_rng(0))
        assert xOp.lTargets == (0, 1)

        xOp = qstate.HaarUnitary(3, np.random.default_rng(0))
        assert xOp.tDims == (3,)

    # enddef

    ################################################################################
    def test_expectation_01(self):
        xZero = CStateVector.Basis("000")
        assert abs(qstate.Expectation(xZero, CLocalOperator.Pauli("ZZZ", [0, 1, 2])) - 1.0) < 1e-15

        rho = qstate.DensityFromState(CStateVector.Basis("1"))
        assert abs(qstate.Expectation(rho, defines.aPauliZ) + 1.0) < 1e-15

    # enddef

    ################################################################################
    def test_trace_distance_01(self):
        rhoA = qstate.DensityFromState(CStateVector.Basis("0"))
        rhoB = qstate.DensityFromState(CStateVector.Basis("1"))
        assert abs(qstate.TraceDistance(rhoA, rhoB) - 1.0) < 1e-12
        assert abs(qstate.TraceDistance(rhoA, rhoA)) < 1e-15
        assert abs(qstate.Purity(CDensityOp.MaximallyMixed((2, 2))) - 0.25) < 1e-15

    # enddef

    ################################################################################
    def test_apply_local_density_01(self):
        xRng = np.random.default_rng(9)
        xPsi = _RandomState(2, xRng)
        xOp = CLocalOperator(qstate.HaarMatrix(2, xRng), [1])

        rhoA = qstate.ApplyLocalDensity(xOp, qstate.DensityFromState(xPsi))
        rhoB = qstate.DensityFromState(qstate.ApplyLocal(xOp, xPsi))
        assert_allclose(rhoA.aMat, rhoB.aMat, atol=1e-12)

    # enddef


# endclass
