#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /testing/test_paradox-01.py
# Created Date: Wednesday, March 6th 2024, 2:31:09 pm
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

from tripsim.core import defines, qstate
from tripsim.core.cls_state import CStateVector
from tripsim.core.cls_local_op import CLocalOperator
from tripsim.core.cls_sim_error import CSimError_Argument, CSimError_Dimension
from tripsim.func import paradox

lPauliStrings = ["XYY", "YXY", "YYX", "XXX", "ZZZ", "XIY", "IZI"]


class TestClass:

    ################################################################################
    def test_ghz_01(self):
        xReport = paradox.GhzParadox(paradox.NamedState("ghz"))
        assert abs(xReport.fXYY + 1.0) < 1e-12
        assert abs(xReport.fYXY + 1.0) < 1e-12
        assert abs(xReport.fYYX + 1.0) < 1e-12
        assert abs(xReport.fXXX - 1.0) < 1e-12
        assert abs(xReport.fLhvProduct + 1.0) < 1e-12
        assert xReport.bContradiction is True

    # enddef

    ################################################################################
    @pytest.mark.parametrize("sName", ["w", "zero"])
    def test_no_contradiction_01(self, sName):
        xReport = paradox.GhzParadox(paradox.NamedState(sName))
        for fValue in (xReport.fXYY, xReport.fYXY, xReport.fYYX, xReport.fXXX):
            assert abs(fValue) < 1e-12
        # endfor
        assert xReport.bContradiction is False

    # enddef

    ################################################################################
    def test_non_maximal_01(self):
        # cos|000> + sin|111>: XXX = sin(2 theta)
        fTheta = 0.3
        xReport = paradox.GhzParadox(paradox.NamedState("ghz", fTheta))
        assert abs(xReport.fXXX - math.sin(2.0 * fTheta)) < 1e-12
        assert xReport.bContradiction is False

    # enddef

    ################################################################################
    def test_report_dict_01(self):
        dicReport = paradox.GhzParadox(paradox.NamedState("ghz")).ToDict()
        assert sorted(dicReport.keys()) == sorted(
            ["xyy", "yxy", "yyx", "xxx", "lhv_product", "m_xxx_predicted", "contradiction"]
        )
        assert abs(dicReport["m_xxx_predicted"] + 1.0) < 1e-12

    # enddef

    ################################################################################
    def test_expectation_01(self):
        assert abs(paradox.PauliExpectation(CStateVector.Basis("010"), "ZZZ") + 1.0) < 1e-12
        assert abs(paradox.PauliExpectation(CStateVector.Basis("000"), "xii") - 0.0) < 1e-12

        with pytest.raises(CSimError_Dimension):
            paradox.PauliExpectation(CStateVector.Basis("00"), "XXX")
        # endwith

    # enddef

    ################################################################################
    @pytest.mark.parametrize("iSeed", range(5))
    def test_expectation_range_01(self, iSeed):
        xRng = np.random.default_rng(200 + iSeed)
        xState = CStateVector(qstate.HaarMatrix(8, xRng)[:, 0])
        for sPauli in lPauliStrings:
            fValue = paradox.PauliExpectation(xState, sPauli)
            assert -1.0 - 1e-12 <= fValue <= 1.0 + 1e-12
        # endfor

    # enddef

    ################################################################################
    @pytest.mark.parametrize("iSeed", range(5))
    def test_expectation_covariance_01(self, iSeed):
        # <P> on (U0 x U1 x U2)|s> equals <s| U^dagger P U |s>
        xRng = np.random.default_rng(300 + iSeed)
        xState = CStateVector(qstate.HaarMatrix(8, xRng)[:, 0])
        lU = [qstate.HaarMatrix(2, xRng) for _ in range(3)]
        aU = np.kron(np.kron(lU[0], lU[1]), lU[2])
        xRotated = qstate.ApplyLocal(CLocalOperator(aU, [0, 1, 2]), xState)

        for sPauli in lPauliStrings:
            aP = np.kron(np.kron(defines.dicPauli[sPauli[0]], defines.dicPauli[sPauli[1]]), defines.dicPauli[sPauli[2]])
            fExpect = float(np.vdot(xState.aAmp, aU.conj().T @ aP @ aU @ xState.aAmp).real)
            assert abs(paradox.PauliExpectation(xRotated, sPauli) - fExpect) < 1e-12
        # endfor

    # enddef

    ################################################################################
    def test_expectation_covariance_02(self):
        # Z on the first qubit anticommutes with X and Y there
        xRng = np.random.default_rng(17)
        xState = CStateVector(qstate.HaarMatrix(8, xRng)[:, 0])
        xFlipped = qstate.ApplyLocal(CLocalOperator.Pauli("Z", [0]), xState)
        for sPauli in ("XYY", "YXY", "XXX"):
            fValue = paradox.PauliExpectation(xState, sPauli)
            assert abs(paradox.PauliExpectation(xFlipped, sPauli) + fValue) < 1e-12
        # endfor

    # enddef

    ################################################################################
    @pytest.mark.parametrize("sPauli,fEigen", [("XYY", -1.0), ("YXY", -1.0), ("YYX", -1.0), ("XXX", 1.0)])
    def test_ghz_eigenstate_01(self, sPauli, fEigen):
        xState = paradox.NamedState("ghz")
        xImage = qstate.ApplyLocal(paradox.PauliOperator(sPauli), xState)
        assert np.linalg.norm(xImage.aAmp - fEigen * xState.aAmp) < 1e-12

    # enddef

    ################################################################################
    def test_error_01(self):
        with pytest.raises(CSimError_Dimension):
            paradox.GhzParadox(CStateVector.Basis("00"))
        # endwith

        with pytest.raises(CSimError_Argument):
            paradox.NamedState("cluster")
        # endwith

    # enddef


# endclass
