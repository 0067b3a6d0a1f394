#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /testing/test_bases-01.py
# Created Date: Tuesday, March 5th 2024, 9:47:02 am
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
import cmath
import pytest
import numpy as np
from numpy.testing import assert_allclose

from tripsim.core.cls_state import CStateVector
from tripsim.core.cls_sim_trace import CWarningList, EWarningType
from tripsim.core.cls_sim_error import CSimError_Argument, CSimError_Contract
from tripsim.func import bases

fR2 = 1.0 / math.sqrt(2.0)
fR3 = 1.0 / math.sqrt(3.0)


class TestClass:

    ################################################################################
    def test_general_bell_01(self):
        xPhi = bases.GeneralBell(bases.CGeneralBellSpec.Uniform(2), 0, 0)
        assert_allclose(xPhi.aAmp, [fR2, 0, 0, fR2], atol=1e-15)

    # enddef

    ################################################################################
    @pytest.mark.parametrize("fTheta", [0.0, 0.3, math.pi / 4, 1.2])
    def test_general_bell_02(self, fTheta):
        # the d = 2 table (cos, sin) reproduces the parametrized basis
        xSpec = bases.CGeneralBellSpec.Theta(fTheta)
        for iM in range(2):
            for iN in range(2):
                assert_allclose(
                    bases.GeneralBell(xSpec, iM, iN).aAmp, bases.Bell2(fTheta, iM, iN).aAmp, atol=1e-12
                )
            # endfor
        # endfor

        xPsi = bases.Bell2(fTheta, 1, 1)
        assert_allclose(xPsi.aAmp, [0, math.sin(fTheta), -math.cos(fTheta), 0], atol=1e-15)

    # enddef

    ################################################################################
    def test_general_bell_03(self):
        cOmega = cmath.exp(2j * math.pi / 3)
        xPhi = bases.GeneralBell(bases.CGeneralBellSpec.Uniform(3), 1, 1)

        aExpect = np.zeros(9, dtype=complex)
        aExpect[0 * 3 + 1] = fR3
        aExpect[1 * 3 + 2] = fR3 * cOmega
        aExpect[2 * 3 + 0] = fR3 * cOmega**2
        assert_allclose(xPhi.aAmp, aExpect, atol=1e-12)
        assert xPhi.tDims == (3, 3)

        lBasis = bases.GeneralBellBasis(bases.CGeneralBellSpec.Uniform(3))
        assert bases.GramDeviation([x[1] for x in lBasis]) < 1e-12

    # enddef

    ################################################################################
    def test_general_bell_04(self):
        with pytest.raises(CSimError_Contract):
            bases.CGeneralBellSpec(2, [[1.0, 0.5], [0.0, 0.5]])
        # endwith

        with pytest.raises(CSimError_Argument):
            bases.CGeneralBellSpec(1, [[1.0]])
        # endwith

        with pytest.raises(CSimError_Argument):
            bases.GeneralBell(bases.CGeneralBellSpec.Uniform(2), 2, 0)
        # endwith

    # enddef

    ################################################################################
    def test_bell2_01(self):
        assert_allclose(bases.Bell2(math.pi / 4, 1, 1).aAmp, [0, fR2, -fR2, 0], atol=1e-15)
        assert_allclose(bases.Bell2(0.0, 0, 0).aAmp, [1, 0, 0, 0], atol=1e-15)
        assert bases.GramDeviation([x[1] for x in bases.Bell2Basis(0.3)]) < 1e-12

    # enddef

    ################################################################################
    def test_ghz_01(self):
        assert_allclose(
            bases.GhzBasis(math.pi / 4, 0, 0, 0).aAmp, CStateVector([fR2, 0, 0, 0, 0, 0, 0, fR2]).aAmp, atol=1e-15
        )

        fTheta = 0.35
        aExpect = np.zeros(8)
        aExpect[0b011] = math.sin(fTheta)
        aExpect[0b100] = -math.cos(fTheta)
        assert_allclose(bases.GhzBasis(fTheta, 1, 1, 1).aAmp, aExpect, atol=1e-15)

        assert_allclose(bases.GhzBasis(0.0, 0, 1, 0).aAmp, CStateVector.Basis("010").aAmp, atol=1e-15)

    # enddef

    ################################################################################
    def test_w_01(self):
        fTheta = math.acos(fR3)
        xW = bases.WBasis(fTheta, math.pi / 4, 1)
        assert_allclose(xW.aAmp, bases.CWChannelSpec.Symmetric().xState.aAmp, atol=1e-12)

        assert_allclose(bases.WBasis(0.0, 0.9, 6).aAmp, CStateVector.Basis("000").aAmp, atol=1e-15)

    # enddef

    ################################################################################
    def test_w_02(self):
        xRng = np.random.default_rng(11)
        for _ in range(20):
            fTheta, fPhi = xRng.uniform(0.0, math.pi / 2, size=2)
            xW1 = bases.WBasis(fTheta, fPhi, 1)
            xW2 = bases.WBasis(fTheta, fPhi, 2)
            assert abs(np.vdot(xW1.aAmp, xW2.aAmp)) < 1e-12
        # endfor

    # enddef

    ################################################################################
    def test_w_printed_01(self):
        # the printed members 4 and 8 overlap their partners
        fTheta, fPhi = 0.7, 0.4
        xW1 = bases.WBasis(fTheta, fPhi, 1)
        xW4 = bases.WBasis(fTheta, fPhi, 4, bAsPrinted=True)
        fOverlap = abs(np.vdot(xW1.aAmp, xW4.aAmp))
        assert abs(fOverlap - 2.0 * math.sin(fTheta) * math.cos(fTheta) * math.cos(fPhi)) < 1e-12

        with pytest.raises(CSimError_Contract):
            bases.WBasisAll(fTheta, fPhi, bAsPrinted=True)
        # endwith

        xWarnings = CWarningList()
        bases.WBasis(fTheta, fPhi, 8, bAsPrinted=True, xWarnings=xWarnings)
        assert xWarnings.Count(EWarningType.BASIS_GRAM) == 1

    # enddef

    ################################################################################
    def test_w_error_01(self):
        with pytest.raises(CSimError_Argument):
            bases.WBasis(0.3, 0.3, 9)
        # endwith

        with pytest.raises(CSimError_Argument):
            bases.WBasis(2.0, 0.3, 1)
        # endwith

    # enddef

    ################################################################################
    def test_bob_x_01(self):
        xX0, xX1 = bases.BobXBasis(math.pi / 4)
        assert_allclose(xX0.aAmp, [fR2, fR2], atol=1e-15)

        xX0, xX1 = bases.BobXBasis(math.pi / 2)
        assert_allclose(xX0.aAmp, [1, 0], atol=1e-15)

        fTheta = 0.6
        xX0, xX1 = bases.BobXBasis(fTheta)
        aSum = np.outer(xX0.aAmp, xX0.aAmp.conj()) + np.outer(xX1.aAmp, xX1.aAmp.conj())
        assert_allclose(aSum, np.eye(2), atol=1e-12)

        # |0> = sin |x0> + cos |x1>, |1> = cos |x0> - sin |x1>
        fS, fC = math.sin(fTheta), math.cos(fTheta)
        assert_allclose(fS * xX0.aAmp + fC * xX1.aAmp, [1, 0], atol=1e-12)
        assert_allclose(fC * xX0.aAmp - fS * xX1.aAmp, [0, 1], atol=1e-12)

    # enddef

    ################################################################################
    def test_gram_random_01(self):
        xRng = np.random.default_rng(12)
        for _ in range(50):
            fTheta, fPhi = xRng.uniform(0.0, math.pi / 2, size=2)
            assert bases.GramDeviation([x[1] for x in bases.Bell2Basis(fTheta)]) < 1e-12
            assert bases.GramDeviation([x[1] for x in bases.GhzBasisAll(fTheta)]) < 1e-12
            assert bases.GramDeviation([x[1] for x in bases.WBasisAll(fTheta, fPhi)]) < 1e-12
            assert bases.GramDeviation([x[1] for x in bases.BobXBasisAll(fTheta)]) < 1e-12
        # endfor

    # enddef

    ################################################################################
    def test_w_channel_spec_01(self):
        with pytest.raises(CSimError_Argument):
            bases.CWChannelSpec(0.577, 0.577, 0.577)
        # endwith

        xSpec = bases.CWChannelSpec(0.6, 0.8, 0.0)
        assert_allclose(xSpec.xState.aAmp[[0b100, 0b010, 0b001]], [0.6, 0.8, 0.0])

    # enddef

    ################################################################################
    def test_basis_dump_01(self):
        dicDump = bases.BasisDump("ghz", {"theta": "pi/4"})
        assert dicDump["family"] == "ghz"
        assert len(dicDump["vectors"]) == 8
        assert dicDump["labels"][7] == [1, 1, 1]
        assert abs(dicDump["params"]["theta"] - math.pi / 4) < 1e-15

        dicDump = bases.BasisDump("general-bell", {"d": 3})
        assert len(dicDump["vectors"]) == 9

        with pytest.raises(CSimError_Argument):
            bases.BasisDump("unknown", {})
        # endwith

    # enddef


# endclass
