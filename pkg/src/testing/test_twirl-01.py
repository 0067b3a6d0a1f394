#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /testing/test_twirl-01.py
# Created Date: Wednesday, March 6th 2024, 10:12:40 am
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

from tripsim.core import qstate
from tripsim.core.cls_density import CDensityOp
from tripsim.core.cls_sim_error import CSimError_Argument, CSimError_Contract
from tripsim.func import bases, twirl


class TestClass:

    ################################################################################
    def test_werner_01(self):
        # p = 1 is the singlet projector
        xSinglet = bases.Bell2(math.pi / 4, 1, 1)
        assert_allclose(twirl.Werner(2, 1.0).aMat, np.outer(xSinglet.aAmp, xSinglet.aAmp.conj()), atol=1e-12)

        # p = 0 is the normalized symmetric projector
        assert_allclose(twirl.Werner(2, 0.0).aMat, twirl.ProjSymmetric(2) / 3.0, atol=1e-12)

    # enddef

    ################################################################################
    @pytest.mark.parametrize("iD", [2, 3, 4])
    @pytest.mark.parametrize("fP", [0.0, 0.25, 0.7, 1.0])
    def test_werner_invariant_01(self, iD, fP):
        rhoW = twirl.Werner(iD, fP)
        assert abs(np.trace(rhoW.aMat) - 1.0) < 1e-12
        assert abs(twirl.WernerInvariant(rhoW) - fP) < 1e-12

    # enddef

    ################################################################################
    def test_singlet_fraction_01(self):
        for fP in (0.1, 0.5, 0.9):
            assert abs(twirl.SingletFraction(twirl.Werner(2, fP)) - fP) < 1e-12
        # endfor

    # enddef

    ################################################################################
    @pytest.mark.parametrize("iD", [2, 3])
    @pytest.mark.parametrize("fF", [0.3, 0.6, 1.0])
    def test_isotropic_01(self, iD, fF):
        rhoI = twirl.Isotropic(iD, fF)
        assert abs(twirl.IsotropicInvariant(rhoI) - fF) < 1e-12
        assert_allclose(rhoI.aMat, twirl.IsotropicBellDiagonal(iD, fF).aMat, atol=1e-12)

    # enddef

    ################################################################################
    def test_isotropic_02(self):
        with pytest.raises(CSimError_Argument):
            twirl.Isotropic(2, 0.1)
        # endwith

        rhoI = twirl.Isotropic(2, 0.0, bRangeGuard=False)
        assert abs(twirl.IsotropicInvariant(rhoI)) < 1e-12

        with pytest.raises(CSimError_Argument):
            twirl.Werner(2, 1.5)
        # endwith

        with pytest.raises(CSimError_Argument):
            twirl.Werner(1, 0.5)
        # endwith

    # enddef

    ################################################################################
    @pytest.mark.parametrize("fP", [0.0, 0.4, 1.0])
    def test_gen_werner_01(self, fP):
        rhoG = twirl.GenWerner3Q(fP, math.pi / 4)
        fQ = 1.0 - fP
        assert abs(qstate.Purity(rhoG) - (fP**2 + fP * fQ / 4.0 + fQ**2 / 8.0)) < 1e-12

    # enddef

    ################################################################################
    def test_twirl_uu_01(self):
        xRng = np.random.default_rng(0)
        rhoIn = CDensityOp(twirl.ProjMaxEntangled(2), tDims=(2, 2))
        rhoOut = twirl.TwirlUU(rhoIn, 2000, xRng)

        rhoTarget = twirl.Werner(2, twirl.WernerInvariant(rhoIn))
        assert qstate.TraceDistance(rhoOut, rhoTarget) < 5e-2
        assert abs(twirl.WernerInvariant(rhoOut) - twirl.WernerInvariant(rhoIn)) < 1e-12

    # enddef

    ################################################################################
    def test_twirl_uu_star_01(self):
        xRng = np.random.default_rng(0)
        rhoIn = qstate.DensityFromState(twirl.RandomPureState(2, np.random.default_rng(3)))
        rhoOut = twirl.TwirlUUStar(rhoIn, 2000, xRng)

        fF = twirl.IsotropicInvariant(rhoIn)
        rhoTarget = twirl.Isotropic(2, fF, bRangeGuard=False)
        assert qstate.TraceDistance(rhoOut, rhoTarget) < 5e-2
        assert abs(twirl.IsotropicInvariant(rhoOut) - fF) < 1e-12

    # enddef

    ################################################################################
    def test_twirl_threads_01(self):
        rhoIn = twirl.Werner(2, 0.3)
        rhoA = twirl.TwirlUU(rhoIn, 400, np.random.default_rng(7), iThreads=1)
        rhoB = twirl.TwirlUU(rhoIn, 400, np.random.default_rng(7), iThreads=4)
        assert_allclose(rhoA.aMat, rhoB.aMat, atol=1e-14)

    # enddef

    ################################################################################
    def test_twirl_qutrit_01(self):
        rhoIn = qstate.DensityFromState(twirl.RandomPureState(3, np.random.default_rng(5)))
        rhoOut = twirl.TwirlUU(rhoIn, 4000, np.random.default_rng(1))
        rhoTarget = twirl.Werner(3, twirl.WernerInvariant(rhoIn))
        assert rhoOut.tDims == (3, 3)
        assert qstate.TraceDistance(rhoOut, rhoTarget) < 1e-1

    # enddef

    ################################################################################
    def test_twirl_convergence_01(self):
        rhoIn = qstate.DensityFromState(twirl.RandomPureState(2, np.random.default_rng(9)))
        rhoTarget = twirl.Werner(2, twirl.WernerInvariant(rhoIn))

        fFew = qstate.TraceDistance(twirl.TwirlUU(rhoIn, 100, np.random.default_rng(2)), rhoTarget)
        fMany = qstate.TraceDistance(twirl.TwirlUU(rhoIn, 10000, np.random.default_rng(2)), rhoTarget)
        assert fMany < fFew

    # enddef

    ################################################################################
    @pytest.mark.parametrize("bStar", [False, True])
    def test_twirl_convergence_02(self, bStar):
        # the Monte-Carlo error falls off as c / sqrt(N)
        rhoIn = qstate.DensityFromState(twirl.RandomPureState(2, np.random.default_rng(10)))
        if bStar is True:
            rhoTarget = twirl.Isotropic(2, twirl.IsotropicInvariant(rhoIn), bRangeGuard=False)
            funcTwirl = twirl.TwirlUUStar
        else:
            rhoTarget = twirl.Werner(2, twirl.WernerInvariant(rhoIn))
            funcTwirl = twirl.TwirlUU
        # endif

        lScaled = []
        for iSamples in (500, 2000, 8000):
            lDist = [
                qstate.TraceDistance(funcTwirl(rhoIn, iSamples, np.random.default_rng(iSeed)), rhoTarget)
                for iSeed in range(40, 45)
            ]
            lScaled.append(float(np.mean(lDist)) * math.sqrt(iSamples))
        # endfor

        assert max(lScaled) / min(lScaled) < 3.0

    # enddef

    ################################################################################
    def test_twirl_error_01(self):
        with pytest.raises(CSimError_Argument):
            twirl.TwirlUU(twirl.Werner(2, 0.5), 0, np.random.default_rng(0))
        # endwith

        with pytest.raises(CSimError_Contract):
            CDensityOp(np.diag([0.5, 0.6, 0.0, 0.0]), tDims=(2, 2))
        # endwith

    # enddef


# endclass
