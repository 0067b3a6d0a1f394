#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /tripsim/util/text.py
# Created Date: Monday, March 4th 2024, 3:20:44 pm
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

from ..core import defines
from ..core.cls_sim_error import CSimError_Message, CSimError_Argument
from . import convert


################################################################################
# Split Arguments in string accounting for brackets.
# For example, the string "a, (b, c), d" is split into ["a", "(b, c)", "d"].
def SplitArgs(_sValue, sSplitChar=","):
    lArgs = []
    sOpen = "([{"
    sClose = ")]}"
    lBrkCnt = [0, 0, 0]

    iStart = 0
    for iIdx, sChar in enumerate(_sValue):
        iOpenIdx = sOpen.find(sChar)
        iCloseIdx = sClose.find(sChar)

        if sChar == sSplitChar and all(x == 0 for x in lBrkCnt):
            lArgs.append(_sValue[iStart:iIdx].strip())
            iStart = iIdx + 1

        elif iOpenIdx >= 0:
            lBrkCnt[iOpenIdx] += 1

        elif iCloseIdx >= 0:
            if lBrkCnt[iCloseIdx] == 0:
                raise CSimError_Message(
                    sMsg="Unexpected close bracket '{0}' at index {1} in: {2}>>{3}<<{4}".format(
                        sClose[iCloseIdx], iIdx, _sValue[0:iIdx], _sValue[iIdx], _sValue[iIdx + 1 :]
                    )
                )
            # endif
            lBrkCnt[iCloseIdx] -= 1
        # endif
    # endfor

    if any(x > 0 for x in lBrkCnt):
        raise CSimError_Message(sMsg="Missing closing bracket in: {}".format(_sValue))
    # endif

    sLast = _sValue[iStart:].strip()
    if len(sLast) > 0 or len(lArgs) > 0:
        lArgs.append(sLast)
    # endif

    return lArgs


# enddef


################################################################################
# Grid "start:stop:step", stop included when it lies on the grid
def ParseGrid(_xGrid) -> list:
    if isinstance(_xGrid, (list, tuple)):
        return [convert.ToFloat(x) for x in _xGrid]
    # endif

    xMatch = defines.reGrid.match(str(_xGrid))
    if xMatch is None:
        raise CSimError_Argument(sArg="grid", xValue=_xGrid, sMsg="expect 'start:stop:step'")
    # endif

    fStart = convert.ToFloat(xMatch.group("start"))
    fStop = convert.ToFloat(xMatch.group("stop"))
    fStep = convert.ToFloat(xMatch.group("step"))
    if fStep <= 0.0 or fStop < fStart:
        raise CSimError_Argument(sArg="grid", xValue=_xGrid, sMsg="expect start <= stop and a positive step")
    # endif

    iCnt = int(math.floor((fStop - fStart) / fStep + 1e-9)) + 1
    return [round(fStart + i * fStep, 12) for i in range(iCnt)]


# enddef


################################################################################
def FormatFloat(_fValue) -> str:
    # '.' decimals, 17 significant digits
    return "{:.17g}".format(float(_fValue))


# enddef


################################################################################
def FormatCell(_xValue) -> str:
    if _xValue is None:
        return ""
    elif isinstance(_xValue, (bool, np.bool_)):
        return "true" if _xValue else "false"
    elif isinstance(_xValue, (float, np.floating)):
        return FormatFloat(_xValue)
    # endif
    return str(_xValue)


# enddef


################################################################################
def ComplexList(_aValues) -> list:
    # complex array as list of [re, im]
    return [[float(x.real), float(x.imag)] for x in np.asarray(_aValues, dtype=complex).reshape(-1)]


# enddef
