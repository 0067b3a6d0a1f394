#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /tripsim/util/convert.py
# Created Date: Monday, March 4th 2024, 2:40:11 pm
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
from ..core.cls_sim_error import CSimError_Argument


############################################################################################
def ToBool(xValue):

    if isinstance(xValue, (bool, np.bool_)):
        return bool(xValue)
    # endif

    if isinstance(xValue, str):
        sValue = xValue.strip().lower()
        if sValue == "true":
            return True
        elif sValue == "false":
            return False
        else:
            raise CSimError_Argument(
                sArg="bool", xValue=xValue, sMsg="Cannot convert string to boolean. Expect 'true' or 'false'"
            )
        # endif
    # endif

    if isinstance(xValue, (int, np.integer)):
        return xValue != 0
    # endif

    if isinstance(xValue, float):
        return xValue != 0.0
    # endif

    raise CSimError_Argument(sArg="bool", xValue=xValue, sMsg="Cannot convert given element to boolean")


# enddef


#######################################################################
# Cast to integer
def ToInt(_xValue, iDefault=None, bDoRaise=True):

    try:
        if isinstance(_xValue, str):
            iResult = int(_xValue.strip())
        elif isinstance(_xValue, float) and not _xValue.is_integer():
            raise ValueError()
        else:
            iResult = int(_xValue)
        # endif

    except Exception:
        if isinstance(iDefault, int):
            return iDefault
        # endif

        if bDoRaise is True:
            raise CSimError_Argument(sArg="int", xValue=_xValue, sMsg=f"Error converting '{_xValue}' to integer")
        else:
            return None
        # endif
    # endtry

    return iResult


# enddef


#######################################################################
# Cast to float
def ToFloat(_xValue, fDefault=None, bDoRaise=True):
    try:
        fResult = float(_xValue)
    except Exception:
        if isinstance(fDefault, float):
            return fDefault
        # endif

        if bDoRaise is True:
            raise CSimError_Argument(sArg="float", xValue=_xValue, sMsg=f"Error converting '{_xValue}' to float")
        else:
            return None
        # endif
    # endtry

    return fResult


# enddef


#######################################################################
# Angle in radians from a number or an expression like "pi/4", "0.25pi", "3*pi/8"
def ToAngle(_xValue) -> float:
    if isinstance(_xValue, str):
        xMatch = defines.reAngle.match(_xValue)
        if xMatch is not None:
            sNum = xMatch.group("num")
            fNum = 1.0
            if sNum not in (None, "", "+"):
                fNum = -1.0 if sNum == "-" else float(sNum)
            # endif
            sDen = xMatch.group("den")
            fDen = 1.0 if sDen is None else float(sDen)
            if fDen == 0.0:
                raise CSimError_Argument(sArg="angle", xValue=_xValue, sMsg="zero denominator")
            # endif
            return fNum * math.pi / fDen
        # endif
    # endif

    return ToFloat(_xValue)


# enddef


#######################################################################
# Complex number from a number, a [re, im] pair or a string like "0.6+0.8j"
def ToComplex(_xValue) -> complex:
    if isinstance(_xValue, (list, tuple)):
        if len(_xValue) != 2:
            raise CSimError_Argument(sArg="complex", xValue=_xValue, sMsg="expect a [re, im] pair")
        # endif
        return complex(ToFloat(_xValue[0]), ToFloat(_xValue[1]))
    # endif

    try:
        if isinstance(_xValue, str):
            return complex(_xValue.strip().replace(" ", "").replace("i", "j"))
        # endif
        return complex(_xValue)
    except Exception:
        raise CSimError_Argument(sArg="complex", xValue=_xValue, sMsg=f"Error converting '{_xValue}' to complex")
    # endtry


# enddef
