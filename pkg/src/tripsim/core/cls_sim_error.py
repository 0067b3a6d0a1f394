#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\core\cls_sim_error.py
# Created Date: Monday, March 4th 2024, 9:12:40 am
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


class CSimError(RuntimeError):
    def __init__(self, *, sMsg, sType=None, xData=None, xSelect=None, xChildEx=None):

        self.sType = sType
        self.xData = xData
        self.xSelect = xSelect
        self.xChildEx = xChildEx

        self.message = sMsg

        super().__init__(self.message)

    # enddef

    ################################################################################
    def __str__(self):
        return self.ToString()

    # enddef

    ################################################################################
    def ToString(self, iLevel=1):

        sMsg = self.IndentLevel(self.message, iLevel)

        if self.xChildEx is not None:
            if isinstance(self.xChildEx, CSimError) is True:
                sMsg += self.xChildEx.ToString(iLevel=iLevel + 1)
            else:
                sMsg += self.IndentLevel(str(self.xChildEx), iLevel + 1)
            # endif
        # endif

        return sMsg

    # enddef

    ################################################################################
    def IndentLevel(self, _sMsg, _iLevel):

        lLines = _sMsg.split("\n")
        sTag1 = f"{_iLevel:2d}> "
        sTagX = "  | "
        sMsg = sTag1 + lLines[0] + "\n"

        for sLine in lLines[1:]:
            sMsg += sTagX + sLine + "\n"
        # endfor

        return sMsg

    # enddef

    ################################################################################
    def GetRootType(self) -> str:
        # type of the innermost simulation error in the chain
        xEx = self
        sType = self.sType
        while isinstance(xEx, CSimError):
            if xEx.sType not in (None, "func-message", "message"):
                sType = xEx.sType
            # endif
            xEx = xEx.xChildEx
        # endwhile
        return sType

    # enddef

    ################################################################################
    @staticmethod
    def ListToString(_lArgs, iHighlightIdx=None):

        sMsg = ""
        if _lArgs is None:
            sMsg += "\nNone"
        elif len(_lArgs) == 0:
            sMsg += "\n[]"
        else:
            for iIdx, xArg in enumerate(_lArgs):
                if iHighlightIdx is not None and iHighlightIdx == iIdx:
                    sMsg += "\n>"
                else:
                    sMsg += "\n "
                # endif
                sMsg += "{:2d}: {}".format(iIdx, str(xArg))
            # endfor
        # endif
        return sMsg

    # enddef

    ################################################################################
    @staticmethod
    def ToTypename(xValue):

        if xValue is None:
            return "None"
        # endif

        sType = "unknown"
        if isinstance(xValue, dict):
            sType = "dictionary"

        elif isinstance(xValue, list):
            sType = "list"

        elif isinstance(xValue, tuple):
            sType = "tuple"

        elif isinstance(xValue, str):
            sType = "string"

        elif isinstance(xValue, bool):
            sType = "boolean"

        elif isinstance(xValue, int):
            sType = "integer"

        elif isinstance(xValue, float):
            sType = "float"

        elif isinstance(xValue, complex):
            sType = "complex"

        elif hasattr(xValue, "shape"):
            sType = "array{}".format(tuple(xValue.shape))

        else:
            sType = str(type(xValue))
        # endif

        return sType

    # enddef


# endclass


###########################################################################################
class CSimError_Message(CSimError):
    def __init__(self, *, sMsg, xChildEx=None):

        super().__init__(sMsg=sMsg, sType="message", xData=sMsg, xChildEx=xChildEx)

    # enddef


# endclass


############################################################################################
class CSimError_FuncMessage(CSimError):
    def __init__(self, *, sFunc, sMsg, xChildEx=None):

        sMessage = f"Experiment '{sFunc}': {sMsg}"
        super().__init__(
            sMsg=sMessage,
            sType="func-message",
            xData=sFunc,
            xSelect=sMsg,
            xChildEx=xChildEx,
        )

    # enddef


# endclass


###########################################################################################
class CSimError_Capacity(CSimError):
    def __init__(self, *, iQubitCnt, iQubitCap, xChildEx=None):

        sMsg = "Register of {} qubits exceeds the configured cap of {} qubits".format(iQubitCnt, iQubitCap)

        super().__init__(sMsg=sMsg, sType="capacity", xData=iQubitCnt, xSelect=iQubitCap, xChildEx=xChildEx)

    # enddef


# endclass


###########################################################################################
class CSimError_Contract(CSimError):
    def __init__(self, *, sWhat, fDeviation=None, xChildEx=None):

        if fDeviation is None:
            sMsg = "Contract violation: {}".format(sWhat)
        else:
            sMsg = "Contract violation: {} (deviation {:.3e})".format(sWhat, fDeviation)
        # endif

        super().__init__(sMsg=sMsg, sType="contract", xData=sWhat, xSelect=fDeviation, xChildEx=xChildEx)

    # enddef


# endclass


###########################################################################################
class CSimError_Index(CSimError):
    def __init__(self, *, lTargets, iQubitCnt, sContext=None, xChildEx=None):

        if sContext is None:
            sCtx = "Qubit targets"
        else:
            sCtx = sContext
        # endif

        sMsg = "{} {} invalid for a register of {} qubits".format(sCtx, list(lTargets), iQubitCnt)

        super().__init__(sMsg=sMsg, sType="index", xData=lTargets, xSelect=iQubitCnt, xChildEx=xChildEx)

    # enddef


# endclass


###########################################################################################
class CSimError_Argument(CSimError):
    def __init__(self, *, sArg, xValue=None, sMsg=None, xChildEx=None):

        if sMsg is None:
            sText = "Invalid argument '{}': {}".format(sArg, xValue)
        else:
            sText = "Invalid argument '{}': {}".format(sArg, sMsg)
        # endif

        super().__init__(sMsg=sText, sType="argument", xData=xValue, xSelect=sArg, xChildEx=xChildEx)

    # enddef


# endclass


###########################################################################################
class CSimError_Dimension(CSimError):
    def __init__(self, *, sContext, xExpected, xGiven, xChildEx=None):

        sMsg = "{}: expected dimension {} but {} was given".format(sContext, xExpected, xGiven)

        super().__init__(sMsg=sMsg, sType="dimension", xData=xGiven, xSelect=xExpected, xChildEx=xChildEx)

    # enddef


# endclass


###########################################################################################
class CSimError_Config(CSimError):
    def __init__(self, *, sMsg, sKey=None, xChildEx=None):

        if sKey is None:
            sText = "Configuration error: {}".format(sMsg)
        else:
            sText = "Configuration error for '{}': {}".format(sKey, sMsg)
        # endif

        super().__init__(sMsg=sText, sType="config", xData=sKey, xChildEx=xChildEx)

    # enddef


# endclass


###########################################################################################
class CSimError_Invariant(CSimError):
    def __init__(self, *, sInvariant, sWhere, xValue=None, xChildEx=None):

        sMsg = "Invariant '{}' violated at {}: {}".format(sInvariant, sWhere, xValue)

        super().__init__(sMsg=sMsg, sType="invariant", xData=xValue, xSelect=sInvariant, xChildEx=xChildEx)

    # enddef


# endclass
