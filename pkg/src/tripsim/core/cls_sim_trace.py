#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \cls_sim_trace.py
# Created Date: Monday, March 4th 2024, 9:40:11 am
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

import enum
from typing import Optional, Iterable


####################################################################################
# Non-fatal findings of a run. They never change a result, the CLI prints them
# on request.
class EWarningType(enum.Enum):
    NONE = enum.auto()
    DEGENERATE_BRANCH = enum.auto()
    BORDERLINE_CLASS = enum.auto()
    BASIS_GRAM = enum.auto()


# endclass

dicWarningText = {
    EWarningType.DEGENERATE_BRANCH: "Degenerate branch '{}' has zero probability, fidelity not applicable",
    EWarningType.BORDERLINE_CLASS: "Borderline classification '{}'",
    EWarningType.BASIS_GRAM: "Basis '{}' is not orthonormal",
}


####################################################################################
class CWarning:
    def __init__(self, *, _eType: EWarningType, _sKey: str, _sShortCtx: Optional[str] = None):
        self.eType = _eType
        self.sKey = str(_sKey)
        self.sShortCtx = _sShortCtx

    # enddef

    @property
    def sMessage(self) -> str:
        sMsg = dicWarningText.get(self.eType, "Unknown warning '{}'").format(self.sKey)
        if isinstance(self.sShortCtx, str) and len(self.sShortCtx) > 0:
            sMsg += f": {self.sShortCtx}"
        # endif
        return sMsg

    # enddef


# endclass


####################################################################################
# Warnings keyed by type and key. A repeated key keeps the first entry, so a
# branch seen on every quadrature node is reported once.
class CWarningList:
    def __init__(self):
        self.dicWarnType: dict[EWarningType, dict[str, CWarning]] = {}

    # enddef

    def Clear(self):
        self.dicWarnType = {}

    # enddef

    def Add(self, _warnX: CWarning):
        self.dicWarnType.setdefault(_warnX.eType, {}).setdefault(_warnX.sKey, _warnX)

    # enddef

    def Extend(self, _xOther: "CWarningList"):
        for warnX in _xOther.Iter():
            self.Add(warnX)
        # endfor

    # enddef

    def Iter(self, *, setExclude: Optional[Iterable[EWarningType]] = None):
        setExclude = set() if setExclude is None else set(setExclude)
        for eType, dicWarn in self.dicWarnType.items():
            if eType in setExclude:
                continue
            # endif
            yield from dicWarn.values()
        # endfor

    # enddef

    def Count(self, _eType: Optional[EWarningType] = None) -> int:
        if _eType is None:
            return sum(len(x) for x in self.dicWarnType.values())
        # endif
        return len(self.dicWarnType.get(_eType, {}))

    # enddef

    def ToString(self, *, setExclude: Optional[Iterable[EWarningType]] = None) -> str:
        return "".join(f"Warning: {x.sMessage}\n" for x in self.Iter(setExclude=setExclude))

    # enddef

    def __str__(self):
        return self.ToString()

    # enddef

    @property
    def bHasWarnings(self) -> bool:
        return self.Count() > 0

    # enddef


# endclass CWarningList
