#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /tripsim/cls_runner.py
# Created Date: Tuesday, March 12th 2024, 10:02:37 am
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

import sys
import copy
import math
import numpy as np
from pathlib import Path
from typing import Union, Optional, TextIO

from . import func
from .util import io, path
from .util.data import MergeDefaults
from .core import defines
from .core.cls_sim_trace import CWarningList
from .core.cls_sim_error import (
    CSimError,
    CSimError_Message,
    CSimError_FuncMessage,
    CSimError_Config,
    CSimError_Invariant,
)
from .cls_experiment_config import CExperimentConfig


# artifact keys whose values are probabilities or fidelities
setUnitKeys = {
    "p",
    "probability",
    "fidelity",
    "avg_fidelity",
    "avg_fidelity_trace",
    "success_probability",
    "success_fidelity",
    "input_avg_fidelity",
    "closed_form",
}

# header keys of every artifact
lHeaderKeys = ["schema", "command", "seed"]


class CRunner:
    def __init__(self):
        self.dicFunc: dict = {}
        self.dicTable: dict = {}
        self.dicDefaults: dict = {}
        self.xWarnings: CWarningList = CWarningList()
        self.pathLog: Optional[Path] = None
        self.xLogStream: Optional[TextIO] = None
        self.iSeed: int = 0

        for sModule in dir(func):
            xModule = getattr(func, sModule)
            if hasattr(xModule, "__tripsim_functions__"):
                self.RegisterFunctionModule(xModule)
            # endif
        # endfor

    # enddef

    ################################################################################
    def RegisterFunctionModule(self, _xModule):
        if not hasattr(_xModule, "__tripsim_functions__"):
            raise CSimError_Message(
                sMsg="Given function module does not have function declarations in '__tripsim_functions__'"
            )
        # endif

        if not isinstance(_xModule.__tripsim_functions__, dict):
            raise CSimError_Message(sMsg="Element '__tripsim_functions__' of given module is not a dictionary")
        # endif

        for sFunc, xExec in _xModule.__tripsim_functions__.items():
            if isinstance(xExec, dict) is True:
                funcExec = xExec.get("funcExec")
                if funcExec is None:
                    raise CSimError_Message(sMsg=f"No implementation defined for experiment '{sFunc}'")
                # endif
                self.dicFunc[sFunc] = funcExec
                self.dicDefaults[sFunc] = copy.deepcopy(xExec.get("dicDefaults", {}))
                funcTable = xExec.get("funcTable")
                if funcTable is not None:
                    self.dicTable[sFunc] = funcTable
                # endif
            else:
                self.dicFunc[sFunc] = xExec
                self.dicDefaults[sFunc] = {}
            # endif
        # endfor

    # enddef

    ################################################################################
    @property
    def lCommands(self) -> list:
        return sorted(self.dicFunc.keys())

    # enddef

    ################################################################################
    def GetDefaults(self, _sCommand: str) -> dict:
        self._AssertCommand(_sCommand)
        return copy.deepcopy(self.dicDefaults[_sCommand])

    # enddef

    ################################################################################
    def _AssertCommand(self, _sCommand: str):
        if _sCommand not in self.dicFunc:
            raise CSimError_Config(
                sMsg="Unknown command '{}'. Known are: {}".format(_sCommand, ", ".join(self.lCommands)),
                sKey="command",
            )
        # endif

    # enddef

    ################################################################################
    def MergeParams(self, _sCommand: str, _dicParams: dict) -> dict:
        return MergeDefaults(self.GetDefaults(_sCommand), _dicParams, f"command '{_sCommand}'")

    # enddef

    ################################################################################
    def GetRng(self) -> np.random.Generator:
        return np.random.default_rng(self.iSeed)

    # enddef

    ################################################################################
    def SetLogFilePath(
        self, *, _xPath: Union[Path, list, str, tuple] = None, _bCreate: bool = False, _bEnable: bool = True
    ) -> Path:
        if _bEnable is False:
            self.pathLog = None
            return
        # endif

        self.pathLog = path.LogFilePath(_xPath, bCreate=_bCreate)
        return self.pathLog

    # enddef

    ################################################################################
    def SetLogStream(self, _xStream: Optional[TextIO]):
        self.xLogStream = _xStream

    # enddef

    ################################################################################
    def LogString(self, _sText: str):
        # silent unless a log file or stream is set; stdout is reserved for artifacts
        if isinstance(self.pathLog, Path):
            with self.pathLog.open("a") as fileLog:
                fileLog.write(_sText + "\n")
            # endwith
        # endif

        if self.xLogStream is not None:
            self.xLogStream.write(_sText + "\n")
            self.xLogStream.flush()
        # endif

    # enddef

    ################################################################################
    def Execute(self, _xConfig: CExperimentConfig) -> dict:
        """Run the experiment of the configuration and return the validated artifact."""

        sCommand = _xConfig.sCommand
        self._AssertCommand(sCommand)
        dicParams = self.MergeParams(sCommand, _xConfig.dicParams)

        self.iSeed = _xConfig.iSeed
        self.xWarnings.Clear()
        self.LogString(f"Running '{sCommand}' with seed {self.iSeed}")

        funcExec = self.dicFunc[sCommand]
        try:
            dicResult = funcExec(self, dicParams, sFuncName=sCommand)
        except Exception as xEx:
            raise CSimError_FuncMessage(sFunc=sCommand, sMsg="Experiment failed", xChildEx=xEx)
        # endtry

        if not isinstance(dicResult, dict):
            raise CSimError_Invariant(
                sInvariant="result-is-dictionary", sWhere=sCommand, xValue=CSimError.ToTypename(dicResult)
            )
        # endif

        dicArtifact = {"schema": defines.sSchema, "command": sCommand, "seed": self.iSeed}
        for sKey, xValue in dicResult.items():
            if sKey in lHeaderKeys:
                raise CSimError_Invariant(sInvariant="artifact-header", sWhere=sCommand, xValue=sKey)
            # endif
            dicArtifact[sKey] = xValue
        # endfor

        dicArtifact = io.ToJsonable(dicArtifact)
        CRunner.ValidateArtifact(dicArtifact, sWhere=sCommand)
        self.LogString(f"Finished '{sCommand}'")
        return dicArtifact

    # enddef

    ################################################################################
    @staticmethod
    def ValidateArtifact(_xData, *, sWhere: str = "artifact"):
        if isinstance(_xData, dict):
            for sKey, xValue in _xData.items():
                sPath = f"{sWhere}/{sKey}"
                if sKey in setUnitKeys and not isinstance(xValue, (dict, list)):
                    CRunner._AssertUnit(xValue, sPath)
                # endif
                CRunner.ValidateArtifact(xValue, sWhere=sPath)
            # endfor

        elif isinstance(_xData, list):
            for iIdx, xValue in enumerate(_xData):
                CRunner.ValidateArtifact(xValue, sWhere=f"{sWhere}[{iIdx}]")
            # endfor

        elif isinstance(_xData, float) and not math.isfinite(_xData):
            raise CSimError_Invariant(sInvariant="finite-value", sWhere=sWhere, xValue=_xData)
        # endif

    # enddef

    ################################################################################
    @staticmethod
    def _AssertUnit(_xValue, _sWhere: str):
        if _xValue is None:
            return
        # endif
        if isinstance(_xValue, bool) or not isinstance(_xValue, (int, float)):
            raise CSimError_Invariant(sInvariant="probability-range", sWhere=_sWhere, xValue=_xValue)
        # endif
        if not (0.0 <= float(_xValue) <= 1.0):
            raise CSimError_Invariant(sInvariant="probability-range", sWhere=_sWhere, xValue=_xValue)
        # endif

    # enddef

    ################################################################################
    def Render(self, _dicArtifact: dict, _sFormat: str) -> str:
        if _sFormat == "json":
            return io.encode_json(_dicArtifact, iIndent=2) + "\n"
        # endif

        sCommand = _dicArtifact["command"]
        funcTable = self.dicTable.get(sCommand)
        if funcTable is None:
            raise CSimError_Config(sMsg=f"Command '{sCommand}' has no tabular output, use 'json'", sKey="format")
        # endif

        lHeader, lRows = funcTable(_dicArtifact)
        return io.encode_csv(lHeader, lRows)

    # enddef

    ################################################################################
    def Emit(self, _dicArtifact: dict, _xConfig: CExperimentConfig, *, xStream: Optional[TextIO] = None) -> str:
        sText = self.Render(_dicArtifact, _xConfig.sFormat)

        if path.IsStdout(_xConfig.sOutputPath):
            xOut = sys.stdout if xStream is None else xStream
            xOut.write(sText)
            xOut.flush()
        else:
            pathOut = path.OutputFilePath(_xConfig.sOutputPath)
            # newline="" keeps the output byte-identical across platforms
            with pathOut.open("w", newline="") as xFile:
                xFile.write(sText)
            # endwith
            self.LogString(f"Artifact written to: {pathOut.as_posix()}")
        # endif

        return sText

    # enddef


# endclass
