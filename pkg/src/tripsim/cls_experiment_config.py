#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /tripsim/cls_experiment_config.py
# Created Date: Tuesday, March 12th 2024, 9:14:52 am
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

import os
import copy
from typing import Optional

from .util import io, convert
from .util.data import AssertKnownKeys
from .core.cls_sim_error import CSimError, CSimError_Config

# Environment variable that overrides the seed of any configuration
sSeedEnvVar = "TRIPSIM_SEED"

lOutputFormats = ["json", "csv"]

dicConfigKeys = {"command": None, "params": None, "seed": None, "output": None}
dicOutputKeys = {"path": None, "format": None}


####################################################################################
class CExperimentConfig:
    """A single experiment run: command, parameters, seed and output target."""

    def __init__(
        self,
        *,
        sCommand: str,
        dicParams: Optional[dict] = None,
        iSeed: int = 0,
        sOutputPath: Optional[str] = None,
        sOutputFormat: Optional[str] = None,
    ):
        if not isinstance(sCommand, str) or len(sCommand) == 0:
            raise CSimError_Config(sMsg="Command must be a non-empty string", sKey="command")
        # endif

        if dicParams is None:
            dicParams = {}
        elif not isinstance(dicParams, dict):
            raise CSimError_Config(
                sMsg="Parameters must be a dictionary, not a {}".format(CSimError.ToTypename(dicParams)),
                sKey="params",
            )
        # endif

        self.sCommand: str = sCommand
        self.dicParams: dict = copy.deepcopy(dicParams)
        self.iSeed: int = CExperimentConfig.ToSeed(iSeed)
        self.sOutputPath: Optional[str] = sOutputPath
        self.sOutputFormat: Optional[str] = None
        self.SetOutputFormat(sOutputFormat)

    # enddef

    ################################################################################
    @staticmethod
    def ToSeed(_xSeed) -> int:
        try:
            iSeed = convert.ToInt(_xSeed)
        except Exception as xEx:
            raise CSimError_Config(sMsg="Seed is not an integer", sKey="seed", xChildEx=xEx)
        # endtry

        if iSeed < 0 or iSeed >= 2**64:
            raise CSimError_Config(sMsg=f"Seed {iSeed} is not an unsigned 64-bit integer", sKey="seed")
        # endif
        return iSeed

    # enddef

    ################################################################################
    def SetOutputFormat(self, _sFormat: Optional[str]):
        if _sFormat is None:
            self.sOutputFormat = None
            return
        # endif

        sFormat = str(_sFormat).lower()
        if sFormat not in lOutputFormats:
            raise CSimError_Config(
                sMsg="Unknown output format '{}'. Known are: {}".format(_sFormat, ", ".join(lOutputFormats)),
                sKey="format",
            )
        # endif
        self.sOutputFormat = sFormat

    # enddef

    ################################################################################
    @property
    def sFormat(self) -> str:
        # explicit format, else inferred from the output file suffix
        if self.sOutputFormat is not None:
            return self.sOutputFormat
        # endif
        if isinstance(self.sOutputPath, str) and self.sOutputPath.lower().endswith(".csv"):
            return "csv"
        # endif
        return "json"

    # enddef

    ################################################################################
    def ApplyEnvironment(self, *, dicEnv: Optional[dict] = None):
        if dicEnv is None:
            dicEnv = os.environ
        # endif

        sSeed = dicEnv.get(sSeedEnvVar)
        if sSeed is None or len(sSeed.strip()) == 0:
            return
        # endif

        try:
            self.iSeed = CExperimentConfig.ToSeed(sSeed.strip())
        except CSimError as xEx:
            raise CSimError_Config(sMsg=f"Invalid value of environment variable '{sSeedEnvVar}'", xChildEx=xEx)
        # endtry

    # enddef

    ################################################################################
    @classmethod
    def FromDict(cls, _dicConfig: dict, *, sContext: str = "configuration") -> "CExperimentConfig":
        if not isinstance(_dicConfig, dict):
            raise CSimError_Config(
                sMsg="{} must be a dictionary, not a {}".format(sContext, CSimError.ToTypename(_dicConfig))
            )
        # endif
        AssertKnownKeys(dicConfigKeys, _dicConfig, sContext)

        if "command" not in _dicConfig:
            raise CSimError_Config(sMsg=f"No command given in {sContext}", sKey="command")
        # endif

        dicOutput = _dicConfig.get("output")
        if dicOutput is None:
            dicOutput = {}
        elif isinstance(dicOutput, str):
            dicOutput = {"path": dicOutput}
        elif not isinstance(dicOutput, dict):
            raise CSimError_Config(sMsg="Output must be a path or a dictionary", sKey="output")
        # endif
        AssertKnownKeys(dicOutputKeys, dicOutput, f"output of {sContext}")

        return cls(
            sCommand=_dicConfig["command"],
            dicParams=_dicConfig.get("params"),
            iSeed=_dicConfig.get("seed", 0),
            sOutputPath=dicOutput.get("path"),
            sOutputFormat=dicOutput.get("format"),
        )

    # enddef

    ################################################################################
    @classmethod
    def FromFile(cls, _xFilePath) -> "CExperimentConfig":
        dicConfig = io.LoadJson(_xFilePath)
        return cls.FromDict(dicConfig, sContext=f"configuration file '{_xFilePath}'")

    # enddef

    ################################################################################
    def ToDict(self) -> dict:
        return {
            "command": self.sCommand,
            "params": copy.deepcopy(self.dicParams),
            "seed": self.iSeed,
            "output": {"path": self.sOutputPath, "format": self.sFormat},
        }

    # enddef


# endclass
