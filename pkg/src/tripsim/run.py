#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /tripsim/run.py
# Created Date: Tuesday, March 12th 2024, 1:41:05 pm
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
import argparse
from typing import Optional

from .cls_runner import CRunner
from .cls_experiment_config import CExperimentConfig, lOutputFormats
from .core.cls_sim_error import CSimError, CSimError_Message
from .util import io

# error types that are the caller's fault
lUsageErrorTypes = ["config", "argument"]


######################################################################
def Run(
    *,
    sCommand: Optional[str] = None,
    dicParams: Optional[dict] = None,
    iSeed: int = 0,
    xConfig: Optional[CExperimentConfig] = None,
    xRunner: Optional[CRunner] = None,
    bPrintWarnings: bool = False,
) -> dict:
    """Run a single experiment and return its artifact dictionary.

    Either pass a complete configuration or a command with parameters and seed.
    Errors are raised as CSimError, so that GetRootType() tells the error category.
    """
    try:
        if xConfig is None:
            xConfig = CExperimentConfig(sCommand=sCommand, dicParams=dicParams, iSeed=iSeed)
        # endif

        if xRunner is None:
            xRunner = CRunner()
        # endif

        dicArtifact = xRunner.Execute(xConfig)

        if bPrintWarnings is True and xRunner.xWarnings.bHasWarnings is True:
            sys.stderr.write("WARNINGS:\n")
            sys.stderr.write(str(xRunner.xWarnings))
            sys.stderr.flush()
        # endif

        return dicArtifact

    except CSimError:
        raise

    except Exception as xEx:
        raise CSimError_Message(sMsg="Error running tripsim experiment", xChildEx=xEx)
    # endtry


# enddef


######################################################################
def ExitCode(_xEx: Exception) -> int:
    if isinstance(_xEx, CSimError) and _xEx.GetRootType() in lUsageErrorTypes:
        return 2
    # endif
    return 1


# enddef


######################################################################
def _ParseValue(_sValue):
    # JSON literals for lists and dictionaries, everything else stays a string
    if isinstance(_sValue, str) and _sValue.strip()[:1] in ("[", "{"):
        return io.decode_json(_sValue)
    # endif
    return _sValue


# enddef


######################################################################
def _AddCommonArgs(_xParser: argparse.ArgumentParser):
    _xParser.add_argument(
        "-o",
        "--out",
        dest="out",
        default=None,
        help="Output file. Writes to stdout if not given or '-'. The values 'json' and 'csv' select the format.",
    )
    _xParser.add_argument("-f", "--format", dest="format", choices=lOutputFormats, default=None)
    _xParser.add_argument("-s", "--seed", dest="seed", default=None, help="Seed of the random generator")
    _xParser.add_argument(
        "--log",
        dest="log",
        nargs="?",
        const="",
        default=None,
        help="Write a log file. Optional path to a folder or file.",
    )
    _xParser.add_argument("-v", "--verbose", dest="verbose", action="store_true", help="Log to stderr")
    _xParser.add_argument("--print-warnings", dest="printwarnings", action="store_true")


# enddef


######################################################################
def CreateArgParser(_xRunner: CRunner) -> argparse.ArgumentParser:
    xArgParse = argparse.ArgumentParser(prog="tripsim", description="Run tripartite entanglement experiments")
    xSubParsers = xArgParse.add_subparsers(dest="command", metavar="command")
    xSubParsers.required = True

    xRunParser = xSubParsers.add_parser("run", help="Run the experiment given in a JSON/JSON5 configuration file")
    xRunParser.add_argument("config", help="Path of the configuration file")
    _AddCommonArgs(xRunParser)

    for sCommand in _xRunner.lCommands:
        xParser = xSubParsers.add_parser(sCommand, help=f"Run experiment '{sCommand}'", allow_abbrev=False)
        for sKey, xDefault in _xRunner.GetDefaults(sCommand).items():
            xParser.add_argument(
                "--" + sKey.replace("_", "-"),
                dest=sKey,
                default=argparse.SUPPRESS,
                help=f"default: {xDefault}",
            )
        # endfor
        _AddCommonArgs(xParser)
    # endfor

    return xArgParse


# enddef


######################################################################
def ConfigFromArgs(_xRunner: CRunner, _xArgs: argparse.Namespace) -> CExperimentConfig:
    if _xArgs.command == "run":
        xConfig = CExperimentConfig.FromFile(_xArgs.config)
    else:
        dicArgs = vars(_xArgs)
        dicParams = {
            sKey: _ParseValue(dicArgs[sKey]) for sKey in _xRunner.GetDefaults(_xArgs.command) if sKey in dicArgs
        }
        xConfig = CExperimentConfig(sCommand=_xArgs.command, dicParams=dicParams)
    # endif

    if _xArgs.out is not None:
        if _xArgs.out.lower() in lOutputFormats:
            xConfig.SetOutputFormat(_xArgs.out)
            xConfig.sOutputPath = None
        else:
            xConfig.sOutputPath = _xArgs.out
        # endif
    # endif

    if _xArgs.format is not None:
        xConfig.SetOutputFormat(_xArgs.format)
    # endif

    if _xArgs.seed is not None:
        xConfig.iSeed = CExperimentConfig.ToSeed(_xArgs.seed)
    # endif

    xConfig.ApplyEnvironment()
    return xConfig


# enddef


######################################################################
def RunCli(lArgs: Optional[list] = None) -> int:
    try:
        xRunner = CRunner()
        xArgParse = CreateArgParser(xRunner)

        try:
            xArgs = xArgParse.parse_args(lArgs)
        except SystemExit as xExit:
            return xExit.code if isinstance(xExit.code, int) else 2
        # endtry

        if xArgs.log is not None:
            xRunner.SetLogFilePath(_xPath=xArgs.log if len(xArgs.log) > 0 else None)
        # endif

        if xArgs.verbose is True:
            xRunner.SetLogStream(sys.stderr)
        # endif

        xConfig = ConfigFromArgs(xRunner, xArgs)
        dicArtifact = Run(xConfig=xConfig, xRunner=xRunner, bPrintWarnings=xArgs.printwarnings)
        xRunner.Emit(dicArtifact, xConfig)

    except Exception as xEx:
        if isinstance(xEx, CSimError):
            sText = xEx.ToString()
        else:
            sText = str(xEx)
        # endif

        sys.stderr.write("Error running tripsim:\n{}\n".format(sText))
        sys.stderr.flush()
        return ExitCode(xEx)
    # endtry

    return 0


# enddef
