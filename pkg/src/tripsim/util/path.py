#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /tripsim/util/path.py
# Created Date: Monday, March 4th 2024, 2:45:37 pm
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
from typing import Union, Optional
from pathlib import Path
from datetime import datetime

from ..core.cls_sim_error import CSimError, CSimError_Config

tPathLike = Union[str, list, tuple, Path]


#######################################################################
# Expand '~' and environment variables, join list parts and normalize
def MakeNormPath(_xParts: tPathLike) -> Path:

    if isinstance(_xParts, (list, tuple)):
        if len(_xParts) == 0:
            return Path(".")
        # endif
        _xParts = Path(*[x.as_posix() if isinstance(x, Path) else str(x) for x in _xParts]).as_posix()

    elif isinstance(_xParts, Path):
        _xParts = _xParts.as_posix()

    elif not isinstance(_xParts, str):
        raise CSimError_Config(sMsg="Path argument has invalid type '{}'".format(CSimError.ToTypename(_xParts)))
    # endif

    return Path(os.path.normpath(os.path.expandvars(os.path.expanduser(_xParts))))


# enddef


#######################################################################
# True for an unset output path or '-', which both mean stdout
def IsStdout(_xPath: Optional[tPathLike]) -> bool:
    return _xPath is None or (isinstance(_xPath, str) and _xPath.strip() == "-")


# enddef


#######################################################################
def OutputFilePath(_xPath: tPathLike) -> Path:
    pathOut = MakeNormPath(_xPath)
    if not pathOut.parent.exists():
        raise CSimError_Config(sMsg="Output folder does not exist: {}".format(pathOut.parent.as_posix()), sKey="output")
    # endif
    return pathOut


# enddef


#######################################################################
# A path without suffix is a folder that receives a time stamped log file
def LogFilePath(_xPath: Optional[tPathLike], *, bCreate: bool = False, dtNow: Optional[datetime] = None) -> Path:

    pathLog = Path.cwd() if _xPath is None else MakeNormPath(_xPath)
    pathLog = pathLog.absolute()

    if len(pathLog.suffix) == 0:
        dtNow = datetime.now() if dtNow is None else dtNow
        pathLog /= dtNow.strftime("tripsim-log_%Y-%m-%d_%H-%M-%S.txt")
    # endif

    if bCreate is True:
        pathLog.parent.mkdir(exist_ok=True, parents=True)
    # endif

    if not pathLog.parent.exists():
        raise CSimError_Config(sMsg=f"Path for logging does not exist: {pathLog.as_posix()}", sKey="log")
    # endif

    return pathLog


# enddef
