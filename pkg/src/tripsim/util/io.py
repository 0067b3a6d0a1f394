#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\util\io.py
# Created Date: Monday, March 4th 2024, 2:31:52 pm
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

import io
import re
import csv
import enum
import numpy as np

try:
    import pyjson5
except Exception:
    pyjson5 = None
    print("Module 'pyjson5' not installed. JSON5 files will not be supported.")
# endtry

import json
from . import path, text

from ..core.cls_sim_error import CSimError, CSimError_Config


#######################################################################
# Convert numpy values, complex numbers and enums to plain JSON types
def ToJsonable(_xData):
    if isinstance(_xData, dict):
        return {str(k): ToJsonable(v) for k, v in _xData.items()}
    elif isinstance(_xData, (list, tuple)):
        return [ToJsonable(x) for x in _xData]
    elif isinstance(_xData, np.ndarray):
        return ToJsonable(_xData.tolist())
    elif isinstance(_xData, (bool, np.bool_)):
        return bool(_xData)
    elif isinstance(_xData, (int, np.integer)):
        return int(_xData)
    elif isinstance(_xData, (float, np.floating)):
        return float(_xData)
    elif isinstance(_xData, (complex, np.complexfloating)):
        return [float(_xData.real), float(_xData.imag)]
    elif isinstance(_xData, enum.Enum):
        return _xData.name
    # endif
    return _xData


# enddef


#######################################################################
def encode_json(_xData, iIndent=-1):

    if pyjson5 is not None and iIndent < 0:
        sData = pyjson5.encode(ToJsonable(_xData))
    else:
        sData = json.dumps(ToJsonable(_xData), indent=iIndent if iIndent >= 0 else None)
    # endif

    return sData


# enddef


#######################################################################
def decode_json(_sData):

    if pyjson5 is not None:
        xData = pyjson5.decode(_sData)
    else:
        xData = json.loads(_sData)
    # endif

    return xData


# enddef


#######################################################################
# Load JSON or JSON5 file from path
def LoadJson(_xFilePath) -> dict:

    pathFile = path.MakeNormPath(_xFilePath)

    if len(pathFile.suffix) == 0:
        pathTest = pathFile.parent / (pathFile.name + ".json")
        if not pathTest.exists():
            pathTest = pathFile.parent / (pathFile.name + ".json5")
            if not pathTest.exists():
                raise CSimError_Config(sMsg="File not found: {}[.json, .json5]".format(pathFile.as_posix()))
            # endif
        # endif
        pathFile = pathTest

    elif not pathFile.exists():
        raise CSimError_Config(sMsg="File not found: {}".format(pathFile.as_posix()))
    # endif

    if pyjson5 is None:
        with pathFile.open("r") as xFile:
            return json.load(xFile)
        # endwith
    # endif

    try:
        with pathFile.open("r") as xFile:
            dicData = pyjson5.decode_io(xFile)
        # endwith
    except pyjson5.Json5IllegalCharacter as xEx:
        xMatch = re.search(r"near\s+(\d+),", xEx.message)
        if xMatch is None:
            raise CSimError_Config(
                sMsg=CSimError.ListToString(
                    ["Illegal character encountered while parsing JSON file", xEx.message, pathFile.as_posix()]
                )
            )
        # endif
        iCharPos = int(xMatch.group(1))
        lLines = pathFile.read_text().split("\n")
        iCharCnt = 0
        iLinePos = len(lLines) - 1

        for iLineIdx, sLine in enumerate(lLines):
            iCharCnt += len(sLine) + 1
            if iCharCnt >= iCharPos:
                iLinePos = iLineIdx
                break
            # endif
        # endfor

        raise CSimError_Config(
            sMsg="Error parsing JSON file: {}{}".format(
                pathFile.as_posix(),
                CSimError.ListToString(
                    [
                        "Unexpected character '{}' encountered in line {}".format(xEx.character, iLinePos + 1),
                        " {:3d} :  {}".format(iLinePos + 1, lLines[iLinePos]),
                    ]
                ),
            )
        )
    except pyjson5.Json5Exception as xEx:
        raise CSimError_Config(sMsg="Error parsing JSON file: {}: {}".format(pathFile.as_posix(), xEx))
    # endtry

    return dicData


# enddef


#######################################################################
def encode_csv(_lHeader: list, _lRows: list) -> str:
    xStream = io.StringIO()
    xWriter = csv.writer(xStream, lineterminator="\n")
    xWriter.writerow(_lHeader)
    for lRow in _lRows:
        xWriter.writerow([text.FormatCell(x) for x in lRow])
    # endfor
    return xStream.getvalue()


# enddef
