#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /tripsim/util/data.py
# Created Date: Monday, March 4th 2024, 3:02:18 pm
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


import copy

from ..core.cls_sim_error import CSimError_Config


################################################################################
# Raise a config error for keys of the source that the target does not declare
def AssertKnownKeys(_dicKnown, _dicSrc, _sContext):
    lUnknown = sorted(x for x in _dicSrc if x not in _dicKnown)
    if len(lUnknown) > 0:
        raise CSimError_Config(
            sMsg="Unknown parameter(s) {} for {}. Known are: {}".format(
                ", ".join(f"'{x}'" for x in lUnknown), _sContext, ", ".join(sorted(_dicKnown))
            ),
            sKey=lUnknown[0],
        )
    # endif


# enddef


################################################################################
# Overlay parameters on a copy of the defaults. Nested dictionaries are merged
# key by key, all other values replace the default.
def MergeDefaults(_dicDefaults: dict, _dicSrc: dict, _sContext: str, *, bStrict: bool = True) -> dict:
    if bStrict is True:
        AssertKnownKeys(_dicDefaults, _dicSrc, _sContext)
    # endif

    dicTrg = copy.deepcopy(_dicDefaults)
    for sId, xSrcEl in _dicSrc.items():
        xTrgEl = dicTrg.get(sId)
        if isinstance(xTrgEl, dict) and isinstance(xSrcEl, dict):
            dicTrg[sId] = MergeDefaults(xTrgEl, xSrcEl, f"{_sContext}/{sId}", bStrict=False)
        else:
            dicTrg[sId] = copy.deepcopy(xSrcEl)
        # endif
    # endfor

    return dicTrg


# enddef
