#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\core\__init__.py
# Created Date: Monday, March 4th 2024, 9:05:12 am
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

from . import defines
from . import qstate
from .cls_state import CStateVector, CStateRaw, CInputQubit
from .cls_density import CDensityOp
from .cls_local_op import CLocalOperator
