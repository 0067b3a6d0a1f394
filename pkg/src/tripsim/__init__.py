#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /tripsim/__init__.py
# Created Date: Monday, March 4th 2024, 10:12:40 am
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


from .cls_runner import CRunner as Runner
from .cls_experiment_config import CExperimentConfig as ExperimentConfig
from .core.cls_sim_error import CSimError as SimError
from .core.cls_sim_trace import EWarningType
from . import core
from . import func
from . import util
from . import run
