#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: \tripsim\core\defines.py
# Created Date: Monday, March 4th 2024, 10:02:53 am
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

import re
import numpy as np

# Artifact schema tag
sSchema = "tripsim/1"

# Tolerance for normalization, hermiticity and trace checks at construction
fNormTol = 1e-9

# Tolerance held by the internal algebra
fAlgebraTol = 1e-12

# Branches below this probability are degenerate
fZeroProbTol = 1e-14

# Default register cap in qubits (dense storage only)
iQubitCap = 12

# Classification threshold and borderline band (fClassifyEps, fClassifyEps * fBorderlineFactor]
fClassifyEps = 1e-9
fBorderlineFactor = 1e3

# Input averaging quadrature: Gauss-Legendre nodes in |c0|^2 and uniform phase nodes
iQuadNodes = 64
iQuadPhases = 32

# Static chunk split of Monte-Carlo loops
iMonteCarloChunks = 8

# Single qubit Pauli matrices
aPauliI = np.array([[1.0, 0.0], [0.0, 1.0]], dtype=complex)
aPauliX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
aPauliY = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
aPauliZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

dicPauli = {
    "I": aPauliI,
    "X": aPauliX,
    "Y": aPauliY,
    "Z": aPauliZ,
}

# Correction alphabet per output qubit. Products are matrix products, i.e. "ZX" applies X first.
lCorrectionAlphabet = ["I", "X", "Z", "ZX"]

# Angle expressions: "pi/4", "0.25pi", "3pi/8", "-pi", "0.5*pi"
reAngle = re.compile(
    r"^\s*(?P<num>[+-]?(\d+(\.\d*)?|\.\d+)?([eE][+-]?\d+)?)\s*\*?\s*pi\s*(/\s*(?P<den>\d+(\.\d*)?))?\s*$"
)

# Sweep grid expression "start:stop:step"
reGrid = re.compile(r"^\s*(?P<start>[^:]+):(?P<stop>[^:]+):(?P<step>[^:]+)\s*$")
