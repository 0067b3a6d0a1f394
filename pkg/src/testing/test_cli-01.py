#!/usr/bin/env python3
# -*- coding:utf-8 -*-
###
# File: /testing/test_cli-01.py
# Created Date: Tuesday, March 12th 2024, 4:02:27 pm
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

import json
import math
import pytest

import tripsim
from tripsim.core import defines
from tripsim.core.cls_sim_error import CSimError, CSimError_Config, CSimError_Invariant


def _RunJson(_lArgs: list, _xCapSys) -> tuple:
    iExit = tripsim.run.RunCli(_lArgs)
    xCaptured = _xCapSys.readouterr()
    dicArtifact = json.loads(xCaptured.out) if iExit == 0 else None
    return iExit, dicArtifact, xCaptured.err


# enddef


class TestClass:

    ################################################################################
    def test_run_01(self):
        dicArtifact: dict = tripsim.run.Run(sCommand="paradox")

        assert dicArtifact["schema"] == "tripsim/1"
        assert dicArtifact["command"] == "paradox"
        assert dicArtifact["seed"] == 0
        assert dicArtifact["contradiction"] is True
        assert abs(dicArtifact["xxx"] - 1.0) < 1e-12

    # enddef

    ################################################################################
    def test_run_02(self):
        dicArtifact = tripsim.run.Run(sCommand="classify", dicParams={"named": "w"})
        assert dicArtifact["tag"] == "GenuineW"

        dicArtifact = tripsim.run.Run(
            sCommand="classify", dicParams={"amplitudes": [[0.6, 0], 0, 0, 0, 0, 0, 0, [0, 0.8]]}
        )
        assert dicArtifact["source"] == "custom"
        assert dicArtifact["tag"] == "GenuineGHZ"

    # enddef

    ################################################################################
    def test_run_error_01(self):
        with pytest.raises(CSimError) as xInfo:
            tripsim.run.Run(sCommand="teleportation")
        # endwith
        assert xInfo.value.GetRootType() == "config"

        with pytest.raises(CSimError) as xInfo:
            tripsim.run.Run(sCommand="paradox", dicParams={"states": "w"})
        # endwith
        assert xInfo.value.GetRootType() == "config"

        with pytest.raises(CSimError) as xInfo:
            tripsim.run.Run(sCommand="teleport", dicParams={"protocol": "w-channel", "a": 0.5, "normalize": False})
        # endwith
        assert xInfo.value.GetRootType() == "argument"
        assert tripsim.run.ExitCode(xInfo.value) == 2

    # enddef

    ################################################################################
    def test_validate_01(self):
        tripsim.Runner.ValidateArtifact({"p": 0.5, "fidelity": None, "rows": [{"avg_fidelity": 1.0}]})

        with pytest.raises(CSimError_Invariant):
            tripsim.Runner.ValidateArtifact({"rows": [{"avg_fidelity": 1.5}]})
        # endwith

        with pytest.raises(CSimError_Invariant):
            tripsim.Runner.ValidateArtifact({"invariant": math.nan})
        # endwith

        with pytest.raises(CSimError_Invariant):
            tripsim.Runner.ValidateArtifact({"success_probability": True})
        # endwith

    # enddef

    ################################################################################
    def test_cli_paradox_01(self, capsys):
        iExit, dicArtifact, _ = _RunJson(["paradox"], capsys)
        assert iExit == 0
        assert dicArtifact["contradiction"] is True

        iExit, dicArtifact, _ = _RunJson(["paradox", "--state", "w"], capsys)
        assert iExit == 0
        assert dicArtifact["contradiction"] is False

    # enddef

    ################################################################################
    def test_cli_teleport_01(self, capsys):
        iExit, dicArtifact, _ = _RunJson(
            ["teleport", "--protocol", "w-channel", "--a", "0.577", "--b", "0.577", "--c", "0.577"], capsys
        )
        assert iExit == 0
        assert abs(dicArtifact["success_probability"] - 2.0 / 3.0) < 1e-12
        assert abs(dicArtifact["success_fidelity"] - 1.0) < 1e-12
        assert len(dicArtifact["branches"]) == 8

    # enddef

    ################################################################################
    def test_cli_teleport_02(self, capsys):
        iExit = tripsim.run.RunCli(["teleport", "--protocol", "ghz-epr", "--out", "csv"])
        lLines = capsys.readouterr().out.strip().split("\n")
        assert iExit == 0
        assert lLines[0] == "label,p,correction,fidelity,success"
        assert len(lLines) == 9

    # enddef

    ################################################################################
    def test_cli_surface_01(self, capsys):
        iExit = tripsim.run.RunCli(["fidelity-surface", "--grid", "21", "--out", "csv"])
        lLines = capsys.readouterr().out.strip().split("\n")
        assert iExit == 0
        assert lLines[0] == "theta,phi,avg_fidelity,closed_form"
        assert len(lLines) == 442

    # enddef

    ################################################################################
    def test_cli_surface_02(self, capsys):
        # a single quadrature node cannot reproduce the closed form
        iExit, _, sErr = _RunJson(["fidelity-surface", "--grid", "3", "--nodes", "1", "--phases", "1"], capsys)
        assert iExit == 1
        assert "closed-form-fidelity" in sErr

    # enddef

    ################################################################################
    def test_cli_tables_01(self, capsys):
        iExit, dicArtifact, _ = _RunJson(["tables"], capsys)
        assert iExit == 0
        assert dicArtifact["max_deviation"] < 1e-12
        assert len(dicArtifact["charlie"]) == 8

        iExit, dicArtifact, _ = _RunJson(["tables", "--variant", "main-text"], capsys)
        assert iExit == 0
        assert dicArtifact["max_deviation"] > 0.1

    # enddef

    ################################################################################
    def test_cli_capacity_01(self, capsys, monkeypatch):
        monkeypatch.setattr(defines, "iQubitCap", 8)

        with pytest.raises(CSimError) as xInfo:
            tripsim.run.Run(sCommand="teleport", dicParams={"protocol": "ghz-via-3epr"})
        # endwith
        assert xInfo.value.GetRootType() == "capacity"

        iExit, _, sErr = _RunJson(["teleport", "--protocol", "ghz-via-3epr"], capsys)
        assert iExit == 1
        assert "exceeds the configured cap" in sErr

    # enddef

    ################################################################################
    def test_cli_exit_01(self, capsys):
        # usage errors
        assert tripsim.run.RunCli(["paradox", "--bogus", "1"]) == 2
        assert tripsim.run.RunCli(["teleport", "--protocol", "unknown"]) == 2
        assert tripsim.run.RunCli(["paradox", "--format", "csv"]) == 2
        assert tripsim.run.RunCli(["paradox", "--seed", "abc"]) == 2
        assert tripsim.run.RunCli([]) == 2

        sErr = capsys.readouterr().err
        assert "Error running tripsim" in sErr

    # enddef

    ################################################################################
    def test_cli_seed_01(self, capsys):
        lArgs = ["twirl", "--input", "random", "--samples", "200"]

        iExit, dicA, _ = _RunJson(lArgs + ["--seed", "5"], capsys)
        iExit, dicB, _ = _RunJson(lArgs + ["--seed", "5"], capsys)
        iExit, dicC, _ = _RunJson(lArgs + ["--seed", "6"], capsys)

        assert iExit == 0
        assert dicA == dicB
        assert dicA["seed"] == 5
        assert dicA["trace_distance"] != dicC["trace_distance"]

    # enddef

    ################################################################################
    def test_cli_seed_02(self, capsys, monkeypatch):
        monkeypatch.setenv("TRIPSIM_SEED", "17")
        iExit, dicArtifact, _ = _RunJson(["twirl", "--samples", "100", "--seed", "3"], capsys)
        assert iExit == 0
        assert dicArtifact["seed"] == 17

        monkeypatch.setenv("TRIPSIM_SEED", "-4")
        assert tripsim.run.RunCli(["twirl", "--samples", "100"]) == 2

    # enddef

    ################################################################################
    def test_cli_threads_01(self, capsys):
        lArgs = ["twirl", "--family", "isotropic", "--samples", "300", "--seed", "9"]
        _, dicA, _ = _RunJson(lArgs + ["--threads", "1"], capsys)
        _, dicB, _ = _RunJson(lArgs + ["--threads", "4"], capsys)
        assert dicA["trace_distance"] == dicB["trace_distance"]
        assert len(dicA["trace_distance_history"]) == 8

    # enddef

    ################################################################################
    def test_config_file_01(self, tmp_path, capsys):
        pathOut = tmp_path / "tables.json"
        pathCfg = tmp_path / "experiment.json5"
        pathCfg.write_text(
            "{\n"
            "  // erratum tables for a complex input\n"
            "  command: 'tables',\n"
            "  params: { c0: 0.6, c1: [0, 0.8] },\n"
            "  seed: 4,\n"
            f"  output: {{ path: '{pathOut.as_posix()}' }},\n"
            "}\n"
        )

        assert tripsim.run.RunCli(["run", str(pathCfg)]) == 0
        assert capsys.readouterr().out == ""

        dicArtifact = json.loads(pathOut.read_text())
        assert dicArtifact["command"] == "tables"
        assert dicArtifact["seed"] == 4
        assert dicArtifact["max_deviation"] < 1e-12

    # enddef

    ################################################################################
    def test_config_file_02(self, tmp_path):
        pathCfg = tmp_path / "bad.json"
        pathCfg.write_text(json.dumps({"command": "paradox", "parameters": {}}))
        assert tripsim.run.RunCli(["run", str(pathCfg)]) == 2

        assert tripsim.run.RunCli(["run", str(tmp_path / "missing.json")]) == 2

    # enddef

    ################################################################################
    def test_config_01(self):
        xConfig = tripsim.ExperimentConfig.FromDict(
            {"command": "noise-sweep", "params": {"grid": "0:1:0.5"}, "output": "sweep.csv"}
        )
        assert xConfig.sFormat == "csv"
        assert xConfig.iSeed == 0

        xConfig.ApplyEnvironment(dicEnv={"TRIPSIM_SEED": "123"})
        assert xConfig.iSeed == 123

        with pytest.raises(CSimError_Config):
            tripsim.ExperimentConfig.FromDict({"command": "paradox", "output": {"file": "x.json"}})
        # endwith

        with pytest.raises(CSimError_Config):
            tripsim.ExperimentConfig(sCommand="paradox", iSeed=2**64)
        # endwith

    # enddef

    ################################################################################
    def test_output_file_01(self, tmp_path):
        pathOut = tmp_path / "sweep.csv"
        iExit = tripsim.run.RunCli(["noise-sweep", "--grid", "0:1:0.25", "--out", str(pathOut)])
        assert iExit == 0

        lLines = pathOut.read_text().strip().split("\n")
        assert lLines[0] == "p,avg_fidelity"
        assert len(lLines) == 6
        assert lLines[1] == "0,1" or lLines[1].startswith("0,0.99999")

        assert tripsim.run.RunCli(["paradox", "--out", str(tmp_path / "nodir" / "x.json")]) == 2

    # enddef

    ################################################################################
    def test_log_01(self, tmp_path, capsys):
        assert tripsim.run.RunCli(["paradox", "--log", str(tmp_path)]) == 0
        lLogs = list(tmp_path.glob("tripsim-log_*.txt"))
        assert len(lLogs) == 1
        assert "Running 'paradox'" in lLogs[0].read_text()

        assert tripsim.run.RunCli(["paradox", "--verbose"]) == 0
        assert "Running 'paradox'" in capsys.readouterr().err

    # enddef


# endclass
