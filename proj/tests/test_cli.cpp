// Copyright 2026 The hetgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <string>

#include "cli_runner.hpp"
#include "doctest.h"

using hetgraph::testing::run_cli;
using hetgraph::testing::ScratchDir;
using hetgraph::testing::slurp;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("synth, stats and metrics on fig2") {
  ScratchDir dir("cli");
  const std::string fig2 = dir / "fig2";
  REQUIRE(run_cli("synth fig2 --out " + fig2).exit_code == 0);

  auto stats = run_cli("stats " + fig2 + " --format json");
  CHECK(stats.exit_code == 0);
  CHECK(contains(stats.out, "\"nodes\": 113"));
  CHECK(contains(stats.out, "\"edges\": 1480"));
  CHECK(contains(stats.out, "\"classes\": 3"));

  auto node = run_cli("metrics " + fig2 + " --level node --metric 2ncs");
  CHECK(node.exit_code == 0);
  CHECK(contains(node.out, "node_id,two_ncs\n0,0.853333\n"));

  auto all = run_cli("metrics " + fig2 + " --level node --metric all");
  CHECK(contains(all.out, "node_id,local_h,ccns_node,two_ncs\n0,0,0.242536,0.853333\n"));

  auto graph = run_cli("metrics " + fig2 + " --level graph --reduction weighted_diag");
  CHECK(contains(graph.out, "ccns,0.892735"));
  CHECK(contains(graph.out, "two_ncs,0.660222,113,0"));
}

TEST_CASE("masked metrics read the node list") {
  ScratchDir dir("cli_mask");
  const std::string fig2 = dir / "fig2";
  REQUIRE(run_cli("synth fig2 --out " + fig2).exit_code == 0);
  REQUIRE(run_cli("split " + fig2 + " --seed 3 --out " + (dir / "split")).exit_code == 0);
  auto masked = run_cli("metrics " + fig2 + " --level graph --metric 2ncs --mask " +
                        (dir / "split/train.txt"));
  CHECK(masked.exit_code == 0);
  CHECK(contains(masked.out, "two_ncs,"));
  CHECK(contains(masked.out, ",67,"));  // floor(0.6 * 113) visible nodes averaged
}

TEST_CASE("leave-one-out on fig2") {
  ScratchDir dir("cli_loo");
  const std::string fig2 = dir / "fig2";
  REQUIRE(run_cli("synth fig2 --out " + fig2).exit_code == 0);
  auto r = run_cli("sgcn loo " + fig2 + " --node 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "predicted=red correct=true\n");

  auto bad = run_cli("sgcn loo " + fig2 + " --node 999");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.out, "999"));
}

TEST_CASE("exit codes") {
  auto missing = run_cli("stats /no/such/dataset");
  CHECK(missing.exit_code == 2);
  CHECK(contains(missing.out, "/no/such/dataset"));
  CHECK(run_cli("metrics").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);

  ScratchDir dir("cli_exit");
  std::ofstream(dir / "m.csv") << "node_id,x\n0,1\n1,1\n2,1\n";
  std::ofstream(dir / "p.csv") << "node_id,correct\n0,1\n1,0\n2,1\n";
  auto undefined = run_cli("correlate --metrics " + (dir / "m.csv") + " --preds " + (dir / "p.csv"));
  CHECK(undefined.exit_code == 1);
}

TEST_CASE("training is reproducible byte for byte") {
  ScratchDir dir("cli_train");
  const std::string pp = dir / "pp";
  REQUIRE(run_cli("synth pp --sizes 30,30,30 --pin 0.2 --pout 0.05 --seed 4 --out " + pp).exit_code ==
          0);
  const std::string args = "sgcn train " + pp + " --epochs 40 --batch-size 16 --seed 9 --init uniform";
  REQUIRE(run_cli(args + " --out " + (dir / "a.csv")).exit_code == 0);
  REQUIRE(run_cli(args + " --out " + (dir / "b.csv")).exit_code == 0);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(slurp(dir / "a.csv.manifest.json") == slurp(dir / "b.csv.manifest.json"));
  CHECK(contains(slurp(dir / "a.csv"), "node_id,true_label,pred_label,correct\n"));
}

TEST_CASE("own predictions feed the correlation report") {
  ScratchDir dir("cli_corr");
  const std::string pp = dir / "pp";
  REQUIRE(run_cli("synth pp --sizes 60,60 --pin 0.08 --pout 0.06 --seed 1 --out " + pp).exit_code == 0);
  REQUIRE(run_cli("sgcn train " + pp + " --eval all --epochs 20 --lr 0.05 --out " +
                  (dir / "preds.csv"))
              .exit_code == 0);
  REQUIRE(run_cli("metrics " + pp + " --level node --out " + (dir / "m.csv")).exit_code == 0);
  auto r = run_cli("correlate --metrics " + (dir / "m.csv") + " --preds " + (dir / "preds.csv") +
                   " --column two_ncs --dataset pp --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "dataset,metric,level,value,model,accuracy,r,method,dropped\n"));
  CHECK(contains(r.out, "pp,two_ncs,node,"));

  std::ofstream(dir / "table.csv") << "dataset,h,ccns,two_ncs,sgcn\n"
                                      "a,0.2,0.5,0.3,0.3\n"
                                      "b,0.9,0.4,0.8,0.8\n";
  auto t = run_cli("correlate --table " + (dir / "table.csv"));
  CHECK(t.exit_code == 0);
  CHECK(contains(t.out, "\"metric\": \"two_ncs\""));
  CHECK(contains(t.out, "\"r\": 1"));
}
