// Copyright 2026 The sgeo Authors
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

// Exercises the shared library through its C header only.

#include <cstring>
#include <string>

#include "doctest.h"

#include "sgeo/sgeo.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  sgeo_string_free(s);
  return out;
}

sgeo_graph* parse(const char* text) {
  sgeo_graph* g = nullptr;
  REQUIRE(sgeo_graph_parse(text, &g) == SGEO_OK);
  return g;
}

const char* kK23 = "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n";

}  // namespace

TEST_CASE("C API graph handles") {
  sgeo_graph* g = parse(kK23);
  CHECK(sgeo_graph_order(g) == 5);
  CHECK(sgeo_graph_size(g) == 6);
  sgeo_class_info info;
  REQUIRE(sgeo_classify(g, &info) == SGEO_OK);
  CHECK(info.bipartite == 1);
  CHECK(info.diameter == 2);
  char* count = nullptr;
  REQUIRE(sgeo_count_geodesics(g, 0, 1, &count) == SGEO_OK);
  CHECK(take(count) == "3");
  char* text = nullptr;
  REQUIRE(sgeo_graph_write(g, &text) == SGEO_OK);
  CHECK(take(text).rfind("5 6\n", 0) == 0);
  sgeo_graph_free(g);

  uint32_t endpoints[] = {0, 1, 1, 2};
  sgeo_graph* p3 = nullptr;
  REQUIRE(sgeo_graph_from_edges(3, endpoints, 2, &p3) == SGEO_OK);
  CHECK(sgeo_graph_size(p3) == 2);
  sgeo_graph_free(p3);
}

TEST_CASE("C API errors carry status and line") {
  sgeo_graph* g = nullptr;
  CHECK(sgeo_graph_parse("2 1\n0 0\n", &g) == SGEO_ERR_SELF_LOOP);
  CHECK(g == nullptr);
  CHECK(sgeo_last_error_line() == 2);
  CHECK(std::strlen(sgeo_last_error()) > 0);
  CHECK(std::string(sgeo_status_name(SGEO_ERR_SELF_LOOP)).size() > 0);
  CHECK(sgeo_graph_parse(nullptr, &g) == SGEO_ERR_INVALID_ARGUMENT);
}

TEST_CASE("C API recognition and certificates") {
  sgeo_graph* g = parse(kK23);
  uint32_t* set = nullptr;
  size_t count = 0;
  REQUIRE(sgeo_set_parse(g, "4 2 3", &set, &count) == SGEO_OK);
  CHECK(count == 3);
  CHECK(set[0] == 2);
  sgeo_result* r = nullptr;
  REQUIRE(sgeo_recognize(g, set, count, SGEO_RECOGNIZE_AUTO, 0, &r) == SGEO_OK);
  CHECK(sgeo_result_verdict(r) == SGEO_YES);
  CHECK(std::string(sgeo_result_algorithm(r)) == "diam2");
  char* cert = nullptr;
  REQUIRE(sgeo_result_certificate(r, &cert) == SGEO_OK);
  std::string cert_text = take(cert);
  int valid = 0;
  REQUIRE(sgeo_verify_certificate(g, set, count, cert_text.c_str(), &valid) == SGEO_OK);
  CHECK(valid == 1);
  char* json = nullptr;
  REQUIRE(sgeo_result_json(r, &json) == SGEO_OK);
  CHECK(take(json).find("\"YES\"") != std::string::npos);
  sgeo_result_free(r);
  sgeo_set_free(set);

  uint32_t small[] = {0, 1};
  REQUIRE(sgeo_recognize(g, small, 2, SGEO_RECOGNIZE_GENERAL, 0, &r) == SGEO_OK);
  CHECK(sgeo_result_verdict(r) == SGEO_NO);
  sgeo_result_free(r);
  CHECK(sgeo_recognize(g, small, 2, SGEO_RECOGNIZE_BLOCK, 0, &r) == SGEO_ERR_NOT_BLOCK_GRAPH);
  sgeo_graph_free(g);
}

TEST_CASE("C API solving and kernel") {
  sgeo_graph* g = parse(kK23);
  sgeo_result* r = nullptr;
  REQUIRE(sgeo_solve(g, SGEO_SOLVE_EXACT, -1, 0, &r) == SGEO_OK);
  size_t value = 0;
  CHECK(sgeo_result_value(r, &value) == 1);
  CHECK(value == 3);
  const uint32_t* witness = nullptr;
  CHECK(sgeo_result_set(r, &witness) == 3);
  CHECK(witness[0] == 2);
  sgeo_result_free(r);
  REQUIRE(sgeo_solve(g, SGEO_SOLVE_FPT, 2, 0, &r) == SGEO_OK);
  CHECK(sgeo_result_verdict(r) == SGEO_NO);
  sgeo_result_free(r);
  CHECK(sgeo_solve(g, SGEO_SOLVE_FPT, -1, 0, &r) == SGEO_ERR_INVALID_ARGUMENT);
  int reject = 0;
  REQUIRE(sgeo_kernel_check(g, 2, &reject) == SGEO_OK);
  CHECK(reject == 1);
  sgeo_graph_free(g);
}

TEST_CASE("C API reductions") {
  sgeo_formula* f = nullptr;
  REQUIRE(sgeo_formula_parse_dimacs("p cnf 2 3\n1 -2 0\n1 2 0\n-1 -2 0\n", &f) == SGEO_OK);
  CHECK(sgeo_formula_vars(f) == 2);
  CHECK(sgeo_formula_clauses(f) == 3);
  CHECK(sgeo_formula_is_normalized(f) == 1);
  sgeo_instance* inst = nullptr;
  REQUIRE(sgeo_reduce_formula(f, SGEO_REDUCE_3SAT3, &inst) == SGEO_OK);
  CHECK(sgeo_graph_order(sgeo_instance_graph(inst)) == 24);
  const uint32_t* s = nullptr;
  size_t count = sgeo_instance_set(inst, &s);
  CHECK(count == 5);
  int truth[] = {1, 0};
  char* cert = nullptr;
  REQUIRE(sgeo_instance_translate_sat_witness(inst, f, truth, 2, &cert) == SGEO_OK);
  int valid = 0;
  std::string cert_text = take(cert);
  REQUIRE(sgeo_verify_certificate(sgeo_instance_graph(inst), s, count, cert_text.c_str(),
                                  &valid) == SGEO_OK);
  CHECK(valid == 1);
  int wrong[] = {0, 0};
  CHECK(sgeo_instance_translate_sat_witness(inst, f, wrong, 2, &cert) ==
        SGEO_ERR_WITNESS_DOES_NOT_SATISFY);
  char* labels = nullptr;
  REQUIRE(sgeo_instance_labels(inst, &labels) == SGEO_OK);
  CHECK(take(labels).rfind("0 p1\n", 0) == 0);
  sgeo_instance_free(inst);
  sgeo_formula_free(f);

  sgeo_graph* split = parse("7 9\n4 5\n5 6\n4 6\n0 4\n0 6\n1 4\n2 5\n3 5\n3 6\n");
  REQUIRE(sgeo_reduce_graph(split, SGEO_REDUCE_DOMSET_SPLIT, 2, nullptr, 0, &inst) == SGEO_OK);
  CHECK(sgeo_instance_k(inst) == 9);
  CHECK(sgeo_graph_order(sgeo_instance_graph(inst)) == 15);
  sgeo_instance_free(inst);
  sgeo_graph_free(split);
}

TEST_CASE("C API generators and oracle") {
  sgeo_graph* g = nullptr;
  REQUIRE(sgeo_generate_graph("cactus", 10, 3, &g) == SGEO_OK);
  sgeo_class_info info;
  REQUIRE(sgeo_classify(g, &info) == SGEO_OK);
  CHECK(info.cactus == 1);
  sgeo_graph_free(g);
  CHECK(sgeo_generate_graph("nope", 10, 3, &g) == SGEO_ERR_INVALID_ARGUMENT);
  sgeo_formula* f = nullptr;
  REQUIRE(sgeo_generate_formula(4, 9, &f) == SGEO_OK);
  CHECK(sgeo_formula_is_normalized(f) == 1);
  sgeo_formula_free(f);

  sgeo_oracle_options opt{"block", 5, 5, 1, 1, nullptr};
  sgeo_oracle_report* rep = nullptr;
  REQUIRE(sgeo_oracle_run(&opt, &rep) == SGEO_OK);
  CHECK(sgeo_oracle_disagreements(rep) == 0);
  char* text = nullptr;
  REQUIRE(sgeo_oracle_report_text(rep, &text) == SGEO_OK);
  CHECK(!take(text).empty());
  sgeo_oracle_report_free(rep);
}
