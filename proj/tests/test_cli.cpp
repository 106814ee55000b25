#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "smallq/errors.hpp"
#include "smallq/report.hpp"

using namespace smallq;

namespace {

RunConfig make_cfg(const std::string& type, long order,
                   const std::string& lattice = "sc") {
  RunConfig cfg;
  cfg.type = type;
  cfg.lattice = lattice;
  cfg.orders = {order};
  return cfg;
}

#ifdef SMALLQ_CLI_PATH
int run_cli(const std::string& args) {
  std::string cmd = std::string(SMALLQ_CLI_PATH) + " " + args +
                    " > /dev/null 2> /dev/null";
  int status = std::system(cmd.c_str());
  return (status >> 8) & 0xff;
}
#endif

}  // namespace

TEST_CASE("config round trip") {
  RunConfig cfg = make_cfg("B2", 4);
  cfg.q_exponents = {1};
  cfg.weights = {"1,0", "0,2"};
  cfg.height = 7;
  cfg.format = "text";
  cfg.seed = 99;
  cfg.out = "/tmp/x.json";
  RunConfig back = config_from_json(config_json(cfg));
  CHECK(config_json(back) == config_json(cfg));
}

TEST_CASE("config construction and validation") {
  RunConfig cfg = make_cfg("B2", 4);
  CartanDatum d = config_datum(cfg);
  CHECK(d.rank() == 2);
  QuantumParameter p = config_qparam(d, cfg);
  CHECK(p.ambient_order() == 4);
  CHECK(config_lattice(d, cfg) == Lattice::full(2));

  cfg.lattice = "adj";
  CHECK(config_lattice(d, cfg) == root_lattice(d));

  RunConfig bad = cfg;
  bad.orders.clear();
  CHECK_THROWS_AS(config_qparam(d, bad), InputError);

  CHECK(parse_weight("1,0", 2) == Weight{1, 0});
  CHECK_THROWS_AS(parse_weight("1", 2), InputError);
  CHECK_THROWS_AS(parse_weight("1,x", 2), InputError);
}

TEST_CASE("report payload for B2 sc at order 4") {
  Json j = report_json(make_cfg("B2", 4));
  std::multiset<long> ls;
  for (const Json& row : j["l_table"]) ls.insert(row["l"].get<long>());
  CHECK(ls == std::multiset<long>{1, 1, 2, 2});
  CHECK(j["dual"]["dual_type"] == "C2");
  CHECK(j["cardinalities"]["dim_ubar"] == 32);
  CHECK(j["rho_l"].size() == 2);
}

TEST_CASE("decompose payload") {
  RunConfig cfg = make_cfg("A1", 6);
  cfg.weights = {"7"};
  Json j = decompose_json(cfg);
  CHECK(j["lambda0"] == Json::array({1}));
  CHECK(j["lambda1"] == Json::array({6}));
  CHECK(j["l_simple"] == Json::array({3}));

  cfg.weights = {"-1"};
  CHECK_THROWS_AS(decompose_json(cfg), NotDominant);
}

TEST_CASE("dual payload") {
  Json j = dual_json(make_cfg("B3", 4));
  CHECK(j["dual_type"] == "C3");
  CHECK(j["dual_cartan"].size() == 3);
  CHECK(j["epsilon"].size() == 3);
  CHECK(j["index_x_xstar"] == 2);
  CHECK(j["x_star_basis"].size() == 3);
  CHECK(j["lq_basis"].size() == 3);
}

TEST_CASE("dims payload") {
  Json j = dims_json(make_cfg("A1", 4));
  CHECK(j["cardinalities"]["dim_ubar"] == 8);
  CHECK(j["character_groups"]["a"] == Json::array({8}));
  CHECK(j["character_groups"]["abar"] == Json::array({2}));
  CHECK(j["character_groups"]["psi"] == Json::array({4}));
  CHECK(j["delta_l"].size() == 1);
  CHECK(j["recipes"].size() == 2);  // E and F recipe for the single root
}

TEST_CASE("verify payload") {
  bool ok = false;
  Json j = verify_json(make_cfg("G2", 4), "appendix", &ok);
  CHECK(ok);
  REQUIRE(!j["verdicts"].empty());
  for (const Json& v : j["verdicts"]) CHECK(v["status"] == "pass");
  CHECK(j["all_pass"] == true);

  CHECK_THROWS_AS(verify_json(make_cfg("A2", 3), "appendix", &ok), InputError);
}

TEST_CASE("modules payload") {
  RunConfig cfg = make_cfg("A1", 3);
  cfg.weights = {"1"};
  bool ok = false;
  Json j = modules_json(cfg, "verma", &ok);
  CHECK(ok);
  CHECK(j["dimension"] == 3);
  CHECK(j["weight_support"].size() == 3);

  Json s = modules_json(cfg, "simple", &ok);
  CHECK(ok);
  CHECK(s["dimension"] == 2);

  Json st = modules_json(cfg, "steinberg", &ok);
  CHECK(ok);
  CHECK(st["dimension"] == 3);
  for (const Json& v : st["verdicts"]) CHECK(v["status"] == "pass");

  cfg.weights = {"-2"};
  CHECK_THROWS_AS(modules_json(cfg, "simple", &ok), InputError);
}

TEST_CASE("sweep is deterministic and complete") {
  std::vector<std::string> types = {"A1", "A2", "B2", "G2"};
  std::vector<long> orders;
  for (long n = 1; n <= 12; ++n) orders.push_back(n);
  Json a = sweep_json(types, orders, "sc");
  CHECK(a["records"].size() == 48);
  // (B3, order 4) carries the Langlands-dual type.
  Json b3 = sweep_json({"B3"}, {4}, "sc");
  CHECK(b3["records"][0]["dual_type"] == "C3");
  // Rerun is byte-identical.
  Json b = sweep_json(types, orders, "sc");
  CHECK(a.dump(2) == b.dump(2));
}

TEST_CASE("text rendering and file output") {
  RunConfig cfg = make_cfg("A1", 6);
  cfg.weights = {"7"};
  Json j = decompose_json(cfg);
  std::string txt = render_text(j);
  CHECK(txt.find("lambda0") != std::string::npos);
  CHECK(txt.find("{") == std::string::npos);

  cfg.format = "text";
  cfg.out = "/tmp/smallq_cli_test.txt";
  write_output(j, cfg);
  std::ifstream in(cfg.out);
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(body == txt);

  cfg.out = "/nonexistent-dir/x.txt";
  CHECK_THROWS_AS(write_output(j, cfg), IoError);

  cfg.out = "";
  cfg.format = "yaml";
  CHECK_THROWS_AS(write_output(j, cfg), InputError);
}

#ifdef SMALLQ_CLI_PATH
TEST_CASE("binary exit codes") {
  CHECK(run_cli("report --type B2 --lattice sc --order 4") == 0);
  CHECK(run_cli("decompose --type A1 --order 6 --weight 7") == 0);
  CHECK(run_cli("verify appendix --type G2 --order 4") == 0);
  CHECK(run_cli("sweep --out /tmp/smallq_sweep_test.json") == 0);
  // Input problems exit 2.
  CHECK(run_cli("decompose --type A1 --order 6 --weight -1") == 2);
  CHECK(run_cli("report --type Z9 --order 4") == 2);
  CHECK(run_cli("verify appendix --type A2 --order 3") == 2);
  CHECK(run_cli("nonsense") == 2);
  CHECK(run_cli("sweep --out /nonexistent-dir/s.json") == 2);
}
#endif
