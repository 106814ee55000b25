#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "smallq/qparam.hpp"

namespace smallq {

// Insertion-ordered JSON keeps record layouts stable, so sweep reruns are
// byte-identical.
using Json = nlohmann::ordered_json;

// Parsed command-line configuration shared by all subcommands.
struct RunConfig {
  std::string type = "A1";
  std::string lattice = "sc";        // sc | adj | path to a basis matrix file
  std::vector<long> orders;          // one global order or one per component
  std::vector<long> q_exponents;     // optional, at ambient order orders[0]
  std::vector<std::string> weights;  // fundamental-weight coordinates, csv
  long height = 0;                   // symbolic window override
  std::string format = "json";       // json | text
  unsigned long seed = 20240817;
  std::string out;                   // output path ("" = stdout)
};

Json config_json(const RunConfig& cfg);
RunConfig config_from_json(const Json& j);

CartanDatum config_datum(const RunConfig& cfg);
QuantumParameter config_qparam(const CartanDatum& datum, const RunConfig& cfg);
Lattice config_lattice(const CartanDatum& datum, const RunConfig& cfg);
Weight parse_weight(const std::string& csv, int rank);

// Subcommand payloads.  Functions taking `ok` report verification outcomes:
// *ok is cleared when any verdict fails (exit code 1 in the CLI).
Json report_json(const RunConfig& cfg);
Json decompose_json(const RunConfig& cfg);
Json dual_json(const RunConfig& cfg);
Json dims_json(const RunConfig& cfg);
Json verify_json(const RunConfig& cfg, const std::string& which, bool* ok);
Json modules_json(const RunConfig& cfg, const std::string& which, bool* ok);

// One lattice-layer record per (type, order), types outer, orders inner.
Json sweep_json(const std::vector<std::string>& types,
                const std::vector<long>& orders, const std::string& lattice);

// Pure text rendering of the same data (format = text).
std::string render_text(const Json& j);

// Serialize per cfg.format and write to cfg.out or stdout; IoError on an
// unwritable path.
void write_output(const Json& j, const RunConfig& cfg);

}  // namespace smallq
