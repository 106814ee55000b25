#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smallq/errors.hpp"
#include "smallq/report.hpp"

namespace {

using smallq::Json;
using smallq::RunConfig;

// Input-shaped failures exit 2; everything else (including verification
// failures) exits 1.  Exit 0 only when all requested checks pass.
bool is_input_tag(const std::string& tag) {
  static const char* tags[] = {"InputError",     "NotDominant",
                               "NotFiniteType", "NotInCharacterLattice",
                               "OutsideRootLattice", "IoError",
                               "RankTooLarge"};
  for (const char* t : tags)
    if (tag == t) return true;
  return false;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::string& orders_csv,
                      std::string& exps_csv) {
  cmd->add_option("--type", cfg.type, "Cartan type, e.g. A2, B3, A1xA1");
  cmd->add_option("--lattice", cfg.lattice,
                  "sc | adj | path to a rank x rank basis matrix file");
  cmd->add_option("--order,--orders", orders_csv,
                  "root-of-unity order(s), comma-separated per component");
  cmd->add_option("--q-exponents", exps_csv,
                  "explicit exponents at ambient order = first --order");
  cmd->add_option("--weight", cfg.weights,
                  "weight in fundamental-weight coordinates (repeatable)");
  cmd->add_option("--height", cfg.height, "symbolic window height override");
  cmd->add_option("--format", cfg.format, "json | text");
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
  cmd->add_option("--out", cfg.out, "write output to this path");
}

std::vector<long> parse_csv_longs(const std::string& csv) {
  std::vector<long> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t next = csv.find(',', pos);
    std::string item = csv.substr(pos, next == std::string::npos
                                           ? std::string::npos
                                           : next - pos);
    if (!item.empty()) {
      try {
        size_t used = 0;
        out.push_back(std::stol(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw smallq::InputError("cannot parse integer list entry '" + item +
                                 "'");
      }
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smallest quantum algebras at roots of unity"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string orders_csv, exps_csv;

  CLI::App* c_report = app.add_subcommand("report", "full lattice-layer report");
  CLI::App* c_decompose =
      app.add_subcommand("decompose", "Steinberg weight decomposition");
  CLI::App* c_dual = app.add_subcommand("dual", "quantum Frobenius dual datum");
  CLI::App* c_dims =
      app.add_subcommand("dims", "cardinalities, Delta_l and recipes");
  CLI::App* c_verify =
      app.add_subcommand("verify", "symbolic identity verification");
  CLI::App* c_modules =
      app.add_subcommand("modules", "small-algebra module computations");
  CLI::App* c_sweep = app.add_subcommand("sweep", "regression sweep table");

  for (CLI::App* c : {c_report, c_decompose, c_dual, c_dims, c_sweep})
    add_common_flags(c, cfg, orders_csv, exps_csv);

  std::string verify_which, modules_which;
  for (const char* w : {"pbw", "braid", "serre", "appendix", "normality"}) {
    CLI::App* sub = c_verify->add_subcommand(w);
    add_common_flags(sub, cfg, orders_csv, exps_csv);
    sub->parse_complete_callback([&verify_which, w] { verify_which = w; });
  }
  for (const char* w : {"verma", "simple", "steinberg", "ext"}) {
    CLI::App* sub = c_modules->add_subcommand(w);
    add_common_flags(sub, cfg, orders_csv, exps_csv);
    sub->parse_complete_callback([&modules_which, w] { modules_which = w; });
  }
  c_verify->require_subcommand(1);
  c_modules->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!orders_csv.empty()) cfg.orders = parse_csv_longs(orders_csv);
    if (!exps_csv.empty()) cfg.q_exponents = parse_csv_longs(exps_csv);

    bool ok = true;
    Json out;
    if (c_report->parsed()) {
      out = smallq::report_json(cfg);
    } else if (c_decompose->parsed()) {
      out = smallq::decompose_json(cfg);
    } else if (c_dual->parsed()) {
      out = smallq::dual_json(cfg);
    } else if (c_dims->parsed()) {
      out = smallq::dims_json(cfg);
    } else if (c_verify->parsed()) {
      out = smallq::verify_json(cfg, verify_which, &ok);
    } else if (c_modules->parsed()) {
      out = smallq::modules_json(cfg, modules_which, &ok);
    } else if (c_sweep->parsed()) {
      std::vector<std::string> types{"A1", "A2", "B2", "G2"};
      std::vector<long> orders;
      // --type / --orders override the default sweep grid.
      if (c_sweep->count("--type")) {
        types.clear();
        size_t pos = 0;
        while (pos <= cfg.type.size()) {
          size_t next = cfg.type.find(',', pos);
          types.push_back(cfg.type.substr(
              pos, next == std::string::npos ? std::string::npos : next - pos));
          if (next == std::string::npos) break;
          pos = next + 1;
        }
      }
      if (!cfg.orders.empty())
        orders = cfg.orders;
      else
        for (long n = 1; n <= 12; ++n) orders.push_back(n);
      out = smallq::sweep_json(types, orders, cfg.lattice);
    }
    smallq::write_output(out, cfg);
    return ok ? 0 : 1;
  } catch (const smallq::Error& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return is_input_tag(e.tag()) ? 2 : 1;
  } catch (const std::exception& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
