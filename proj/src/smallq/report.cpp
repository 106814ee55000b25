#include "smallq/report.hpp"

#include <fstream>
#include <sstream>

#include "smallq/errors.hpp"
#include "smallq/repkernel.hpp"
#include "smallq/smalldata.hpp"
#include "smallq/steinberg.hpp"
#include "smallq/verify.hpp"

namespace smallq {

namespace {

Json json_int(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Json json_intmat(const IntMat& m) {
  Json rows = Json::array();
  for (auto& r : m) {
    Json row = Json::array();
    for (auto& v : r) row.push_back(json_int(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_weight(const Weight& w) {
  Json a = Json::array();
  for (long v : w) a.push_back(v);
  return a;
}

Json l_table_json(const CartanDatum& datum, const QuantumParameter& p) {
  Json table = Json::array();
  for (const Root& g : datum.positive_roots()) {
    Json row;
    row["root"] = root_name(g.q_coords);
    row["d"] = g.d;
    row["l"] = p.l_value(datum, g);
    table.push_back(std::move(row));
  }
  return table;
}

std::string dual_type_string(const DualDatum& dd) {
  std::string s;
  for (const DualComponent& c : dd.dual_components) {
    if (!s.empty()) s += "x";
    s += c.letter;
    s += std::to_string(c.rank);
  }
  return s;
}

Json cardinalities_json(const SmallAlgebraCard& card) {
  Json j;
  j["dim_v_frak_plus"] = json_int(card.dim_v_frak_plus);
  j["dim_v_frak"] = json_int(card.dim_v_frak);
  j["dim_v"] = json_int(card.dim_v);
  j["dim_ubar"] = json_int(card.dim_ubar);
  j["order_A"] = json_int(card.order_A);
  j["order_Abar"] = json_int(card.order_Abar);
  j["order_Psi"] = json_int(card.order_Psi);
  j["index_x_xstar"] = json_int(card.index_x_xstar);
  return j;
}

Json verdicts_json(const std::vector<Verdict>& vs) {
  Json arr = Json::array();
  for (const Verdict& v : vs) {
    Json j;
    j["identity_id"] = v.identity_id;
    j["status"] = v.pass ? "pass" : "fail";
    j["window_height"] = v.window_height;
    j["witness"] = v.witness;
    arr.push_back(std::move(j));
  }
  return arr;
}

Verdict make_verdict(const std::string& id, bool pass,
                     const std::string& witness = "") {
  Verdict v;
  v.identity_id = id;
  v.pass = pass;
  v.witness = pass ? "" : witness;
  return v;
}

Json support_json(const WeightModule& m) {
  Json arr = Json::array();
  for (auto& [w, mult] : m.weight_spaces()) {
    Json j;
    j["weight"] = json_weight(w);
    j["dim"] = mult;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<long> parse_long_list(const std::string& csv,
                                  const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      long v = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("cannot parse " + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("empty " + what + " list");
  return out;
}

Weight required_weight(const RunConfig& cfg, const CartanDatum& datum,
                       size_t idx = 0) {
  if (cfg.weights.size() <= idx)
    throw InputError("this subcommand requires --weight");
  return parse_weight(cfg.weights[idx], datum.rank());
}

}  // namespace

Json config_json(const RunConfig& cfg) {
  Json j;
  j["type"] = cfg.type;
  j["lattice"] = cfg.lattice;
  j["orders"] = cfg.orders;
  j["q_exponents"] = cfg.q_exponents;
  j["weights"] = cfg.weights;
  j["height"] = cfg.height;
  j["format"] = cfg.format;
  j["seed"] = cfg.seed;
  j["out"] = cfg.out;
  return j;
}

RunConfig config_from_json(const Json& j) {
  RunConfig cfg;
  cfg.type = j.at("type").get<std::string>();
  cfg.lattice = j.at("lattice").get<std::string>();
  cfg.orders = j.at("orders").get<std::vector<long>>();
  cfg.q_exponents = j.at("q_exponents").get<std::vector<long>>();
  cfg.weights = j.at("weights").get<std::vector<std::string>>();
  cfg.height = j.at("height").get<long>();
  cfg.format = j.at("format").get<std::string>();
  cfg.seed = j.at("seed").get<unsigned long>();
  cfg.out = j.at("out").get<std::string>();
  return cfg;
}

CartanDatum config_datum(const RunConfig& cfg) {
  return CartanDatum::parse(cfg.type);
}

QuantumParameter config_qparam(const CartanDatum& datum, const RunConfig& cfg) {
  if (cfg.orders.empty()) throw InputError("--order is required");
  if (!cfg.q_exponents.empty())
    return QuantumParameter::from_exponents(datum, cfg.orders.front(),
                                            cfg.q_exponents);
  if (cfg.orders.size() > 1)
    return QuantumParameter::from_orders(datum, cfg.orders);
  return QuantumParameter::from_order(datum, cfg.orders.front());
}

Lattice config_lattice(const CartanDatum& datum, const RunConfig& cfg) {
  if (cfg.lattice == "sc") return Lattice::full(datum.rank());
  if (cfg.lattice == "adj") return root_lattice(datum);
  std::ifstream in(cfg.lattice);
  if (!in) throw InputError("cannot open lattice basis file " + cfg.lattice);
  IntMat rows;
  for (int r = 0; r < datum.rank(); ++r) {
    std::vector<Integer> row;
    for (int c = 0; c < datum.rank(); ++c) {
      long v;
      if (!(in >> v))
        throw InputError("lattice basis file needs a " +
                         std::to_string(datum.rank()) + "x" +
                         std::to_string(datum.rank()) + " integer matrix");
      row.emplace_back(v);
    }
    rows.push_back(std::move(row));
  }
  Lattice lat = Lattice::span(rows, datum.rank());
  if (!lat.is_full_rank() || !lat.contains(root_lattice(datum)))
    throw InputError("character lattice must contain the root lattice");
  return lat;
}

Weight parse_weight(const std::string& csv, int rank) {
  std::vector<long> vals = parse_long_list(csv, "weight");
  if ((int)vals.size() != rank)
    throw InputError("weight needs " + std::to_string(rank) +
                     " fundamental-weight coordinates, got " +
                     std::to_string(vals.size()));
  return vals;
}

Json report_json(const RunConfig& cfg) {
  CartanDatum datum = config_datum(cfg);
  QuantumParameter p = config_qparam(datum, cfg);
  Lattice x = config_lattice(datum, cfg);

  Json j;
  j["config"] = config_json(cfg);
  j["l_table"] = l_table_json(datum, p);

  DeltaLSet dl = delta_l(datum, p);
  Json dlj = Json::array();
  for (const Root& g : dl.roots) dlj.push_back(root_name(g.q_coords));
  j["delta_l"] = dlj;

  DualDatum dd = compute_dual_datum(datum, p, x);
  Json dual;
  dual["dual_type"] = dual_type_string(dd);
  dual["epsilon"] = dd.epsilon_per_simple;
  dual["index_x_xstar"] = json_int(dd.index_x_xstar);
  j["dual"] = std::move(dual);

  j["cardinalities"] = cardinalities_json(cardinalities(datum, p, x));
  j["rho_l"] = json_weight(rho_l(datum, p));

  Json decs = Json::array();
  for (const std::string& wstr : cfg.weights) {
    Weight lam = parse_weight(wstr, datum.rank());
    SteinbergSplit split = steinberg_decompose(datum, p, lam);
    Json d;
    d["lambda"] = json_weight(lam);
    d["lambda0"] = json_weight(split.lambda0);
    d["lambda1"] = json_weight(split.lambda1);
    decs.push_back(std::move(d));
  }
  j["decompositions"] = std::move(decs);
  j["verdicts"] = Json::array();
  return j;
}

Json decompose_json(const RunConfig& cfg) {
  CartanDatum datum = config_datum(cfg);
  QuantumParameter p = config_qparam(datum, cfg);
  Weight lam = required_weight(cfg, datum);
  SteinbergSplit split = steinberg_decompose(datum, p, lam);
  Json j;
  j["config"] = config_json(cfg);
  j["lambda"] = json_weight(lam);
  j["lambda0"] = json_weight(split.lambda0);
  j["lambda1"] = json_weight(split.lambda1);
  Json ls = Json::array();
  for (int i = 0; i < datum.rank(); ++i) ls.push_back(p.l_simple(datum, i));
  j["l_simple"] = std::move(ls);
  return j;
}

Json dual_json(const RunConfig& cfg) {
  CartanDatum datum = config_datum(cfg);
  QuantumParameter p = config_qparam(datum, cfg);
  Lattice x = config_lattice(datum, cfg);
  DualDatum dd = compute_dual_datum(datum, p, x);
  Json j;
  j["config"] = config_json(cfg);
  j["dual_type"] = dual_type_string(dd);
  j["dual_cartan"] = json_intmat(dd.dual_cartan);
  j["epsilon"] = dd.epsilon_per_simple;
  j["index_x_xstar"] = json_int(dd.index_x_xstar);
  j["x_star_basis"] = json_intmat(dd.x_star.basis());
  j["lq_basis"] = json_intmat(dd.lq.basis());
  return j;
}

Json dims_json(const RunConfig& cfg) {
  CartanDatum datum = config_datum(cfg);
  QuantumParameter p = config_qparam(datum, cfg);
  Lattice x = config_lattice(datum, cfg);
  Json j;
  j["config"] = config_json(cfg);
  j["cardinalities"] = cardinalities_json(cardinalities(datum, p, x));

  CharacterGroups cg = character_groups(datum, p, x);
  Json groups;
  Json a = Json::array(), abar = Json::array(), psi = Json::array();
  for (auto& v : cg.a) a.push_back(json_int(v));
  for (auto& v : cg.abar) abar.push_back(json_int(v));
  for (auto& v : cg.psi) psi.push_back(json_int(v));
  groups["a"] = std::move(a);
  groups["abar"] = std::move(abar);
  groups["psi"] = std::move(psi);
  j["character_groups"] = std::move(groups);

  DeltaLSet dl = delta_l(datum, p);
  Json roots = Json::array(), recipes = Json::array();
  for (const Root& g : dl.roots) roots.push_back(root_name(g.q_coords));
  for (const GeneratorRecipe& r : dl.recipes_e) recipes.push_back(recipe_str(r));
  for (const GeneratorRecipe& r : dl.recipes_f) recipes.push_back(recipe_str(r));
  j["delta_l"] = std::move(roots);
  j["recipes"] = std::move(recipes);
  return j;
}

Json verify_json(const RunConfig& cfg, const std::string& which, bool* ok) {
  CartanDatum datum = config_datum(cfg);
  QuantumParameter p = config_qparam(datum, cfg);
  std::vector<Verdict> vs;
  if (which == "pbw")
    vs = verify_pbw(datum, p, cfg.height);
  else if (which == "braid")
    vs = verify_braid(datum, p, cfg.height);
  else if (which == "serre")
    vs = verify_serre(datum, p, cfg.height);
  else if (which == "appendix")
    vs = verify_appendix_braid(datum, p, cfg.height);
  else if (which == "normality")
    vs = verify_normality_commutators(datum, p, cfg.height);
  else
    throw InputError("unknown verification '" + which + "'");
  Json j;
  j["config"] = config_json(cfg);
  j["verdicts"] = verdicts_json(vs);
  j["all_pass"] = all_pass(vs);
  if (ok) *ok = all_pass(vs);
  return j;
}

Json modules_json(const RunConfig& cfg, const std::string& which, bool* ok) {
  CartanDatum datum = config_datum(cfg);
  QuantumParameter p = config_qparam(datum, cfg);
  Lattice x = config_lattice(datum, cfg);
  RepContext ctx(datum, p, x, cfg.height);

  std::vector<Verdict> vs;
  Json j;
  j["config"] = config_json(cfg);

  if (which == "verma") {
    Weight lam = required_weight(cfg, datum);
    WeightModule m = baby_verma(ctx, lam);
    SmallAlgebraCard card = cardinalities(datum, p, x);
    vs.push_back(make_verdict(
        "verma_dimension", Integer((long)m.dim()) == card.dim_v_frak_plus,
        "dim " + std::to_string(m.dim())));
    j["dimension"] = m.dim();
    j["weight_support"] = support_json(m);
  } else if (which == "simple") {
    Weight lam = required_weight(cfg, datum);
    if (!datum.is_dominant(lam))
      throw InputError("simple-module labels must be dominant");
    WeightModule m = simple_module(ctx, lam);
    auto spaces = m.weight_spaces();
    auto it = spaces.find(lam);
    vs.push_back(make_verdict("simple_top_multiplicity_one",
                              it != spaces.end() && it->second == 1));
    j["dimension"] = m.dim();
    j["weight_support"] = support_json(m);
  } else if (which == "steinberg") {
    FiniteDimAlgebra alg(ctx);
    WeightModule st = steinberg_module(ctx);
    SmallAlgebraCard card = cardinalities(datum, p, x);
    vs.push_back(make_verdict(
        "steinberg_dimension", Integer((long)st.dim()) == card.dim_v_frak_plus,
        "dim " + std::to_string(st.dim())));
    Weight rl = rho_l_in(datum, p, x);
    vs.push_back(make_verdict(
        "steinberg_rind_iso",
        module_iso_test(ctx, st, rind(ctx, rl)).has_value()));
    vs.push_back(make_verdict(
        "steinberg_self_dual",
        module_iso_test(ctx, st, contravariant_dual(ctx, st)).has_value()));
    vs.push_back(make_verdict("steinberg_simple",
                              socle(alg, st).dim() == st.dim()));
    vs.push_back(make_verdict("steinberg_projective", is_projective(ctx, st)));
    vs.push_back(make_verdict("steinberg_injective", is_injective(ctx, st)));
    j["dimension"] = st.dim();
    j["weight_support"] = support_json(st);
  } else if (which == "ext") {
    Weight lam = required_weight(cfg, datum, 0);
    Weight mu = cfg.weights.size() > 1 ? parse_weight(cfg.weights[1], datum.rank())
                                       : lam;
    if (!datum.is_dominant(lam) || !datum.is_dominant(mu))
      throw InputError("simple-module labels must be dominant");
    WeightModule m = simple_module(ctx, lam);
    WeightModule n = simple_module(ctx, mu);
    ExtReport e = ext1(ctx, m, n);
    vs.push_back(make_verdict("ext_stabilized", true));
    j["dimension"] = e.dimension;
    j["stabilization_degree"] = e.stabilization_degree;
    j["weight_support"] = support_json(m);
  } else {
    throw InputError("unknown modules subcommand '" + which + "'");
  }

  j["verdicts"] = verdicts_json(vs);
  j["all_pass"] = all_pass(vs);
  if (ok) *ok = all_pass(vs);
  return j;
}

Json sweep_json(const std::vector<std::string>& types,
                const std::vector<long>& orders, const std::string& lattice) {
  Json records = Json::array();
  for (const std::string& type : types) {
    CartanDatum datum = CartanDatum::parse(type);
    RunConfig lat_cfg;
    lat_cfg.lattice = lattice;
    Lattice x = config_lattice(datum, lat_cfg);
    for (long n : orders) {
      QuantumParameter p = QuantumParameter::from_order(datum, n);
      DualDatum dd = compute_dual_datum(datum, p, x);
      SmallAlgebraCard card = cardinalities(datum, p, x);
      Json rec;
      rec["type"] = type;
      rec["order"] = n;
      Json ls = Json::array();
      for (const Root& g : datum.positive_roots())
        ls.push_back(p.l_value(datum, g));
      rec["l_table"] = std::move(ls);
      rec["dual_type"] = dual_type_string(dd);
      rec["epsilon"] = dd.epsilon_per_simple;
      rec["index_x_xstar"] = json_int(dd.index_x_xstar);
      rec["order_Abar"] = json_int(card.order_Abar);
      rec["dim_ubar"] = json_int(card.dim_ubar);
      rec["x_star_basis"] = json_intmat(dd.x_star.basis());
      rec["lq_basis"] = json_intmat(dd.lq.basis());
      records.push_back(std::move(rec));
    }
  }
  Json j;
  j["records"] = std::move(records);
  return j;
}

namespace {

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& v : j)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

void render_rec(const Json& j, int indent, std::string& out) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !is_scalar_array(v))) {
        out += pad + k + ":\n";
        render_rec(v, indent + 2, out);
      } else {
        out += pad + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump());
        out += "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || (v.is_array() && !is_scalar_array(v))) {
        out += pad + "-\n";
        render_rec(v, indent + 2, out);
      } else {
        out += pad + "- " + (v.is_string() ? v.get<std::string>() : v.dump());
        out += "\n";
      }
    }
  } else {
    out += pad + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render_rec(j, 0, out);
  return out;
}

void write_output(const Json& j, const RunConfig& cfg) {
  std::string payload =
      cfg.format == "text" ? render_text(j) : j.dump(2) + "\n";
  if (cfg.format != "text" && cfg.format != "json")
    throw InputError("unknown format '" + cfg.format + "'");
  if (cfg.out.empty()) {
    fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw IoError("cannot open output path " + cfg.out);
  out << payload;
  if (!out) throw IoError("failed writing " + cfg.out);
}

}  // namespace smallq
