#include "smallq/rootdata.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "smallq/errors.hpp"
#include "smallq/linalg.hpp"

namespace smallq {

Weight weight_add(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight weight_scale(long c, const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool weight_is_zero(const Weight& a) {
  return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

std::string weight_str(const Weight& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

long Root::height() const {
  long h = 0;
  for (long c : q_coords) h += c;
  return h;
}

namespace {

// Cartan matrix and d-vector of a single component in Bourbaki labeling.
// Convention: a[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
void component_cartan(char letter, int n, std::vector<std::vector<long>>& a,
                      std::vector<long>& d) {
  a.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (letter) {
    case 'A':
      d.assign(n, 1);
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'B':  // alpha_n short
      if (n < 2) throw InputError("B_n needs rank >= 2");
      d.assign(n, 2);
      d[n - 1] = 1;
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      a[n - 2][n - 1] = -1;  // 2(long,short)/(long,long) = -2/4*2 = -1
      a[n - 1][n - 2] = -2;
      break;
    case 'C':  // alpha_n long
      if (n < 2) throw InputError("C_n needs rank >= 2");
      d.assign(n, 1);
      d[n - 1] = 2;
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      break;
    case 'D':
      if (n < 3) throw InputError("D_n needs rank >= 3");
      d.assign(n, 1);
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw InputError("E_n needs rank 6..8");
      d.assign(n, 1);
      // Bourbaki: node 2 attaches to node 4 of the chain 1-3-4-5-6(-7-8).
      chain(0, 2);
      chain(2, 3);
      chain(1, 3);
      for (int i = 3; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw InputError("F requires rank 4");
      d = {2, 2, 1, 1};
      chain(0, 1);
      chain(2, 3);
      a[1][2] = -1;  // alpha_2 long, alpha_3 short
      a[2][1] = -2;
      break;
    case 'G':
      if (n != 2) throw InputError("G requires rank 2");
      d = {1, 3};  // alpha_1 short, alpha_2 long
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw InputError(std::string("unknown type letter ") + letter);
  }
}

}  // namespace

CartanDatum CartanDatum::parse(const std::string& type_string) {
  CartanDatum datum;
  datum.type_string_ = type_string;
  std::vector<std::pair<char, int>> parts;
  size_t pos = 0;
  while (pos < type_string.size()) {
    char letter = (char)std::toupper(type_string[pos]);
    if (letter < 'A' || letter > 'G')
      throw InputError("bad type string '" + type_string + "'");
    ++pos;
    size_t start = pos;
    while (pos < type_string.size() && std::isdigit(type_string[pos])) ++pos;
    if (start == pos) throw InputError("missing rank in '" + type_string + "'");
    int rank = std::stoi(type_string.substr(start, pos - start));
    if (rank < 1 || rank > 8) throw InputError("rank out of range in '" + type_string + "'");
    parts.emplace_back(letter, rank);
    if (pos < type_string.size()) {
      if (type_string[pos] != 'x' && type_string[pos] != 'X')
        throw InputError("expected 'x' between factors in '" + type_string + "'");
      ++pos;
    }
  }
  if (parts.empty()) throw InputError("empty type string");

  int total = 0;
  for (auto& [l, r] : parts) total += r;
  datum.rank_ = total;
  datum.cartan_ = IntMat(total, IntVec(total, 0));
  datum.d_.assign(total, 1);
  datum.comp_of_.assign(total, 0);

  int offset = 0, comp_index = 0;
  for (auto& [letter, rank] : parts) {
    std::vector<std::vector<long>> a;
    std::vector<long> d;
    component_cartan(letter, rank, a, d);
    long lacing = *std::max_element(d.begin(), d.end());
    datum.components_.push_back({letter, rank, offset, lacing});
    for (int i = 0; i < rank; ++i) {
      datum.comp_of_[offset + i] = comp_index;
      datum.d_[offset + i] = d[i];
      for (int j = 0; j < rank; ++j) datum.cartan_[offset + i][offset + j] = a[i][j];
    }
    offset += rank;
    ++comp_index;
  }
  datum.finalize();
  return datum;
}

Weight CartanDatum::simple_root(int i) const {
  Weight w(rank_);
  for (int r = 0; r < rank_; ++r) w[r] = cartan_[r][i].get_si();
  return w;
}

Root CartanDatum::simple_root_obj(int i) const {
  Root g;
  g.q_coords.assign(rank_, 0);
  g.q_coords[i] = 1;
  g.d = d_[i];
  g.omega = simple_root(i);
  return g;
}

Weight CartanDatum::root_omega(const std::vector<long>& q) const {
  Weight w(rank_, 0);
  for (int j = 0; j < rank_; ++j) {
    if (q[j] == 0) continue;
    for (int i = 0; i < rank_; ++i) w[i] += q[j] * cartan_[i][j].get_si();
  }
  return w;
}

long CartanDatum::root_d(const std::vector<long>& q) const {
  // (gamma,gamma)/2 = (1/2) sum_{i,j} c_i c_j d_i a_{ij}.
  long twice = 0;
  for (int i = 0; i < rank_; ++i) {
    if (q[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      twice += q[i] * q[j] * d_[i] * cartan_[i][j].get_si();
  }
  if (twice % 2 != 0) throw InternalError("root_d: odd norm");
  return twice / 2;
}

Rational CartanDatum::killing_form(const Weight& x, const Weight& y) const {
  // Solve A t = x over Q (t = x in simple-root coordinates), then
  // (x, y) = sum_i t_i d_i y_i.
  Matrix<Rational> a = to_rational(cartan_);
  Matrix<Rational> rhs(rank_, std::vector<Rational>(1));
  for (int i = 0; i < rank_; ++i) rhs[i][0] = Rational(x[i]);
  Matrix<Rational> t = solve_linear(a, rhs);
  Rational acc(0);
  for (int i = 0; i < rank_; ++i) acc += t[i][0] * Rational(d_[i] * y[i]);
  return acc;
}

long CartanDatum::pairing(const Root& alpha, const Weight& lam) const {
  long acc = 0;
  for (int i = 0; i < rank_; ++i) acc += alpha.q_coords[i] * d_[i] * lam[i];
  return acc;
}

Weight CartanDatum::reflect(int i, const Weight& lam) const {
  return weight_sub(lam, weight_scale(lam[i], simple_root(i)));
}

std::vector<Weight> CartanDatum::weyl_orbit(const Weight& lam) const {
  std::set<Weight> seen{lam};
  std::vector<Weight> queue{lam};
  while (!queue.empty()) {
    Weight w = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank_; ++i) {
      Weight r = reflect(i, w);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

bool CartanDatum::is_dominant(const Weight& lam) const {
  return std::all_of(lam.begin(), lam.end(), [](long c) { return c >= 0; });
}

void CartanDatum::finalize() {
  // Greedy descent from rho: repeatedly reflect at the lowest simple index
  // with positive coefficient.  The resulting word is reduced of length
  // |Phi^+| and w_0 = sigma_{i_r} ... sigma_{i_1}.
  Weight mu(rank_, 1);  // rho
  while (true) {
    int i = 0;
    while (i < rank_ && mu[i] <= 0) ++i;
    if (i == rank_) break;
    mu = reflect(i, mu);
    w0_word_.push_back(i);
  }

  // Convexity order: gamma_k = sigma_{i_r} ... sigma_{i_{k+1}} (alpha_{i_k}).
  // Build in simple-root coordinates (reflections act integrally there).
  int r = (int)w0_word_.size();
  pos_roots_.resize(r);
  for (int k = 0; k < r; ++k) {
    std::vector<long> q(rank_, 0);
    q[w0_word_[k]] = 1;
    for (int t = k + 1; t < r; ++t) {
      int i = w0_word_[t];
      // sigma_i on root coordinates: c_j unchanged except
      // c_i -> c_i - sum_j a_{ij} c_j.
      long s = 0;
      for (int j = 0; j < rank_; ++j) s += cartan_[i][j].get_si() * q[j];
      q[i] -= s;
    }
    pos_roots_[k].q_coords = q;
    pos_roots_[k].d = root_d(q);
    pos_roots_[k].omega = root_omega(q);
    for (long c : q)
      if (c < 0) throw InternalError("convexity order produced a negative root");
  }
}

Weight CartanDatum::apply_w0(const Weight& lam) const {
  Weight w = lam;
  for (int i : w0_word_) w = reflect(i, w);
  return w;
}

Weight CartanDatum::lowest_weight_partner(const Weight& lam) const {
  return weight_scale(-1, apply_w0(lam));
}

std::vector<Root> CartanDatum::positive_roots_by_closure() const {
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue;
  for (int i = 0; i < rank_; ++i) {
    std::vector<long> q(rank_, 0);
    q[i] = 1;
    seen.insert(q);
    queue.push_back(q);
  }
  while (!queue.empty()) {
    std::vector<long> q = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank_; ++i) {
      std::vector<long> s = q;
      long acc = 0;
      for (int j = 0; j < rank_; ++j) acc += cartan_[i][j].get_si() * q[j];
      s[i] -= acc;
      if (std::all_of(s.begin(), s.end(), [](long c) { return c >= 0; }) &&
          seen.insert(s).second)
        queue.push_back(s);
    }
  }
  std::vector<Root> roots;
  for (auto& q : seen) {
    Root g;
    g.q_coords = q;
    g.d = root_d(q);
    g.omega = root_omega(q);
    roots.push_back(g);
  }
  return roots;
}

}  // namespace smallq
