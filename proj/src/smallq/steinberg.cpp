#include "smallq/steinberg.hpp"

#include "smallq/errors.hpp"
#include "smallq/frobdual.hpp"

namespace smallq {

bool is_restricted(const CartanDatum& datum, const QuantumParameter& p,
                   const Weight& lam) {
  for (int j = 0; j < datum.rank(); ++j) {
    long l = p.l_simple(datum, j);
    if (lam[j] < 0 || lam[j] >= l) return false;
  }
  return true;
}

std::vector<Weight> enumerate_restricted(const CartanDatum& datum,
                                         const QuantumParameter& p) {
  int n = datum.rank();
  std::vector<long> l(n);
  for (int j = 0; j < n; ++j) l[j] = p.l_simple(datum, j);
  std::vector<Weight> out;
  Weight cur(n, 0);
  while (true) {
    out.push_back(cur);
    int j = 0;
    while (j < n && cur[j] + 1 >= l[j]) cur[j++] = 0;
    if (j == n) break;
    ++cur[j];
  }
  return out;
}

Weight rho_l(const CartanDatum& datum, const QuantumParameter& p) {
  int n = datum.rank();
  Weight twice(n, 0);
  for (auto& g : datum.positive_roots()) {
    long c = p.l_value(datum, g) - 1;
    for (int j = 0; j < n; ++j) twice[j] += c * g.omega[j];
  }
  Weight out(n);
  for (int j = 0; j < n; ++j) {
    if (twice[j] % 2 != 0) throw InternalError("rho_l is not in P");
    out[j] = twice[j] / 2;
  }
  if (!is_restricted(datum, p, out))
    throw InternalError("rho_l is not restricted");
  return out;
}

Weight rho_l_in(const CartanDatum& datum, const QuantumParameter& p,
                const Lattice& x) {
  Weight r = rho_l(datum, p);
  if (!x.contains(r))
    throw NotInCharacterLattice("rho_l " + weight_str(r) +
                                " is not in the character lattice");
  return r;
}

namespace {

bool in_p_star(const CartanDatum& datum, const QuantumParameter& p,
               const Weight& lam) {
  for (int j = 0; j < datum.rank(); ++j)
    if (lam[j] % p.l_simple(datum, j) != 0) return false;
  return true;
}

}  // namespace

SteinbergSplit steinberg_decompose(const CartanDatum& datum,
                                   const QuantumParameter& p, const Weight& lam) {
  if (!datum.is_dominant(lam))
    throw NotDominant("weight " + weight_str(lam) + " is not dominant");
  int n = datum.rank();
  SteinbergSplit s;
  s.lambda0.assign(n, 0);
  s.lambda1.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    long l = p.l_simple(datum, j);
    s.lambda0[j] = lam[j] % l;
    s.lambda1[j] = lam[j] - s.lambda0[j];
  }
  if (!is_restricted(datum, p, s.lambda0) || !in_p_star(datum, p, s.lambda1))
    throw InternalError("steinberg decomposition invariant failed");
  return s;
}

std::vector<SteinbergSplit> steinberg_decompose_by_search(
    const CartanDatum& datum, const QuantumParameter& p, const Weight& lam) {
  if (!datum.is_dominant(lam))
    throw NotDominant("weight " + weight_str(lam) + " is not dominant");
  std::vector<SteinbergSplit> hits;
  for (auto& lam0 : enumerate_restricted(datum, p)) {
    Weight lam1 = weight_sub(lam, lam0);
    bool ok = true;
    for (long c : lam1)
      if (c < 0) ok = false;
    if (ok && in_p_star(datum, p, lam1)) hits.push_back({lam0, lam1});
  }
  return hits;
}

Weight dual_label(const CartanDatum& datum, const Weight& lam) {
  return datum.lowest_weight_partner(lam);
}

}  // namespace smallq
