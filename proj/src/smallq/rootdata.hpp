#pragma once

#include <string>
#include <vector>

#include "smallq/intmat.hpp"
#include "smallq/rational.hpp"

namespace smallq {

// Weights live in fundamental-weight ("P") coordinates throughout; this is
// the universal coordinate system of the artifact.
using Weight = std::vector<long>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_scale(long c, const Weight& a);
bool weight_is_zero(const Weight& a);
std::string weight_str(const Weight& a);

struct Root {
  std::vector<long> q_coords;  // simple-root coordinates
  long d = 1;                  // relative length (gamma,gamma)/2
  Weight omega;                // the same root in P-coordinates

  long height() const;
  bool operator==(const Root& o) const { return q_coords == o.q_coords; }
};

struct CartanComponent {
  char letter;        // 'A'..'G'
  int rank;           // rank of this component
  int offset;         // index of its first simple root in the global numbering
  long lacing;        // max d_gamma within the component
};

// Cartan datum for a product of finite types.  Convention: the Cartan matrix
// entry a[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i),
// so alpha_j in P-coordinates is the j-th column of the matrix.
class CartanDatum {
public:
  static CartanDatum parse(const std::string& type_string);

  int rank() const { return rank_; }
  const std::vector<CartanComponent>& components() const { return components_; }
  const IntMat& cartan_matrix() const { return cartan_; }
  long a(int i, int j) const { return cartan_[i][j].get_si(); }
  long d(int i) const { return d_[i]; }
  int component_of(int i) const { return comp_of_[i]; }
  const std::string& type_string() const { return type_string_; }

  Weight simple_root(int i) const;          // alpha_i in P-coordinates
  Root simple_root_obj(int i) const;

  // Killing form normalized so (gamma,gamma) = 2 at short roots.
  Rational killing_form(const Weight& a, const Weight& b) const;
  long pairing(const Root& alpha, const Weight& lam) const;  // (alpha, lam), integral

  // sigma_i(lam) = lam - ((alpha_i,lam)/d_i) alpha_i = lam - lam_i alpha_i.
  Weight reflect(int i, const Weight& lam) const;
  std::vector<Weight> weyl_orbit(const Weight& lam) const;
  bool is_dominant(const Weight& lam) const;

  // Reduced word (i_1, ..., i_r) with w_0 = sigma_{i_r} ... sigma_{i_1},
  // computed by greedy descent with lowest-index tie breaking.
  const std::vector<int>& longest_word() const { return w0_word_; }
  Weight apply_w0(const Weight& lam) const;
  Weight lowest_weight_partner(const Weight& lam) const;  // -w_0(lam)

  // Positive roots in the convexity order gamma_k = sigma_{i_r}...sigma_{i_{k+1}}
  // (alpha_{i_k}) attached to the reduced word above.
  const std::vector<Root>& positive_roots() const { return pos_roots_; }
  // Positive roots enumerated by reflection closure (set-level oracle).
  std::vector<Root> positive_roots_by_closure() const;

  long root_d(const std::vector<long>& q_coords) const;  // (gamma,gamma)/2
  Weight root_omega(const std::vector<long>& q_coords) const;

private:
  std::string type_string_;
  int rank_ = 0;
  std::vector<CartanComponent> components_;
  std::vector<int> comp_of_;
  IntMat cartan_;
  std::vector<long> d_;
  std::vector<int> w0_word_;
  std::vector<Root> pos_roots_;

  void finalize();  // fills w0_word_ and pos_roots_
};

}  // namespace smallq
