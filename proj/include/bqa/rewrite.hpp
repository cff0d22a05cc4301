#pragma once

// Bi-quadratic presentations, PBW normal forms and the overlap check.

#include <map>
#include <vector>

#include "bqa/freealg.hpp"

namespace bqa {

/// Relations x_i x_j - q_ij x_j x_i = sum_k a_ij,k x_k + b_ij for n >= i > j >= 1.
class BqPresentation {
public:
  /// All q_ij = 1, all a and b zero.
  BqPresentation(Field f, int n);

  const Field& field() const { return field_; }
  int n() const { return n_; }

  const FieldValue& q(int i, int j) const { return q_[pair_index(i, j)]; }
  const FieldValue& a(int i, int j, int k) const { return a_[pair_index(i, j) * n_ + (k - 1)]; }
  const FieldValue& b(int i, int j) const { return b_[pair_index(i, j)]; }
  void set_q(int i, int j, const FieldValue& v);
  void set_a(int i, int j, int k, const FieldValue& v);
  void set_b(int i, int j, const FieldValue& v);

  /// q_ij for i > j, 1 on the diagonal, q_ji^{-1} for i < j.
  FieldValue q_completed(int i, int j) const;

  /// Right-hand side of the rewrite rule x_i x_j -> q_ij x_j x_i + ... (i > j).
  NcPoly rule(int i, int j) const;
  /// x_i x_j - rule(i, j).
  NcPoly relation(int i, int j) const;

  friend bool operator==(const BqPresentation&, const BqPresentation&);

private:
  std::size_t pair_index(int i, int j) const;
  Field field_;
  int n_;
  std::vector<FieldValue> q_, a_, b_;
};

enum class Strategy { LeftmostDescent, RightmostDescent };

/// Memoizing normal-form engine bound to one presentation. Not thread-safe;
/// use one instance per thread.
class Reducer {
public:
  explicit Reducer(const BqPresentation& p, Strategy s = Strategy::LeftmostDescent);

  NcPoly reduce(const NcPoly& f);
  const NcPoly& reduce_word(const Word& w);
  const BqPresentation& presentation() const { return p_; }

private:
  BqPresentation p_;
  Strategy strategy_;
  std::vector<NcPoly> rules_;  // indexed by pair
  std::map<Word, NcPoly> memo_;
};

NcPoly reduce(const NcPoly& f, const BqPresentation& p);

/// True when every word is nondecreasing.
bool is_normal(const NcPoly& f);

struct OverlapReport {
  int k, j, i;  // k > j > i
  NcPoly difference;
};

/// Both resolutions of x_k x_j x_i for every i < j < k, reporting the mismatches.
std::vector<OverlapReport> overlap_check(const BqPresentation& p);
bool pbw_consistent(const BqPresentation& p);

/// sigma[m-1] = index of the original generator placed at position m.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm inverse_perm(const Perm& s);
bool is_permutation(const Perm& s);

/// Presentation in y_m = x_sigma(m), relations solved for the y-descents.
BqPresentation reorder_presentation(const BqPresentation& p, const Perm& sigma);

/// Normal form with respect to the generator order x_sigma(1) < ... < x_sigma(n),
/// expressed in the original generators. Throws std::domain_error when p is inconsistent.
NcPoly reduce_in_order(const NcPoly& f, const BqPresentation& p, const Perm& sigma);

/// Substitutes x_i -> images[i-1] (images share one generator count).
NcPoly substitute(const NcPoly& f, const std::vector<NcPoly>& images);

}  // namespace bqa
