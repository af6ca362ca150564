#pragma once

// Shared recursion behind every [X T_k1 ... T_kn] . c evaluation. The head X
// is the singularity condition sitting on the b_1 slot (or nothing, for
// smooth curves); the profile lists the tangency orders at a_1..a_n.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "curvecount/integer.hpp"
#include "curvecount/ring.hpp"

namespace curvecount {

enum class HeadKind { Smooth, A1F, PA1, A2F, A2L };

struct Head {
  HeadKind kind = HeadKind::Smooth;
  int r = 0;  // tangency order of the nodal branch, only for PA1

  static Head smooth() { return {HeadKind::Smooth, 0}; }
  static Head a1f() { return {HeadKind::A1F, 0}; }
  static Head pa1(int r) { return {HeadKind::PA1, r}; }
  static Head a2f() { return {HeadKind::A2F, 0}; }
  static Head a2l() { return {HeadKind::A2L, 0}; }

  /// Number of b-points the head lives on.
  int singular_points() const { return kind == HeadKind::Smooth ? 0 : 1; }
  long codim() const;
  std::string name() const;

  friend auto operator<=>(const Head&, const Head&) = default;
};

using Profile = std::vector<int>;

long profile_codim(const Profile& ks);

/// Class of the incidence-plus-tangency condition at a_i: (y1 + a_i)(yd + d a_i).
RingElem class_T0(int i, const SpaceSig& sig);

/// (3d^2-6d+3) yd b1^2 + (3d-3) yd^2 b1 + yd^3.
RingElem class_A1F(int d);
/// (12d^2-36d+24) yd^2 b1^2 + (8d-12) yd^3 b1 + 2 yd^4.
RingElem class_A2F(int d);

/// Moves the a_n exponent onto b_1 and drops a_n; the result lives on
/// sig.with_n(n - 1). Terms pushed past the b_1 cap vanish.
RingElem beta_collapse(const RingElem& c, const SpaceSig& sig);

/// Memoizing evaluator for one degree. Not thread-safe; use one per thread.
class Evaluator {
 public:
  explicit Evaluator(int d);

  int degree() const { return d_; }
  SpaceSig space(const Head& head, std::size_t n) const {
    return {d_, head.singular_points(), static_cast<int>(n)};
  }

  /// [head T_k1 ... T_kn] . c. The constraint must live on space(head, n).
  Integer evaluate(const Head& head, const Profile& ks, const RingElem& c);

  std::size_t memo_size() const { return memo_.size(); }
  void clear() { memo_.clear(); }

 private:
  struct Key {
    Head head;
    Profile ks;
    Monomial mono;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  Integer eval_sum(const Head& head, const Profile& ks, const RingElem& c);
  Integer eval_mono(const Head& head, const Profile& ks, const Monomial& mono);
  Integer base_case(const Head& head, const Monomial& mono);
  Integer drop_transverse(const Head& head, const Profile& ks, const Monomial& mono);
  Integer collide(const Head& head, const Profile& ks, const Monomial& mono);

  int d_;
  RingElem a1f_;
  RingElem a2f_;
  std::map<Key, Integer> memo_;
};

}  // namespace curvecount
