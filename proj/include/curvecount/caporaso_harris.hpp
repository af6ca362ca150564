#pragma once

// Severi degrees with tangency conditions to a fixed line L, via the
// Caporaso-Harris recursion. Independent of the ring machinery.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "curvecount/engine.hpp"
#include "curvecount/integer.hpp"

namespace curvecount {

/// Finitely supported sequence indexed by contact order k >= 1. Stored with
/// entry k at position k-1 and no trailing zeros.
class MultSeq {
 public:
  MultSeq() = default;
  explicit MultSeq(std::vector<int> entries);

  int operator[](int k) const;
  void add(int k, int count);
  int max_order() const { return static_cast<int>(v_.size()); }
  const std::vector<int>& entries() const { return v_; }

  long weight() const;  // I(seq) = sum k * seq_k
  long size() const;    // |seq| = sum seq_k
  bool leq(const MultSeq& other) const;

  std::string to_string() const;

  friend auto operator<=>(const MultSeq&, const MultSeq&) = default;

 private:
  void trim();
  std::vector<int> v_;
};

MultSeq operator+(const MultSeq& x, const MultSeq& y);
MultSeq operator-(const MultSeq& x, const MultSeq& y);

struct CHKey {
  int d = 1;
  int delta = 0;
  MultSeq alpha;
  MultSeq beta;

  /// Number of general points in the plane the curves pass through.
  long points() const;

  friend auto operator<=>(const CHKey&, const CHKey&) = default;
};

/// Product of componentwise binomial coefficients.
Integer seq_binomial(const MultSeq& top, const MultSeq& bottom);

class CHOracle {
 public:
  /// Flipped drops the I^(beta'-beta) weight; kept only as a negative control.
  enum class Convention { Standard, Flipped };

  explicit CHOracle(Convention conv = Convention::Standard, bool memoize = true)
      : conv_(conv), memoize_(memoize) {}

  /// N^{d,delta}(alpha, beta); zero for inconsistent keys.
  Integer invariant(const CHKey& key);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  Integer compute(const CHKey& key);

  Convention conv_;
  bool memoize_;
  std::map<CHKey, Integer> memo_;
};

Integer ch_invariant(const CHKey& key);

struct ProfileMapping {
  CHKey key;
  bool geometric_zero = false;  // some point was fixed off the line
};

/// Translate a tangency profile with per-slot fixing flags to a CH key: a
/// slot of order k becomes a contact point of order k+1, fixed when eps = 1.
/// The remaining intersections with L are transverse and moving.
ProfileMapping ch_from_profile(int d, const Profile& ks, const std::vector<int>& eps, int delta);

}  // namespace curvecount
