#include "curvecount/caporaso_harris.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "curvecount/errors.hpp"

namespace curvecount {

MultSeq::MultSeq(std::vector<int> entries) : v_(std::move(entries)) {
  for (int e : v_)
    if (e < 0) throw InputError("multiplicity sequences have non-negative entries");
  trim();
}

int MultSeq::operator[](int k) const {
  if (k < 1 || k > max_order()) return 0;
  return v_[k - 1];
}

void MultSeq::add(int k, int count) {
  if (k < 1) throw InputError("contact order must be positive");
  if (static_cast<int>(v_.size()) < k) v_.resize(k, 0);
  v_[k - 1] += count;
  if (v_[k - 1] < 0) throw InputError("negative multiplicity");
  trim();
}

long MultSeq::weight() const {
  long total = 0;
  for (std::size_t i = 0; i < v_.size(); ++i) total += static_cast<long>(i + 1) * v_[i];
  return total;
}

long MultSeq::size() const {
  long total = 0;
  for (int e : v_) total += e;
  return total;
}

bool MultSeq::leq(const MultSeq& other) const {
  for (int k = 1; k <= max_order(); ++k)
    if ((*this)[k] > other[k]) return false;
  return true;
}

std::string MultSeq::to_string() const {
  std::ostringstream out;
  out << '(';
  if (v_.empty()) out << '0';
  for (std::size_t i = 0; i < v_.size(); ++i) out << (i ? "," : "") << v_[i];
  out << ')';
  return out.str();
}

void MultSeq::trim() {
  while (!v_.empty() && v_.back() == 0) v_.pop_back();
}

MultSeq operator+(const MultSeq& x, const MultSeq& y) {
  MultSeq out = x;
  for (int k = 1; k <= y.max_order(); ++k)
    if (y[k] != 0) out.add(k, y[k]);
  return out;
}

MultSeq operator-(const MultSeq& x, const MultSeq& y) {
  MultSeq out = x;
  for (int k = 1; k <= y.max_order(); ++k)
    if (y[k] != 0) out.add(k, -y[k]);
  return out;
}

long CHKey::points() const {
  return static_cast<long>(d) * (d + 1) / 2 - delta + beta.size();
}

Integer seq_binomial(const MultSeq& top, const MultSeq& bottom) {
  Integer out = 1;
  for (int k = 1; k <= std::max(top.max_order(), bottom.max_order()); ++k)
    out *= binomial(top[k], bottom[k]);
  return out;
}

Integer CHOracle::invariant(const CHKey& key) {
  if (key.d < 1 || key.delta < 0) return 0;
  if (key.alpha.weight() + key.beta.weight() != key.d) return 0;
  if (!memoize_) return compute(key);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Integer value = compute(key);
  memo_.emplace(key, value);
  return value;
}

Integer CHOracle::compute(const CHKey& key) {
  const int d = key.d;
  if (d == 1) {
    if (key.delta != 0) return 0;
    const bool fixed = key.alpha == MultSeq({1}) && key.beta.size() == 0;
    const bool moving = key.beta == MultSeq({1}) && key.alpha.size() == 0;
    return (fixed || moving) ? 1 : 0;
  }
  if (key.points() <= 0) return 0;

  Integer total = 0;

  // Degenerate by fixing one moving contact point.
  for (int k = 1; k <= key.beta.max_order(); ++k) {
    if (key.beta[k] == 0) continue;
    MultSeq alpha = key.alpha;
    alpha.add(k, 1);
    MultSeq beta = key.beta;
    beta.add(k, -1);
    total += Integer(k) * invariant({d, key.delta, alpha, beta});
  }

  // Degenerate to L plus a curve of degree d-1.
  std::vector<int> alpha_sub(key.alpha.max_order(), 0);
  std::function<void(int)> over_alpha = [&](int idx) {
    if (idx < key.alpha.max_order()) {
      for (int c = 0; c <= key.alpha[idx + 1]; ++c) {
        alpha_sub[idx] = c;
        over_alpha(idx + 1);
      }
      return;
    }
    const MultSeq alpha_p(alpha_sub);
    const long need = (d - 1) - alpha_p.weight() - key.beta.weight();
    if (need < 0) return;
    const Integer alpha_binom = seq_binomial(key.alpha, alpha_p);

    // gamma = beta' - beta with I(gamma) = need, as a multiset of parts.
    std::vector<int> gamma;
    std::function<void(long, int)> over_gamma = [&](long rest, int max_part) {
      if (rest == 0) {
        const long parts = static_cast<long>(gamma.size());
        const long delta_p = key.delta - (d - 1) + parts;
        if (delta_p < 0 || delta_p > key.delta) return;
        MultSeq g;
        Integer weight = 1;
        for (int part : gamma) {
          g.add(part, 1);
          if (conv_ == Convention::Standard) weight *= part;
        }
        const MultSeq beta_p = key.beta + g;
        const Integer sub =
            invariant({d - 1, static_cast<int>(delta_p), alpha_p, beta_p});
        if (sub != 0) total += weight * alpha_binom * seq_binomial(beta_p, key.beta) * sub;
        return;
      }
      for (int part = std::min<long>(rest, max_part); part >= 1; --part) {
        gamma.push_back(part);
        over_gamma(rest - part, part);
        gamma.pop_back();
      }
    };
    over_gamma(need, static_cast<int>(need));
  };
  over_alpha(0);
  return total;
}

Integer ch_invariant(const CHKey& key) {
  CHOracle oracle;
  return oracle.invariant(key);
}

ProfileMapping ch_from_profile(int d, const Profile& ks, const std::vector<int>& eps, int delta) {
  if (eps.size() > ks.size()) throw InputError("more fixing flags than tangency points");
  ProfileMapping out;
  out.key.d = d;
  out.key.delta = delta;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 0) throw InputError("tangency orders must be non-negative");
    const int e = i < eps.size() ? eps[i] : 0;
    if (e == 0)
      out.key.beta.add(ks[i] + 1, 1);
    else if (e == 1)
      out.key.alpha.add(ks[i] + 1, 1);
    else if (e == 2)
      out.geometric_zero = true;
    else
      throw InputError("fixing flags must be 0, 1 or 2");
  }
  const long used = out.key.alpha.weight() + out.key.beta.weight();
  if (out.geometric_zero) {
    out.key.alpha = MultSeq{};
    out.key.beta = MultSeq{};
    return out;
  }
  if (used > d) throw InputError("total contact order exceeds the degree");
  if (used < d) out.key.beta.add(1, static_cast<int>(d - used));
  return out;
}

}  // namespace curvecount
