#pragma once

// Randomized property suites, shared by the unit tests and the acceptance runner.
// Each returns (cases run, failures) so callers decide how to report.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "curvecount/engine.hpp"
#include "curvecount/evaluate.hpp"
#include "curvecount/expr.hpp"
#include "curvecount/ring.hpp"

namespace props {

using namespace curvecount;

struct Tally {
  int cases = 0;
  int failures = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (notes.size() < 10) notes.push_back(what);
    }
  }
};

inline SpaceSig random_sig(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(1, 5), m(0, 2), n(0, 3);
  return {d(rng), m(rng), n(rng)};
}

inline Monomial random_monomial(std::mt19937& rng, const SpaceSig& sig) {
  std::uniform_int_distribution<int> small(0, 2);
  std::uniform_int_distribution<long> yd(0, sig.delta());
  Monomial mono;
  mono.set_y1(small(rng)).set_yd(static_cast<int>(yd(rng)));
  for (int j = 1; j <= sig.m; ++j) mono.set_b(j, small(rng));
  for (int i = 1; i <= sig.n; ++i) mono.set_a(i, small(rng));
  return mono;
}

inline RingElem random_elem(std::mt19937& rng, const SpaceSig& sig, int terms = 4) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  RingElem out;
  for (int t = 0; t < terms; ++t) out.add_term(random_monomial(rng, sig), coeff(rng));
  return out;
}

/// Same element with the a-slots relabelled: a_i moves to a_{perm[i-1]+1}.
inline RingElem relabel_a(const RingElem& e, const std::vector<int>& perm) {
  RingElem out;
  for (const auto& [mono, coeff] : e) {
    Monomial moved = mono;
    for (std::size_t i = 0; i < perm.size(); ++i) moved.set_a(static_cast<int>(i) + 1, 0);
    for (std::size_t i = 0; i < perm.size(); ++i) moved.set_a(perm[i] + 1, mono.a(static_cast<int>(i) + 1));
    out.add_term(moved, coeff);
  }
  return out;
}

/// Pullback from the space without the last tangency point is the identity
/// on exponent vectors, so the projection formula reads
/// push(x * y) = x * push(y) whenever x does not mention a_n.
inline Tally ring_axioms(int rounds, unsigned seed = 7) {
  Tally t;
  std::mt19937 rng(seed);
  for (int r = 0; r < rounds; ++r) {
    const SpaceSig sig = random_sig(rng);
    const RingElem x = random_elem(rng, sig), y = random_elem(rng, sig), z = random_elem(rng, sig);
    const std::string tag = " (round " + std::to_string(r) + ")";
    t.check(mul(x, y, sig) == mul(y, x, sig), "commutativity" + tag);
    t.check(mul(mul(x, y, sig), z, sig) == mul(x, mul(y, z, sig), sig), "associativity" + tag);
    t.check(mul(x, y + z, sig) == mul(x, y, sig) + mul(x, z, sig), "distributivity" + tag);
    t.check(mul(x, RingElem::one(), sig) == x, "unit" + tag);
    t.check((x - x).is_zero(), "additive inverse" + tag);
    t.check(integrate(x + y, sig) == integrate(x, sig) + integrate(y, sig), "integration is additive" + tag);
    if (sig.n >= 1) {
      const SpaceSig down = sig.with_n(sig.n - 1);
      const RingElem base = random_elem(rng, down);
      const RingElem lhs = pushforward_last_a(mul(base, y, sig), sig);
      const RingElem rhs = mul(base, pushforward_last_a(y, sig), down);
      t.check(lhs == rhs, "projection formula" + tag);
      t.check(integrate(y, sig) == integrate(pushforward_last_a(y, sig), down), "push preserves degree" + tag);
    }
  }
  return t;
}

inline Profile random_profile(std::mt19937& rng, int max_total) {
  std::uniform_int_distribution<int> len(1, 3), k(0, 2);
  Profile ks;
  const int n = len(rng);
  int used = 0;
  for (int i = 0; i < n; ++i) {
    const int x = std::min(k(rng), std::max(0, max_total - used));
    ks.push_back(x);
    used += x + 1;
  }
  return ks;
}

/// Random constraint of the right degree on sig: y1^r yd^s with scattered a, b powers.
inline RingElem top_degree_elem(std::mt19937& rng, const SpaceSig& sig, long want, int terms) {
  std::uniform_int_distribution<int> small(0, 2), coeff(-4, 4);
  RingElem out;
  for (int t = 0; t < terms; ++t) {
    Monomial mono;
    long left = want;
    const int r = std::min<long>(small(rng), left);
    mono.set_y1(r);
    left -= r;
    for (int j = 1; j <= sig.m; ++j) {
      const int e = std::min<long>(small(rng), left);
      mono.set_b(j, e);
      left -= e;
    }
    for (int i = 1; i <= sig.n; ++i) {
      const int e = std::min<long>(small(rng), left);
      mono.set_a(i, e);
      left -= e;
    }
    if (left > sig.delta()) continue;
    mono.set_yd(static_cast<int>(left));
    out.add_term(mono, coeff(rng));
  }
  return out;
}

inline Head random_head(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0: return Head::smooth();
    case 1: return Head::a1f();
    default: return Head::pa1(0);
  }
}

inline Tally evaluator_linearity_and_symmetry(int rounds, unsigned seed = 11) {
  Tally t;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dd(3, 6), coeff(-7, 7);
  for (int r = 0; r < rounds; ++r) {
    const int d = dd(rng);
    Evaluator ev(d);
    const Head head = random_head(rng);
    const Profile ks = random_profile(rng, d);
    const SpaceSig sig = ev.space(head, ks.size());
    const long want = sig.dim() - head.codim() - profile_codim(ks);
    if (want < 0) continue;
    const RingElem c1 = top_degree_elem(rng, sig, want, 3), c2 = top_degree_elem(rng, sig, want, 3);
    const Integer x = coeff(rng), y = coeff(rng);
    const std::string tag = head.name() + " d=" + std::to_string(d) + " round " + std::to_string(r);
    t.check(ev.evaluate(head, ks, c1 * x + c2 * y) == x * ev.evaluate(head, ks, c1) + y * ev.evaluate(head, ks, c2),
            "linearity " + tag);

    std::vector<int> perm(ks.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Profile permuted(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) permuted[perm[i]] = ks[i];
    t.check(ev.evaluate(head, ks, c1) == ev.evaluate(head, permuted, relabel_a(c1, perm)), "permutation " + tag);
  }
  return t;
}

inline Tally dimension_mismatch(int rounds, unsigned seed = 13) {
  Tally t;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dd(2, 6), off(1, 3), sign(0, 1);
  for (int r = 0; r < rounds; ++r) {
    const int d = dd(rng);
    Evaluator ev(d);
    const Head head = random_head(rng);
    const Profile ks = random_profile(rng, d);
    const SpaceSig sig = ev.space(head, ks.size());
    long want = sig.dim() - head.codim() - profile_codim(ks);
    want += sign(rng) ? off(rng) : -off(rng);
    if (want < 0) want = sig.dim() - head.codim() - profile_codim(ks) + 1;
    const RingElem c = top_degree_elem(rng, sig, want, 3);
    const std::string tag = head.name() + " d=" + std::to_string(d) + " round " + std::to_string(r);
    t.check(ev.evaluate(head, ks, c) == 0, "nonzero off-dimension value " + tag);
  }
  // Through the query layer the mismatch is reported, not silently accepted.
  for (int r = 0; r < rounds / 5; ++r) {
    const int d = dd(rng);
    const long s = SpaceSig{d, 0, 1}.delta() - 1 - off(rng);
    const CountResult res = evaluate(parse("[T1] * y1^2 * yd^" + std::to_string(s)), d);
    bool warned = false;
    for (const auto& w : res.warnings) warned = warned || w.find("dimension mismatch") != std::string::npos;
    t.check(res.ordered_value == 0 && warned, "query layer d=" + std::to_string(d));
  }
  return t;
}

inline ClassExpr random_expr(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 8), order(0, 12), count(1, 5), factors(0, 5), var(0, 3), idx(1, 9),
      expo(0, 3);
  ClassExpr e;
  const int atoms = count(rng);
  for (int i = 0; i < atoms; ++i) {
    const auto k = static_cast<AtomKind>(kind(rng));
    const bool ordered = k == AtomKind::T || k == AtomKind::PA1;
    e.atoms.push_back({k, ordered ? order(rng) : 0});
  }
  const int nf = factors(rng);
  for (int i = 0; i < nf; ++i) {
    Factor f;
    f.var = static_cast<Var>(var(rng));
    f.index = f.var == Var::B || f.var == Var::A ? idx(rng) : 0;
    f.exponent = expo(rng) == 0 ? 1 : 1 + order(rng);
    e.factors.push_back(f);
  }
  return e;
}

inline Tally parse_print_round_trip(int rounds, unsigned seed = 17) {
  Tally t;
  std::mt19937 rng(seed);
  for (int r = 0; r < rounds; ++r) {
    const ClassExpr e = random_expr(rng);
    const std::string text = print(e);
    bool same = false;
    try {
      same = parse(text) == e && print(parse(text)) == text;
    } catch (const std::exception&) {
    }
    t.check(same, text);
  }
  return t;
}

}  // namespace props
