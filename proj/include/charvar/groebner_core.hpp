#pragma once

// Scalar-generic machinery behind the Groebner engine: polynomials as term
// vectors sorted by a monomial order, reduction, S-polynomials and a
// Buchberger loop with Gebauer-Moeller pair pruning.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <deque>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "charvar/errors.hpp"
#include "charvar/monomial_order.hpp"
#include "charvar/polynomial.hpp"

namespace charvar {

/// Caps on Groebner computations. Exceeding one raises ResourceCapExceeded.
struct GroebnerLimits {
  unsigned max_degree = 40;
  std::size_t max_pairs = 1'000'000;
  /// Worker threads for S-pair reduction; the result does not depend on it.
  unsigned threads = 1;
};

namespace detail {

template <typename Scalar>
struct Term {
  ExponentVector exp;
  Scalar coeff;
};

/// Terms in strictly descending order; never contains a zero coefficient.
template <typename Scalar>
using SortedPoly = std::vector<Term<Scalar>>;

template <typename Scalar>
SortedPoly<Scalar> to_sorted(const MultiPoly<Scalar>& p, const MonomialOrder& ord) {
  SortedPoly<Scalar> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) out.push_back({e, c});
  std::sort(out.begin(), out.end(),
            [&](const Term<Scalar>& a, const Term<Scalar>& b) { return ord.less(b.exp, a.exp); });
  return out;
}

template <typename Scalar>
MultiPoly<Scalar> from_sorted(const SortedPoly<Scalar>& p, const Variables& vars) {
  MultiPoly<Scalar> out(vars);
  for (const auto& t : p) out.add_term(t.exp, t.coeff);
  return out;
}

template <typename Scalar>
unsigned sorted_degree(const SortedPoly<Scalar>& p) {
  unsigned d = 0;
  for (const auto& t : p) d = std::max(d, total_degree(t.exp));
  return d;
}

template <typename Scalar>
void make_monic(SortedPoly<Scalar>& p) {
  if (p.empty()) return;
  const Scalar inv = Scalar(1) / p.front().coeff;
  for (auto& t : p) t.coeff = t.coeff * inv;
}

/// Returns a[from..] - c * x^shift * b[skip..], merged in order.
template <typename Scalar>
SortedPoly<Scalar> sub_mul(const SortedPoly<Scalar>& a, std::size_t from, const Scalar& c,
                           const ExponentVector& shift, const SortedPoly<Scalar>& b,
                           std::size_t skip, const MonomialOrder& ord) {
  SortedPoly<Scalar> out;
  out.reserve(a.size() - from + b.size() - skip);
  std::size_t i = from, j = skip;
  ExponentVector eb;
  while (i < a.size() || j < b.size()) {
    if (j < b.size()) eb = product(b[j].exp, shift);
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i >= a.size()) {
      out.push_back({eb, -(c * b[j].coeff)});
      ++j;
      continue;
    }
    const auto cmp = ord.compare(a[i].exp, eb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({eb, -(c * b[j].coeff)});
      ++j;
    } else {
      Scalar v = a[i].coeff - c * b[j].coeff;
      if (!is_zero(v)) out.push_back({a[i].exp, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename Scalar>
const SortedPoly<Scalar>* find_reducer(const ExponentVector& e,
                                       const std::vector<const SortedPoly<Scalar>*>& basis) {
  for (const auto* g : basis)
    if (divides(g->front().exp, e)) return g;
  return nullptr;
}

using IntPoly = std::vector<Term<Integer>>;

/// Primitive integer multiple of p; `scale` receives the factor applied.
inline IntPoly primitive_integer_form(const SortedPoly<Rational>& p, Rational& scale) {
  Integer den = 1;
  for (const auto& t : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get().get_den_mpz_t());
  IntPoly out;
  out.reserve(p.size());
  Integer content = 0;
  for (const auto& t : p) {
    Integer c = t.coeff.get().get_num() * (den / t.coeff.get().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    out.push_back({t.exp, std::move(c)});
  }
  if (content > 1)
    for (auto& t : out) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), content.get_mpz_t());
  scale = Rational(den, content == 0 ? Integer(1) : content);
  return out;
}

/// ka * a[from..] - kb * x^shift * b[skip..], merged in order; consumes a.
inline IntPoly combine(IntPoly& a, std::size_t from, const Integer& ka, const Integer& kb,
                       const ExponentVector& shift, const IntPoly& b, std::size_t skip,
                       const MonomialOrder& ord) {
  IntPoly out;
  out.reserve(a.size() - from + b.size() - skip);
  const bool unit_a = ka == 1;
  std::size_t i = from, j = skip;
  ExponentVector eb;
  if (j < b.size()) eb = product(b[j].exp, shift);
  while (i < a.size() || j < b.size()) {
    const auto cmp = i >= a.size() ? std::strong_ordering::less
                     : j >= b.size() ? std::strong_ordering::greater
                                     : ord.compare(a[i].exp, eb);
    if (cmp > 0) {
      if (!unit_a) a[i].coeff *= ka;
      out.push_back(std::move(a[i++]));
      continue;
    }
    Integer v;
    mpz_mul(v.get_mpz_t(), b[j].coeff.get_mpz_t(), kb.get_mpz_t());
    mpz_neg(v.get_mpz_t(), v.get_mpz_t());
    if (cmp == 0) {
      if (unit_a) mpz_add(v.get_mpz_t(), v.get_mpz_t(), a[i].coeff.get_mpz_t());
      else mpz_addmul(v.get_mpz_t(), a[i].coeff.get_mpz_t(), ka.get_mpz_t());
      ++i;
    }
    if (sgn(v) != 0) out.push_back({std::move(eb), std::move(v)});
    if (++j < b.size()) eb = product(b[j].exp, shift);
  }
  return out;
}

/// Normal form over Q computed on primitive integer multiples, so that no
/// rational normalization happens inside the reduction loop.
inline SortedPoly<Rational> reduce_fraction_free(
    const SortedPoly<Rational>& input, const std::vector<const SortedPoly<Rational>*>& basis,
    const MonomialOrder& ord) {
  Rational scale;
  IntPoly h = primitive_integer_form(input, scale);
  IntPoly rest;
  std::vector<std::pair<const SortedPoly<Rational>*, IntPoly>> reducers;
  auto integer_form = [&](const SortedPoly<Rational>* g) -> const IntPoly& {
    for (const auto& [p, q] : reducers)
      if (p == g) return q;
    Rational unused;
    reducers.emplace_back(g, primitive_integer_form(*g, unused));
    return reducers.back().second;
  };
  Integer d, ka, kb;
  std::size_t head = 0;
  while (head < h.size()) {
    const SortedPoly<Rational>* g = nullptr;
    for (const auto* candidate : basis)
      if (divides(candidate->front().exp, h[head].exp)) {
        g = candidate;
        break;
      }
    if (!g) {
      rest.push_back(std::move(h[head]));
      ++head;
      continue;
    }
    const IntPoly& gi = integer_form(g);
    mpz_gcd(d.get_mpz_t(), h[head].coeff.get_mpz_t(), gi.front().coeff.get_mpz_t());
    mpz_divexact(ka.get_mpz_t(), gi.front().coeff.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(kb.get_mpz_t(), h[head].coeff.get_mpz_t(), d.get_mpz_t());
    if (sgn(ka) < 0) {
      ka = -ka;
      kb = -kb;
    }
    h = combine(h, head + 1, ka, kb, quotient(h[head].exp, gi.front().exp), gi, 1, ord);
    head = 0;
    if (ka != 1) {
      for (auto& t : rest) t.coeff *= ka;
      scale *= Rational(ka);
    }
    // Divide out the common content, stopping early once it is known to be 1.
    Integer content = 0;
    for (const IntPoly* part : {&rest, &h}) {
      for (const auto& t : *part) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_mpz_t());
        if (content == 1) break;
      }
      if (content == 1) break;
    }
    if (content > 1) {
      for (IntPoly* part : {&rest, &h})
        for (auto& t : *part) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), content.get_mpz_t());
      scale /= Rational(content);
    }
  }
  SortedPoly<Rational> out;
  out.reserve(rest.size());
  const Rational inverse = Rational(1) / scale;
  for (auto& t : rest) out.push_back({std::move(t.exp), Rational(t.coeff) * inverse});
  return out;
}

/// Full normal form of h with respect to `basis` (leading coefficients need
/// not be 1).
template <typename Scalar>
SortedPoly<Scalar> reduce(SortedPoly<Scalar> h, const std::vector<const SortedPoly<Scalar>*>& basis,
                          const MonomialOrder& ord) {
  if constexpr (std::is_same_v<Scalar, Rational>) return reduce_fraction_free(h, basis, ord);
  SortedPoly<Scalar> rest;
  std::size_t head = 0;
  while (head < h.size()) {
    const Term<Scalar>& lt = h[head];
    if (const auto* g = find_reducer(lt.exp, basis)) {
      const Scalar c = lt.coeff / g->front().coeff;
      h = sub_mul(h, head + 1, c, quotient(lt.exp, g->front().exp), *g, 1, ord);
      head = 0;
    } else {
      rest.push_back(lt);
      ++head;
    }
  }
  return rest;
}

template <typename Scalar>
std::vector<const SortedPoly<Scalar>*> pointers(const std::vector<SortedPoly<Scalar>>& polys) {
  std::vector<const SortedPoly<Scalar>*> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(&p);
  return out;
}

template <typename Scalar>
SortedPoly<Scalar> s_polynomial(const SortedPoly<Scalar>& f, const SortedPoly<Scalar>& g,
                                const MonomialOrder& ord) {
  const ExponentVector l = lcm(f.front().exp, g.front().exp);
  const ExponentVector sf = quotient(l, f.front().exp);
  const ExponentVector sg = quotient(l, g.front().exp);
  SortedPoly<Scalar> fs;
  fs.reserve(f.size());
  const Scalar inv_f = Scalar(1) / f.front().coeff;
  for (std::size_t k = 1; k < f.size(); ++k) fs.push_back({product(f[k].exp, sf), f[k].coeff * inv_f});
  return sub_mul(fs, 0, Scalar(1) / g.front().coeff, sg, g, 1, ord);
}

/// Buchberger's algorithm with Gebauer-Moeller pair updates and the normal
/// selection strategy: all pairs sharing the least lcm form one batch. Returns the reduced Groebner basis, monic and sorted
/// by descending leading monomial.
template <typename Scalar>
class Buchberger {
 public:
  Buchberger(const MonomialOrder& ord, const GroebnerLimits& limits) : ord_(ord), limits_(limits) {}

  std::vector<SortedPoly<Scalar>> run(std::vector<SortedPoly<Scalar>> generators) {
    // Seed with generators in a fixed order (ascending leading monomial).
    std::vector<SortedPoly<Scalar>> seeds;
    for (auto& g : generators)
      if (!g.empty()) seeds.push_back(std::move(g));
    std::stable_sort(seeds.begin(), seeds.end(), [&](const auto& a, const auto& b) {
      return ord_.less(a.front().exp, b.front().exp);
    });
    for (auto& g : seeds) {
      auto h = reduce(std::move(g), alive_pointers(), ord_);
      if (h.empty()) continue;
      insert(std::move(h));
      if (unit_) return finish();
    }

    while (!pairs_.empty()) {
      std::vector<Pair> batch = take_batch();
      std::vector<SortedPoly<Scalar>> reduced(batch.size());
      reduce_batch(batch, reduced);
      for (std::size_t k = 0; k < batch.size(); ++k) {
        auto h = reduce(std::move(reduced[k]), alive_pointers(), ord_);
        if (h.empty()) continue;
        insert(std::move(h));
        if (unit_) return finish();
      }
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    ExponentVector lcm;
  };

  std::vector<const SortedPoly<Scalar>*> alive_pointers() const {
    std::vector<const SortedPoly<Scalar>*> out;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (alive_[k]) out.push_back(&basis_[k]);
    return out;
  }

  std::vector<Pair> take_batch() {
    const Pair* least = &pairs_.front();
    for (const auto& p : pairs_)
      if (ord_.less(p.lcm, least->lcm)) least = &p;
    const ExponentVector l = least->lcm;
    std::vector<Pair> batch, keep;
    for (auto& p : pairs_) (p.lcm == l ? batch : keep).push_back(std::move(p));
    pairs_ = std::move(keep);
    std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
      if (auto c = ord_.compare(a.lcm, b.lcm); c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    processed_ += batch.size();
    if (processed_ > limits_.max_pairs)
      throw ResourceCapExceeded("S-pair limit of " + std::to_string(limits_.max_pairs) + " exceeded");
    return batch;
  }

  void reduce_batch(const std::vector<Pair>& batch, std::vector<SortedPoly<Scalar>>& out) const {
    const auto reducers = alive_pointers();
    auto work = [&](std::size_t k) {
      out[k] = reduce(s_polynomial(basis_[batch[k].i], basis_[batch[k].j], ord_), reducers, ord_);
    };
    const unsigned threads = std::max(1U, limits_.threads);
    if (threads == 1 || batch.size() < 2) {
      for (std::size_t k = 0; k < batch.size(); ++k) work(k);
      return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, batch.size()); ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < batch.size(); k = next++) work(k);
      });
    }
    for (auto& th : pool) th.join();
  }

  void insert(SortedPoly<Scalar> h) {
    make_monic(h);
    if (total_degree(h.front().exp) == 0) {
      unit_ = true;
      basis_.push_back(std::move(h));
      alive_.push_back(true);
      return;
    }
    if (sorted_degree(h) > limits_.max_degree)
      throw ResourceCapExceeded("basis element of degree " + std::to_string(sorted_degree(h)) +
                                " exceeds the degree cap " + std::to_string(limits_.max_degree));
    const std::size_t hi = basis_.size();
    const ExponentVector& lh = h.front().exp;

    // Gebauer-Moeller update.
    std::deque<Pair> candidates;
    for (std::size_t i = 0; i < hi; ++i) {
      if (!alive_[i]) continue;
      const ExponentVector& li = basis_[i].front().exp;
      const ExponentVector l = lcm(li, lh);
      candidates.push_back({i, hi, l});
    }
    std::vector<Pair> kept;
    while (!candidates.empty()) {
      Pair p = std::move(candidates.front());
      candidates.pop_front();
      const bool is_coprime = coprime(basis_[p.i].front().exp, lh);
      auto divides_p = [&](const Pair& q) { return divides(q.lcm, p.lcm); };
      if (is_coprime || (std::none_of(candidates.begin(), candidates.end(), divides_p) &&
                         std::none_of(kept.begin(), kept.end(), divides_p))) {
        kept.push_back(std::move(p));
      }
    }
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!coprime(basis_[p.i].front().exp, lh)) fresh.push_back(std::move(p));

    std::vector<Pair> old;
    for (auto& p : pairs_) {
      const ExponentVector lih = lcm(basis_[p.i].front().exp, lh);
      const ExponentVector ljh = lcm(basis_[p.j].front().exp, lh);
      if (divides(lh, p.lcm) && lih != p.lcm && ljh != p.lcm) continue;
      old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    for (std::size_t i = 0; i < hi; ++i)
      if (alive_[i] && divides(lh, basis_[i].front().exp)) alive_[i] = false;
    basis_.push_back(std::move(h));
    alive_.push_back(true);
  }

  std::vector<SortedPoly<Scalar>> finish() {
    if (unit_) {
      SortedPoly<Scalar> one{{ExponentVector(dimension(), 0), Scalar(1)}};
      return {one};
    }
    std::vector<SortedPoly<Scalar>> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (alive_[k]) minimal.push_back(basis_[k]);
    return interreduce(std::move(minimal), ord_);
  }

  std::size_t dimension() const { return basis_.empty() ? 0 : basis_.front().front().exp.size(); }

 public:
  /// Tail-reduces a minimal basis and sorts it by descending leading monomial.
  static std::vector<SortedPoly<Scalar>> interreduce(std::vector<SortedPoly<Scalar>> basis,
                                                     const MonomialOrder& ord) {
    std::vector<SortedPoly<Scalar>> out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const SortedPoly<Scalar>*> others;
      for (std::size_t m = 0; m < basis.size(); ++m)
        if (m != k) others.push_back(&basis[m]);
      SortedPoly<Scalar> tail(basis[k].begin() + 1, basis[k].end());
      SortedPoly<Scalar> g{basis[k].front()};
      for (auto& t : reduce(std::move(tail), others, ord)) g.push_back(std::move(t));
      make_monic(g);
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return ord.less(b.front().exp, a.front().exp); });
    return out;
  }

 private:
  MonomialOrder ord_;
  GroebnerLimits limits_;
  std::vector<SortedPoly<Scalar>> basis_;
  std::vector<bool> alive_;
  std::vector<Pair> pairs_;
  std::size_t processed_ = 0;
  bool unit_ = false;
};

/// Drops basis elements whose leading monomial is divisible by another's.
template <typename Scalar>
std::vector<SortedPoly<Scalar>> minimalize(std::vector<SortedPoly<Scalar>> basis) {
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t m = 0; m < basis.size() && keep[k]; ++m) {
      if (m == k) continue;
      const auto& lm = basis[m].front().exp;
      const auto& lk = basis[k].front().exp;
      keep[k] = !(divides(lm, lk) && (lm != lk || m < k));
    }
  }
  std::vector<SortedPoly<Scalar>> out;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (keep[k]) out.push_back(std::move(basis[k]));
  return out;
}

}  // namespace detail
}  // namespace charvar
