#include "blocksieve/polynomial.hpp"

#include <algorithm>

#include "blocksieve/errors.hpp"

namespace blocksieve {

Poly trimmed(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const Poly& p) { return static_cast<int>(trimmed(p).size()) - 1; }

Q evaluate(const Poly& p, const Q& x) {
  Q out = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) out = out * x + *it;
  return out;
}

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  return trimmed(out);
}

Poly remainder(const Poly& a, const Poly& b) {
  const Poly d = trimmed(b);
  if (d.empty()) throw InvalidArgument("polynomial division by zero");
  Poly r = trimmed(a);
  while (r.size() >= d.size()) {
    const Q factor = r.back() / d.back();
    const std::size_t shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= factor * d[i];
    r = trimmed(r);
  }
  return r;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{trimmed(p), derivative(p)};
  while (!chain.back().empty()) {
    Poly next = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : next) c = -c;
    if (next.empty()) break;
    chain.push_back(std::move(next));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

namespace {

int sign_changes(const std::vector<Poly>& chain, const Q& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void isolate_integers(const std::vector<Poly>& chain, const Poly& p, const Z& lo,
                      const Z& hi, std::vector<Z>& out) {
  if (sturm_count(chain, Q(lo), Q(hi)) == 0) return;
  if (hi - lo == 1) {
    if (evaluate(p, Q(hi)) == 0) out.push_back(hi);
    return;
  }
  Z mid = lo + (hi - lo) / 2;
  isolate_integers(chain, p, lo, mid, out);
  isolate_integers(chain, p, mid, hi, out);
}

}  // namespace

std::size_t sturm_count(const std::vector<Poly>& chain, const Q& lo, const Q& hi) {
  return static_cast<std::size_t>(sign_changes(chain, lo) - sign_changes(chain, hi));
}

std::vector<Q> rational_roots(const Poly& input) {
  const Poly p = trimmed(input);
  if (p.empty()) throw InvalidArgument("rational_roots: zero polynomial");
  const std::size_t n = p.size() - 1;
  if (n == 0) return {};

  const Z den = common_denominator(p);
  std::vector<Z> a(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) a[i] = p[i].get_num() * (den / p[i].get_den());

  // a_n^(n-1) P(x) = M(a_n x) with M monic over Z.
  const Z lead = a[n];
  Poly monic(p.size());
  Z power = 1;
  for (std::size_t i = n; i-- > 0;) {
    monic[i] = Q(a[i] * power);
    power *= lead;
  }
  monic[n] = 1;

  Z bound = 1;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, Z(abs(monic[i].get_num())));
  bound += 1;

  const auto chain = sturm_chain(monic);
  std::vector<Z> ys;
  isolate_integers(chain, monic, -bound - 1, bound, ys);
  std::vector<Q> out;
  for (const auto& y : ys) {
    Q x(y, lead);
    x.canonicalize();
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace blocksieve
