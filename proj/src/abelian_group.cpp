#include "lpalie/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_set>
#include <vector>

namespace lpalie {

std::string to_string(PointedIso p) {
  switch (p) {
    case PointedIso::exists: return "yes";
    case PointedIso::absent: return "no";
    case PointedIso::undecided: return "undecided";
  }
  return "undecided";
}

namespace {

struct Split {
  std::vector<BigInt> free_part;
  // (alpha, coordinate) for alpha > 1.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> torsion;
};

Split split(const K0Presentation& pres) {
  Split s;
  for (std::size_t i = 0; i < pres.invariant_factors.size(); ++i) {
    const BigInt& a = pres.invariant_factors[i];
    if (a == 0) {
      s.free_part.push_back(pres.unit_class[i]);
    } else if (a > 1) {
      BigInt r = pres.unit_class[i] % a;
      s.torsion.emplace_back(a.get_ui(), r.get_ui());
    }
  }
  return s;
}

BigInt content(const std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::uint64_t power(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using wide = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<wide>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Generators of the unit group of Z/p^e (all of it for e >= 1).
std::vector<std::uint64_t> unit_generators(std::uint64_t p, unsigned e) {
  const std::uint64_t modulus = power(p, e);
  if (p == 2) return {modulus - 1, 5 % modulus};
  const auto qs = prime_factors(p - 1);
  std::uint64_t g = 2;
  for (;; ++g) {
    bool primitive = std::all_of(qs.begin(), qs.end(), [&](std::uint64_t q) { return powmod(g, (p - 1) / q, p) != 1; });
    if (primitive) break;
  }
  // g generates (Z/p^2)^* unless g^(p-1) == 1 mod p^2, in which case g + p does.
  if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
  return {g % modulus};
}

// One p-primary component: coordinates in Z/p^exponents[i].
struct Primary {
  std::uint64_t p;
  std::vector<unsigned> exponents;
  std::vector<std::uint64_t> moduli;
  std::vector<std::uint64_t> from;
  std::vector<std::uint64_t> to;

  std::uint64_t encode(const std::vector<std::uint64_t>& x) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < x.size(); ++i) code = code * moduli[i] + x[i];
    return code;
  }
};

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Whether x and y agree modulo g * (this component); g == 0 means exactly.
bool congruent(const Primary& c, const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y,
               const BigInt& g) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t step = c.moduli[i];
    if (g != 0) {
      BigInt d = gcd(g, BigInt(static_cast<unsigned long>(c.moduli[i])));
      step = d.get_ui();
    }
    if (x[i] % step != y[i] % step) return false;
  }
  return true;
}

bool orbit_meets(const Primary& c, const BigInt& g) {
  const std::size_t n = c.moduli.size();
  std::vector<std::vector<std::uint64_t>> units(n);
  for (std::size_t i = 0; i < n; ++i) units[i] = unit_generators(c.p, c.exponents[i]);

  std::unordered_set<std::uint64_t> seen{c.encode(c.from)};
  std::queue<std::vector<std::uint64_t>> frontier;
  frontier.push(c.from);
  auto visit = [&](std::vector<std::uint64_t>&& y) {
    if (seen.insert(c.encode(y)).second) frontier.push(std::move(y));
  };

  while (!frontier.empty()) {
    auto x = std::move(frontier.front());
    frontier.pop();
    if (congruent(c, x, c.to, g)) return true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint64_t u : units[i]) {
        auto y = x;
        y[i] = mulmod(y[i], u, c.moduli[i]);
        visit(std::move(y));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        // The homomorphism Z/p^e_j -> Z/p^e_i sending 1 to p^max(0, e_i - e_j).
        const unsigned shift = c.exponents[i] > c.exponents[j] ? c.exponents[i] - c.exponents[j] : 0;
        auto y = x;
        y[i] = (y[i] + mulmod(power(c.p, shift), x[j], c.moduli[i])) % c.moduli[i];
        visit(std::move(y));
        if (c.exponents[i] == c.exponents[j]) {
          auto z = x;
          std::swap(z[i], z[j]);
          visit(std::move(z));
        }
      }
    }
  }
  return false;
}

}  // namespace

PointedIsoDecision pointed_isomorphism(const K0Presentation& a, const K0Presentation& b,
                                       std::uint64_t max_group_order) {
  if (a.free_rank() != b.free_rank()) {
    return {PointedIso::absent, "free ranks differ: " + std::to_string(a.free_rank()) + " vs " +
                                    std::to_string(b.free_rank())};
  }
  if (a.torsion_factors() != b.torsion_factors()) {
    return {PointedIso::absent, "torsion invariant factors differ: " + to_string(a.torsion_factors()) + " vs " +
                                    to_string(b.torsion_factors())};
  }
  const Split sa = split(a);
  const Split sb = split(b);
  const BigInt g = content(sa.free_part);
  const BigInt g2 = content(sb.free_part);
  if (g != g2) {
    return {PointedIso::absent, "free parts of the marked classes have contents " + g.get_str() + " and " +
                                    g2.get_str()};
  }
  if (sa.torsion.empty()) return {PointedIso::exists, "groups agree and the marked free parts have equal content"};

  const BigInt order = a.torsion_order();
  if (order > BigInt(static_cast<unsigned long>(max_group_order))) {
    return {PointedIso::undecided, "torsion order " + order.get_str() + " exceeds the search bound " +
                                       std::to_string(max_group_order)};
  }

  // p-primary decomposition: Z/alpha -> Z/p^e is reduction mod p^e.
  std::map<std::uint64_t, Primary> parts;
  for (std::size_t k = 0; k < sa.torsion.size(); ++k) {
    const std::uint64_t alpha = sa.torsion[k].first;
    for (std::uint64_t p : prime_factors(alpha)) {
      const unsigned e = valuation(alpha, p);
      const std::uint64_t pe = power(p, e);
      auto& part = parts[p];
      part.p = p;
      part.exponents.push_back(e);
      part.moduli.push_back(pe);
      part.from.push_back(sa.torsion[k].second % pe);
      part.to.push_back(sb.torsion[k].second % pe);
    }
  }
  for (const auto& [p, part] : parts) {
    if (!orbit_meets(part, g)) {
      return {PointedIso::absent, "no automorphism of the " + std::to_string(p) +
                                      "-primary torsion carries one marked class to the other"};
    }
  }
  return {PointedIso::exists, "an automorphism of the torsion part matches the marked classes"};
}

}  // namespace lpalie
