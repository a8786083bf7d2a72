#include "idealord/rings.hpp"

#include <algorithm>
#include <numeric>
#include <deque>
#include <sstream>

namespace idealord {

std::string family_name(Family f) {
  switch (f) {
    case Family::Integer: return "integer";
    case Family::Modular: return "modular";
    case Family::Poly: return "poly";
    case Family::Triangular: return "triangular";
  }
  return "?";
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

RingSpec RingSpec::modular(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be >= 2");
  return {Family::Modular, n};
}

RingSpec RingSpec::poly(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("polynomial coefficient field needs prime p");
  return {Family::Poly, p};
}

RingSpec RingSpec::triangular(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("triangular ring needs prime p");
  return {Family::Triangular, p};
}

std::string RingSpec::describe() const {
  switch (family) {
    case Family::Integer: return "Z";
    case Family::Modular: return "Z_" + std::to_string(mod);
    case Family::Poly: return "F_" + std::to_string(mod) + "[x]";
    case Family::Triangular: return "UT2(F_" + std::to_string(mod) + ")";
  }
  return "?";
}

namespace {

void require_same_spec(const RingElement& x, const RingElement& y) {
  if (!(x.spec == y.spec))
    throw SpecMismatchError("elements of " + x.spec.describe() + " and " + y.spec.describe());
}

std::uint64_t reduce_mod(const Int& v, std::uint64_t m) {
  Int r = v % Int(m);
  if (r < 0) r += Int(m);
  return r.convert_to<std::uint64_t>();
}

}  // namespace

namespace polyops {

PolyCoeffs trim(PolyCoeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

PolyCoeffs add(const PolyCoeffs& f, const PolyCoeffs& g, std::uint64_t p) {
  PolyCoeffs out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = (i < f.size() ? f[i] : 0) + (i < g.size() ? g[i] : 0);
    out[i] = s % p;
  }
  return trim(std::move(out));
}

PolyCoeffs mul(const PolyCoeffs& f, const PolyCoeffs& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  PolyCoeffs out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = (out[i + j] + f[i] * g[j]) % p;
  return trim(std::move(out));
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime and a != 0 mod p.
  std::uint64_t r = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

std::pair<PolyCoeffs, PolyCoeffs> divmod(const PolyCoeffs& f, const PolyCoeffs& g, std::uint64_t p) {
  if (g.empty()) throw std::invalid_argument("polynomial division by zero");
  PolyCoeffs rem = f, quot;
  if (f.size() >= g.size()) quot.assign(f.size() - g.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (rem.size() >= g.size()) {
    std::size_t shift = rem.size() - g.size();
    std::uint64_t q = rem.back() * lead_inv % p;
    quot[shift] = q;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t sub = g[i] * q % p;
      rem[shift + i] = (rem[shift + i] + p - sub) % p;
    }
    rem = trim(std::move(rem));
    if (rem.size() < g.size()) break;
  }
  return {trim(std::move(quot)), std::move(rem)};
}

PolyCoeffs monic(const PolyCoeffs& f, std::uint64_t p) {
  if (f.empty()) return {};
  std::uint64_t s = inv_mod(f.back(), p);
  PolyCoeffs out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * s % p;
  return out;
}

std::string format(const PolyCoeffs& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || f[i] != 1) os << f[i];
    if (i >= 1) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace polyops

bool RingElement::is_zero() const {
  switch (spec.family) {
    case Family::Integer: return std::get<Int>(value) == 0;
    case Family::Modular: return std::get<std::uint64_t>(value) == 0;
    case Family::Poly: return std::get<PolyCoeffs>(value).empty();
    case Family::Triangular: {
      const auto& m = std::get<TriMat>(value);
      return m.a == 0 && m.b == 0 && m.c == 0;
    }
  }
  return false;
}

bool RingElement::is_one() const {
  switch (spec.family) {
    case Family::Integer: return std::get<Int>(value) == 1;
    case Family::Modular: return std::get<std::uint64_t>(value) == 1 % spec.mod;
    case Family::Poly: {
      const auto& c = std::get<PolyCoeffs>(value);
      return c.size() == 1 && c[0] == 1;
    }
    case Family::Triangular: {
      const auto& m = std::get<TriMat>(value);
      return m.a == 1 && m.b == 0 && m.c == 1;
    }
  }
  return false;
}

std::string RingElement::describe() const {
  switch (spec.family) {
    case Family::Integer: return std::get<Int>(value).str();
    case Family::Modular: return std::to_string(std::get<std::uint64_t>(value));
    case Family::Poly: return polyops::format(std::get<PolyCoeffs>(value));
    case Family::Triangular: {
      const auto& m = std::get<TriMat>(value);
      std::ostringstream os;
      os << "(" << m.a << " " << m.b << "; 0 " << m.c << ")";
      return os.str();
    }
  }
  return "?";
}

RingElement make_integer(const Int& v) { return {RingSpec::integers(), v}; }

RingElement make_residue(const RingSpec& spec, const Int& v) {
  if (spec.family != Family::Modular) throw UnsupportedFamilyError("residue needs a modular spec");
  return {spec, reduce_mod(v, spec.mod)};
}

RingElement make_poly(const RingSpec& spec, PolyCoeffs coeffs) {
  if (spec.family != Family::Poly) throw UnsupportedFamilyError("polynomial needs a poly spec");
  for (auto& c : coeffs) c %= spec.mod;
  return {spec, polyops::trim(std::move(coeffs))};
}

RingElement make_tri(const RingSpec& spec, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (spec.family != Family::Triangular) throw UnsupportedFamilyError("matrix needs a triangular spec");
  return {spec, TriMat{a % spec.mod, b % spec.mod, c % spec.mod}};
}

RingElement zero(const RingSpec& spec) {
  switch (spec.family) {
    case Family::Integer: return make_integer(0);
    case Family::Modular: return {spec, std::uint64_t{0}};
    case Family::Poly: return {spec, PolyCoeffs{}};
    case Family::Triangular: return {spec, TriMat{}};
  }
  throw std::logic_error("bad family");
}

RingElement one(const RingSpec& spec) {
  switch (spec.family) {
    case Family::Integer: return make_integer(1);
    case Family::Modular: return {spec, std::uint64_t{1 % spec.mod}};
    case Family::Poly: return {spec, PolyCoeffs{1}};
    case Family::Triangular: return {spec, TriMat{1, 0, 1}};
  }
  throw std::logic_error("bad family");
}

RingElement ring_add(const RingElement& x, const RingElement& y) {
  require_same_spec(x, y);
  const auto& spec = x.spec;
  switch (spec.family) {
    case Family::Integer:
      return {spec, std::get<Int>(x.value) + std::get<Int>(y.value)};
    case Family::Modular:
      return {spec, (std::get<std::uint64_t>(x.value) + std::get<std::uint64_t>(y.value)) % spec.mod};
    case Family::Poly:
      return {spec, polyops::add(std::get<PolyCoeffs>(x.value), std::get<PolyCoeffs>(y.value), spec.mod)};
    case Family::Triangular: {
      const auto& u = std::get<TriMat>(x.value);
      const auto& v = std::get<TriMat>(y.value);
      return {spec, TriMat{(u.a + v.a) % spec.mod, (u.b + v.b) % spec.mod, (u.c + v.c) % spec.mod}};
    }
  }
  throw std::logic_error("bad family");
}

RingElement ring_neg(const RingElement& x) {
  const auto& spec = x.spec;
  switch (spec.family) {
    case Family::Integer:
      return {spec, -std::get<Int>(x.value)};
    case Family::Modular: {
      auto v = std::get<std::uint64_t>(x.value);
      return {spec, v == 0 ? 0 : spec.mod - v};
    }
    case Family::Poly: {
      auto c = std::get<PolyCoeffs>(x.value);
      for (auto& v : c) v = v == 0 ? 0 : spec.mod - v;
      return {spec, std::move(c)};
    }
    case Family::Triangular: {
      auto m = std::get<TriMat>(x.value);
      auto neg = [&](std::uint64_t v) { return v == 0 ? 0 : spec.mod - v; };
      return {spec, TriMat{neg(m.a), neg(m.b), neg(m.c)}};
    }
  }
  throw std::logic_error("bad family");
}

RingElement ring_mul(const RingElement& x, const RingElement& y) {
  require_same_spec(x, y);
  const auto& spec = x.spec;
  switch (spec.family) {
    case Family::Integer:
      return {spec, std::get<Int>(x.value) * std::get<Int>(y.value)};
    case Family::Modular:
      return {spec, std::get<std::uint64_t>(x.value) * std::get<std::uint64_t>(y.value) % spec.mod};
    case Family::Poly:
      return {spec, polyops::mul(std::get<PolyCoeffs>(x.value), std::get<PolyCoeffs>(y.value), spec.mod)};
    case Family::Triangular: {
      // (a b; 0 c)(a' b'; 0 c') = (aa' ab'+bc'; 0 cc')
      const auto& u = std::get<TriMat>(x.value);
      const auto& v = std::get<TriMat>(y.value);
      const std::uint64_t p = spec.mod;
      return {spec, TriMat{u.a * v.a % p, (u.a * v.b + u.b * v.c) % p, u.c * v.c % p}};
    }
  }
  throw std::logic_error("bad family");
}

bool divides(const RingElement& a, const RingElement& b) {
  require_same_spec(a, b);
  const auto& spec = a.spec;
  if (!spec.commutative()) throw UnsupportedFamilyError("divisibility in noncommutative ring");
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  switch (spec.family) {
    case Family::Integer:
      return std::get<Int>(b.value) % std::get<Int>(a.value) == 0;
    case Family::Modular: {
      // b = ra mod n is solvable iff gcd(a, n) | b over the integers.
      std::uint64_t g = std::gcd(std::get<std::uint64_t>(a.value), spec.mod);
      return std::get<std::uint64_t>(b.value) % g == 0;
    }
    case Family::Poly: {
      auto [q, r] = polyops::divmod(std::get<PolyCoeffs>(b.value), std::get<PolyCoeffs>(a.value), spec.mod);
      (void)q;
      return r.empty();
    }
    default:
      throw std::logic_error("bad family");
  }
}

RingElement canonical_generator(const RingElement& a) {
  const auto& spec = a.spec;
  if (!spec.commutative()) throw UnsupportedFamilyError("canonical generator in noncommutative ring");
  switch (spec.family) {
    case Family::Integer:
      return {spec, abs(std::get<Int>(a.value))};
    case Family::Modular: {
      auto v = std::get<std::uint64_t>(a.value);
      if (v == 0) return a;  // gcd(0, n) = n, stored as residue 0
      return {spec, std::gcd(v, spec.mod) % spec.mod};
    }
    case Family::Poly:
      return {spec, polyops::monic(std::get<PolyCoeffs>(a.value), spec.mod)};
    default:
      throw std::logic_error("bad family");
  }
}

RingElement euclidean_gcd(const RingElement& a, const RingElement& b) {
  require_same_spec(a, b);
  const auto& spec = a.spec;
  switch (spec.family) {
    case Family::Integer:
      return {spec, boost::multiprecision::gcd(std::get<Int>(a.value), std::get<Int>(b.value))};
    case Family::Poly: {
      PolyCoeffs f = std::get<PolyCoeffs>(a.value), g = std::get<PolyCoeffs>(b.value);
      while (!g.empty()) {
        auto [q, r] = polyops::divmod(f, g, spec.mod);
        (void)q;
        f = std::move(g);
        g = std::move(r);
      }
      return {spec, polyops::monic(f, spec.mod)};
    }
    default:
      throw UnsupportedFamilyError("gcd only in Z and F_p[x]");
  }
}

std::vector<TriMat> all_tri_elements(const RingSpec& spec) {
  if (spec.family != Family::Triangular) throw UnsupportedFamilyError("finite enumeration needs the triangular ring");
  std::vector<TriMat> out;
  out.reserve(spec.mod * spec.mod * spec.mod);
  for (std::uint64_t a = 0; a < spec.mod; ++a)
    for (std::uint64_t b = 0; b < spec.mod; ++b)
      for (std::uint64_t c = 0; c < spec.mod; ++c) out.push_back({a, b, c});
  return out;
}

namespace {

TriMat tri_mul(const TriMat& u, const TriMat& v, std::uint64_t p) {
  return {u.a * v.a % p, (u.a * v.b + u.b * v.c) % p, u.c * v.c % p};
}

TriMat tri_add(const TriMat& u, const TriMat& v, std::uint64_t p) {
  return {(u.a + v.a) % p, (u.b + v.b) % p, (u.c + v.c) % p};
}

// Fixed-point closure under addition; the ring is finite so this terminates.
TriSet additive_closure(TriSet seed, std::uint64_t p) {
  std::deque<TriMat> work(seed.begin(), seed.end());
  while (!work.empty()) {
    TriMat m = work.front();
    work.pop_front();
    for (const auto& x : std::vector<TriMat>(seed.begin(), seed.end())) {
      TriMat s = tri_add(m, x, p);
      if (seed.insert(s).second) work.push_back(s);
    }
  }
  return seed;
}

}  // namespace

TriSet two_sided_ideal_closure(const RingSpec& spec, const TriMat& x) {
  if (spec.family != Family::Triangular) throw UnsupportedFamilyError("ideal closure needs the finite triangular ring");
  const std::uint64_t p = spec.mod;
  TriSet seed;
  for (const auto& r : all_tri_elements(spec))
    for (const auto& s : all_tri_elements(spec)) seed.insert(tri_mul(tri_mul(r, x, p), s, p));
  return additive_closure(std::move(seed), p);
}

TriSet set_ideal_product(const RingSpec& spec, const TriSet& lhs, const TriSet& rhs) {
  if (spec.family != Family::Triangular) throw UnsupportedFamilyError("set ideal product needs the finite triangular ring");
  const std::uint64_t p = spec.mod;
  TriSet seed;
  for (const auto& u : lhs)
    for (const auto& v : rhs) seed.insert(tri_mul(u, v, p));
  return additive_closure(std::move(seed), p);
}

nlohmann::ordered_json to_json(const RingSpec& spec) {
  nlohmann::ordered_json j;
  j["family"] = family_name(spec.family);
  if (spec.family == Family::Modular) j["n"] = spec.mod;
  if (spec.family == Family::Poly || spec.family == Family::Triangular) j["p"] = spec.mod;
  return j;
}

nlohmann::ordered_json to_json(const RingElement& x) {
  nlohmann::ordered_json j;
  j["family"] = family_name(x.spec.family);
  switch (x.spec.family) {
    case Family::Integer: j["value"] = std::get<Int>(x.value).str(); break;
    case Family::Modular: j["value"] = std::get<std::uint64_t>(x.value); break;
    case Family::Poly: j["value"] = std::get<PolyCoeffs>(x.value); break;
    case Family::Triangular: {
      const auto& m = std::get<TriMat>(x.value);
      j["value"] = {m.a, m.b, m.c};
      break;
    }
  }
  return j;
}

}  // namespace idealord
