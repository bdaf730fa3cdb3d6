#include "largesub/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>

namespace largesub {

namespace {

std::vector<std::uint32_t> cycle_perm(std::size_t degree,
                                      std::initializer_list<std::uint32_t> cycle) {
  std::vector<std::uint32_t> p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::uint32_t> c(cycle);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

std::vector<std::uint32_t> cycle_perm(std::size_t degree,
                                      const std::vector<std::uint32_t>& c) {
  std::vector<std::uint32_t> p(degree);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

Error unknown(std::string_view key, std::string_view why) {
  return Error(ErrorKind::UnknownName,
               "'" + std::string(key) + "': " + std::string(why));
}

}  // namespace

FiniteGroup trivial_group() { return FiniteGroup::trusted(1, {0}, "1"); }

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw unknown("cyclic(0)", "order must be positive");
  if (n == 1) return trivial_group();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::trusted(n, std::move(table), "C" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t order) {
  if (order < 2 || order % 2)
    throw unknown("dihedral(" + std::to_string(order) + ")",
                  "order must be even and at least 2");
  const std::size_t m = order / 2;
  // r^i s^j is encoded as i + m*j; s r = r^-1 s.
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, a = x / m, k = y % m, b = y / m;
      const std::size_t rot = a ? (i + m - k) % m : (i + k) % m;
      table[x * order + y] = static_cast<Element>(rot + m * ((a + b) % 2));
    }
  return FiniteGroup::trusted(order, std::move(table), "D" + std::to_string(order));
}

FiniteGroup quaternion_group(std::size_t order) {
  if (order < 8 || (order & (order - 1)) != 0)
    throw unknown("quaternion(" + std::to_string(order) + ")",
                  "order must be a power of two, at least 8");
  const std::size_t m = order / 4;  // a has order 2m, b^2 = a^m
  const std::size_t two_m = 2 * m;
  // a^i b^j is encoded as i + 2m*j; b a = a^-1 b.
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % two_m, j = x / two_m, k = y % two_m, l = y / two_m;
      std::size_t e = j ? (i + two_m - k) % two_m : (i + k) % two_m;
      std::size_t f = j + l;
      if (f == 2) {
        e = (e + m) % two_m;
        f = 0;
      }
      table[x * order + y] = static_cast<Element>(e + two_m * f);
    }
  return FiniteGroup::trusted(order, std::move(table), "Q" + std::to_string(order));
}

FiniteGroup symmetric_group(std::size_t degree) {
  if (degree == 0 || degree > 6)
    throw unknown("symmetric(" + std::to_string(degree) + ")",
                  "degree must be between 1 and 6");
  if (degree == 1) return trivial_group().renamed("S1");
  PermGenSet gens{degree, {cycle_perm(degree, {0, 1})}};
  if (degree > 2) {
    std::vector<std::uint32_t> all(degree);
    std::iota(all.begin(), all.end(), 0u);
    gens.generators.push_back(cycle_perm(degree, all));
  }
  return from_permutation_generators(gens, "S" + std::to_string(degree));
}

FiniteGroup alternating_group(std::size_t degree) {
  if (degree == 0 || degree > 6)
    throw unknown("alternating(" + std::to_string(degree) + ")",
                  "degree must be between 1 and 6");
  if (degree < 3) return trivial_group().renamed("A" + std::to_string(degree));
  PermGenSet gens{degree, {}};
  // The 3-cycles (0 1 k) generate A_n.
  for (std::uint32_t k = 2; k < degree; ++k)
    gens.generators.push_back(cycle_perm(degree, {0, 1, k}));
  return from_permutation_generators(gens, "A" + std::to_string(degree));
}

FiniteGroup klein_four_group() {
  std::vector<Element> table(16);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) table[a * 4 + b] = static_cast<Element>(a ^ b);
  return FiniteGroup::trusted(4, std::move(table), "V4");
}

FiniteGroup special_linear_2_3() {
  using Mat = std::array<int, 4>;  // row-major [a b; c d] over GF(3)
  std::vector<Mat> mats{{1, 0, 0, 1}};
  for (int code = 0; code < 81; ++code) {
    Mat m{code % 3, code / 3 % 3, code / 9 % 3, code / 27 % 3};
    if (m == mats.front()) continue;
    if (((m[0] * m[3] - m[1] * m[2]) % 3 + 3) % 3 == 1) mats.push_back(m);
  }
  auto index_of = [&](const Mat& m) {
    return static_cast<Element>(std::find(mats.begin(), mats.end(), m) - mats.begin());
  };
  const std::size_t n = mats.size();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Mat& a = mats[x];
      const Mat& b = mats[y];
      Mat c{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3, (a[2] * b[1] + a[3] * b[3]) % 3};
      table[x * n + y] = index_of(c);
    }
  std::vector<std::string> labels;
  for (const Mat& m : mats)
    labels.push_back("[" + std::to_string(m[0]) + " " + std::to_string(m[1]) + "; " +
                     std::to_string(m[2]) + " " + std::to_string(m[3]) + "]");
  return FiniteGroup::trusted(n, std::move(table), "SL(2,3)", std::move(labels));
}

FiniteGroup named_group(std::string_view key) {
  std::string compact;
  for (char c : key)
    if (!std::isspace(static_cast<unsigned char>(c)))
      compact.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

  const auto open = compact.find('(');
  const std::string head = compact.substr(0, open);
  std::vector<std::size_t> args;
  if (open != std::string::npos) {
    if (compact.back() != ')') throw unknown(key, "missing ')'");
    std::string_view body(compact);
    body = body.substr(open + 1, body.size() - open - 2);
    while (!body.empty()) {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
      if (ec != std::errc()) throw unknown(key, "expected an integer argument");
      args.push_back(value);
      body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
      if (!body.empty()) {
        if (body.front() != ',') throw unknown(key, "expected ','");
        body.remove_prefix(1);
      }
    }
  }
  auto one_arg = [&]() {
    if (args.size() != 1) throw unknown(key, "expected exactly one argument");
    return args[0];
  };

  if (head == "trivial" && args.empty()) return trivial_group();
  if (head == "klein_four" && args.empty()) return klein_four_group();
  if (head == "cyclic") return cyclic_group(one_arg());
  if (head == "dihedral") return dihedral_group(one_arg());
  if (head == "quaternion") return quaternion_group(one_arg());
  if (head == "symmetric") return symmetric_group(one_arg());
  if (head == "alternating") return alternating_group(one_arg());
  if (head == "sl" && args == std::vector<std::size_t>{2, 3}) return special_linear_2_3();
  throw unknown(key, "not in the catalog");
}

std::vector<std::string> catalog_keys() {
  return {"trivial",        "cyclic(n)",      "dihedral(2n)",
          "quaternion(2^k)", "symmetric(n<=6)", "alternating(n<=6)",
          "klein_four",     "sl(2,3)"};
}

}  // namespace largesub
