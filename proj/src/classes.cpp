#include "largesub/classes.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "largesub/radicals.hpp"
#include "largesub/structure.hpp"
#include "numbers.hpp"

namespace largesub {

PrimeSet parse_prime_set(std::string_view text) {
  PrimeSet out;
  std::string_view rest = text;
  auto skip = [&rest] {
    while (!rest.empty() && (std::isspace(static_cast<unsigned char>(rest.front())) ||
                             rest.front() == '{' || rest.front() == '}'))
      rest.remove_prefix(1);
  };
  skip();
  while (!rest.empty()) {
    std::size_t p = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec != std::errc() || !is_prime(p))
      throw Error(ErrorKind::ParseError, "bad prime set '" + std::string(text) + "'");
    out.push_back(p);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    skip();
    if (!rest.empty()) {
      if (rest.front() != ',')
        throw Error(ErrorKind::ParseError, "bad prime set '" + std::string(text) + "'");
      rest.remove_prefix(1);
      skip();
    }
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty prime set");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_prime_set(const PrimeSet& pi) {
  std::string s;
  for (std::size_t p : pi) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

PrimeSet complement_primes(const PrimeSet& pi, std::size_t n) {
  PrimeSet out;
  for (std::size_t p : prime_divisors(n))
    if (!std::binary_search(pi.begin(), pi.end(), p)) out.push_back(p);
  return out;
}

namespace {

void require_nonempty(const PrimeSet& pi) {
  if (pi.empty()) throw Error(ErrorKind::BadBound, "prime set must be nonempty");
}

bool primes_within(std::size_t n, const PrimeSet& pi) {
  for (std::size_t p : prime_divisors(n))
    if (!std::binary_search(pi.begin(), pi.end(), p)) return false;
  return true;
}

}  // namespace

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

std::optional<std::size_t> nilpotency_class(const FiniteGroup& g) {
  const auto series = lower_central_series(g);
  if (!series.reaches_trivial()) return std::nullopt;
  return series.length();
}

std::optional<std::size_t> derived_length(const FiniteGroup& g) {
  const auto series = derived_series(g);
  if (!series.reaches_trivial()) return std::nullopt;
  return series.length();
}

bool is_nilpotent(const FiniteGroup& g) { return nilpotency_class(g).has_value(); }
bool is_soluble(const FiniteGroup& g) { return derived_length(g).has_value(); }

bool is_simple(const FiniteGroup& g) {
  return g.order() > 1 && normal_subgroups(g).size() == 2;
}

bool is_supersoluble(const FiniteGroup& g) {
  const auto series = chief_series(g);
  return std::all_of(series.factor_orders.begin(), series.factor_orders.end(),
                     [](std::size_t f) { return is_prime(f); });
}

bool is_pi_group(const FiniteGroup& g, const PrimeSet& pi) {
  require_nonempty(pi);
  return primes_within(g.order(), pi);
}

bool is_quasisimple(const FiniteGroup& g) {
  if (g.is_trivial()) return false;
  const Subgroup whole = Subgroup::whole(g.order());
  if (!commutator_subgroup(g, whole, whole).is_whole()) return false;
  return is_simple(quotient_group(g, center(g)).group);
}

bool is_quasinilpotent(const FiniteGroup& g) {
  return generalized_fitting(g).subgroup.is_whole();
}

bool is_pi_separable(const FiniteGroup& g, const PrimeSet& pi) {
  require_nonempty(pi);
  for (std::size_t f : composition_series(g).factor_orders) {
    const bool pi_factor = primes_within(f, pi);
    const bool pi_prime_factor = primes_within(f, complement_primes(pi, g.order()));
    if (!pi_factor && !pi_prime_factor) return false;
  }
  return true;
}

bool has_normal_hall_pi_prime(const FiniteGroup& g, const PrimeSet& pi) {
  require_nonempty(pi);
  const PrimeSet rest = complement_primes(pi, g.order());
  std::size_t hall_order = 1;
  for (std::size_t p : rest) hall_order *= prime_part(g.order(), p);
  if (rest.empty()) return true;
  return o_pi(g, rest).subgroup.order() == hall_order;
}

bool in_extension_closure(const ClassPredicate& x, const FiniteGroup& g) {
  if (!x.closed_under.normal_subgroups)
    throw Error(ErrorKind::ClosureNotDeclared,
                "class '" + x.name +
                    "' is not declared closed under normal subgroups; the "
                    "composition-factor criterion does not apply");
  for (const auto& factor : composition_factors(g))
    if (!x.member(factor)) return false;
  return true;
}

bool is_in_X0(const FiniteGroup& g) {
  if (!is_soluble(g))
    throw Error(ErrorKind::NotSoluble, (g.name().empty() ? "group" : g.name()) +
                                           " is not soluble");
  const Subgroup residual = supersoluble_residual(g);
  if (residual.is_trivial()) return true;
  const auto minimal = minimal_normal_subgroups(g);
  return std::find(minimal.begin(), minimal.end(), residual) != minimal.end();
}

// -- builtin classes --------------------------------------------------------

namespace {

std::size_t parse_bound(std::string_view key, std::string_view arg) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
  if (ec != std::errc() || ptr != arg.data() + arg.size())
    throw Error(ErrorKind::UnknownClass, "bad bound in class key '" + std::string(key) + "'");
  return v;
}

}  // namespace

ClassPredicate builtin_class(std::string_view key) {
  std::string compact;
  for (char c : key)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  std::string head = compact;
  std::string arg;
  if (auto colon = compact.find(':'); colon != std::string::npos) {
    head = compact.substr(0, colon);
    arg = compact.substr(colon + 1);
  } else if (auto open = compact.find('('); open != std::string::npos) {
    if (compact.back() != ')')
      throw Error(ErrorKind::UnknownClass, "unbalanced class key '" + std::string(key) + "'");
    head = compact.substr(0, open);
    arg = compact.substr(open + 1, compact.size() - open - 2);
  }
  auto no_arg = [&] {
    if (!arg.empty())
      throw Error(ErrorKind::UnknownClass, "class '" + head + "' takes no argument");
  };

  ClosureFlags all{true, true, true, true, true, true};
  if (head == "abelian") {
    no_arg();
    return {"abelian", [](const FiniteGroup& g) { return is_abelian(g); },
            {true, true, true, false, false, false}};
  }
  if (head == "nilpotent") {
    no_arg();
    return {"nilpotent", [](const FiniteGroup& g) { return is_nilpotent(g); }, all};
  }
  if (head == "soluble") {
    no_arg();
    return {"soluble", [](const FiniteGroup& g) { return is_soluble(g); }, all};
  }
  if (head == "supersoluble") {
    no_arg();
    // Saturated formation, subgroup closed, central-extension closed; not a
    // Fitting class.
    return {"supersoluble", [](const FiniteGroup& g) { return is_supersoluble(g); },
            {true, true, true, true, true, false}};
  }
  if (head == "quasinilpotent") {
    no_arg();
    return {"quasinilpotent", [](const FiniteGroup& g) { return is_quasinilpotent(g); },
            all};
  }
  if (head == "nilpotent_class") {
    const std::size_t c = parse_bound(key, arg);
    return {"nilpotent_class:" + std::to_string(c),
            [c](const FiniteGroup& g) {
              auto k = nilpotency_class(g);
              return k && *k <= c;
            },
            {true, true, true, false, false, false}};
  }
  if (head == "soluble_derived") {
    const std::size_t d = parse_bound(key, arg);
    return {"soluble_derived:" + std::to_string(d),
            [d](const FiniteGroup& g) {
              auto k = derived_length(g);
              return k && *k <= d;
            },
            {true, true, true, false, false, false}};
  }
  if (head == "normal_hall_pi_prime") {
    const PrimeSet pi = parse_prime_set(arg);
    return {"normal_hall_pi_prime:" + format_prime_set(pi),
            [pi](const FiniteGroup& g) { return has_normal_hall_pi_prime(g, pi); }, all};
  }
  if (head == "pi_separable") {
    const PrimeSet pi = parse_prime_set(arg);
    return {"pi_separable:" + format_prime_set(pi),
            [pi](const FiniteGroup& g) { return is_pi_separable(g, pi); }, all};
  }
  throw Error(ErrorKind::UnknownClass, "unknown class key '" + std::string(key) + "'");
}

}  // namespace largesub
