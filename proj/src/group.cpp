#include "largesub/group.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "group_cache.hpp"
#include "largesub/catalog.hpp"
#include "largesub/structure.hpp"
#include "numbers.hpp"

namespace largesub {

namespace {

std::atomic<std::size_t> g_order_cap{2000};

void require_within_cap(std::size_t n, std::string_view what) {
  if (n > order_cap()) {
    throw Error(ErrorKind::OrderCapExceeded,
                std::string(what) + " has order " + std::to_string(n) +
                    ", above the cap of " + std::to_string(order_cap()));
  }
}

// Greedy generating set: repeatedly adjoin the smallest element not yet
// reached and close under right multiplication. Every reached element is a
// left-nested product of generators, which is what Light's test needs.
std::vector<Element> greedy_generators(std::size_t n,
                                       std::span<const Element> table) {
  std::vector<Element> gens;
  std::vector<char> reached(n, 0);
  std::vector<Element> order;
  reached[0] = 1;
  order.push_back(0);
  std::size_t count = 1;
  Element next = 1;
  while (count < n) {
    while (reached[next]) ++next;
    const Element g = next;
    gens.push_back(g);
    std::deque<std::pair<Element, std::size_t>> queue;
    // Existing elements need the new generator; new elements need all.
    for (Element r : order) queue.emplace_back(r, gens.size() - 1);
    while (!queue.empty()) {
      auto [x, first_gen] = queue.front();
      queue.pop_front();
      for (std::size_t k = first_gen; k < gens.size(); ++k) {
        const Element y = table[static_cast<std::size_t>(x) * n + gens[k]];
        if (!reached[y]) {
          reached[y] = 1;
          ++count;
          order.push_back(y);
          queue.emplace_back(y, 0);
        }
      }
    }
  }
  return gens;
}

std::vector<Element> inverses_of(std::size_t n, std::span<const Element> table) {
  std::vector<Element> inv(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table[a * n + b] == 0) {
        inv[a] = static_cast<Element>(b);
        break;
      }
  return inv;
}

Error not_a_group(std::string message) {
  return Error(ErrorKind::NotAGroup, std::move(message));
}

bool is_abelian_table(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

void require_abelian(const FiniteGroup& g, std::string_view op) {
  if (!is_abelian_table(g))
    throw Error(ErrorKind::NotAbelian,
                std::string(op) + " requires an abelian group, got " + g.name());
}

}  // namespace

std::size_t order_cap() noexcept { return g_order_cap.load(); }
void set_order_cap(std::size_t cap) noexcept { g_order_cap.store(cap); }

// -- FiniteGroup ------------------------------------------------------------

FiniteGroup::FiniteGroup(std::shared_ptr<const detail::GroupData> data)
    : data_(std::move(data)),
      cache_(std::make_shared<detail::GroupCache>()),
      table_(data_->table.data()),
      n_(data_->n) {}

std::size_t FiniteGroup::order() const noexcept { return n_; }
Element FiniteGroup::inv(Element a) const noexcept { return data_->inv[a]; }
const std::vector<Element>& FiniteGroup::generators() const noexcept {
  return data_->gens;
}
const std::string& FiniteGroup::name() const noexcept { return data_->name; }
const std::vector<std::string>& FiniteGroup::labels() const noexcept {
  return data_->labels;
}

std::string FiniteGroup::label(Element x) const {
  if (x < data_->labels.size()) return data_->labels[x];
  return std::to_string(x);
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto data = std::make_shared<detail::GroupData>(*data_);
  data->name = std::move(name);
  FiniteGroup out(std::move(data));
  out.cache_ = cache_;
  return out;
}

Element FiniteGroup::power(Element a, std::size_t k) const noexcept {
  Element result = 0;
  Element base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element a) const {
  auto& c = *cache_;
  std::call_once(c.orders_once, [&] {
    c.orders.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      std::size_t k = 1;
      Element y = static_cast<Element>(x);
      while (y != 0) {
        y = mul(y, static_cast<Element>(x));
        ++k;
      }
      c.orders[x] = k;
    }
  });
  return c.orders[a];
}

std::optional<std::array<Element, 3>> find_associativity_failure(
    std::size_t n, std::span<const Element> table) {
  const auto gens = greedy_generators(n, table);
  for (Element g : gens) {
    for (std::size_t x = 0; x < n; ++x) {
      const Element xg = table[x * n + g];
      for (std::size_t y = 0; y < n; ++y) {
        const Element gy = table[static_cast<std::size_t>(g) * n + y];
        if (table[static_cast<std::size_t>(xg) * n + y] != table[x * n + gy])
          return std::array<Element, 3>{static_cast<Element>(x), g,
                                        static_cast<Element>(y)};
      }
    }
  }
  return std::nullopt;
}

FiniteGroup FiniteGroup::from_multiplication_table(
    const std::vector<std::vector<Element>>& table,
    std::vector<std::string> labels, std::string name) {
  const std::size_t n = table.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw not_a_group("row " + std::to_string(r) + " has " +
                        std::to_string(table[r].size()) + " entries, expected " +
                        std::to_string(n));
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }
  return from_flat_table(n, std::move(flat), std::move(labels), std::move(name));
}

FiniteGroup FiniteGroup::from_flat_table(std::size_t n, std::vector<Element> table,
                                         std::vector<std::string> labels,
                                         std::string name) {
  if (n == 0) throw not_a_group("empty table");
  require_within_cap(n, name.empty() ? "table" : name);
  if (table.size() != n * n)
    throw not_a_group("table has " + std::to_string(table.size()) +
                      " entries, expected " + std::to_string(n * n));
  if (!labels.empty() && labels.size() != n)
    throw not_a_group("label count does not match order");
  for (Element v : table)
    if (v >= n) throw not_a_group("entry " + std::to_string(v) + " out of range");

  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[table[r * n + c]]++)
        throw not_a_group("row " + std::to_string(r) + " repeats " +
                          std::to_string(table[r * n + c]))
            .with_witness({static_cast<Element>(r), static_cast<Element>(c),
                           table[r * n + c]});
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[table[r * n + c]]++)
        throw not_a_group("column " + std::to_string(c) + " repeats " +
                          std::to_string(table[r * n + c]))
            .with_witness({static_cast<Element>(r), static_cast<Element>(c),
                           table[r * n + c]});
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = table[e * n + x] == x && table[x * n + e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw not_a_group("no identity element");

  // Swapping the identity with element 0 is an involution, so the same map
  // translates witnesses back to the caller's indices.
  const auto e = static_cast<Element>(*identity);
  auto swap_label = [e](Element x) -> Element { return x == 0 ? e : (x == e ? 0 : x); };
  if (e != 0) {
    std::vector<Element> relabeled(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        relabeled[swap_label(static_cast<Element>(a)) * n +
                  swap_label(static_cast<Element>(b))] =
            swap_label(table[a * n + b]);
    table = std::move(relabeled);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  const auto inv = inverses_of(n, table);
  for (std::size_t x = 0; x < n; ++x)
    if (table[static_cast<std::size_t>(inv[x]) * n + x] != 0)
      throw not_a_group("element " + std::to_string(x) +
                        " has no two-sided inverse")
          .with_witness({swap_label(static_cast<Element>(x)), swap_label(inv[x]), e});

  if (auto w = find_associativity_failure(n, table)) {
    for (auto& v : *w) v = swap_label(v);
    const auto [x, y, z] = *w;
    throw not_a_group("associativity fails for (" + std::to_string(x) + ", " +
                      std::to_string(y) + ", " + std::to_string(z) + ")")
        .with_witness(*w);
  }
  return trusted(n, std::move(table), std::move(name), std::move(labels));
}

FiniteGroup FiniteGroup::trusted(std::size_t n, std::vector<Element> table,
                                 std::string name,
                                 std::vector<std::string> labels) {
  require_within_cap(n, name.empty() ? "group" : name);
  assert(table.size() == n * n);
  auto data = std::make_shared<detail::GroupData>();
  data->n = n;
  data->inv = inverses_of(n, table);
  data->gens = greedy_generators(n, table);
  data->table = std::move(table);
  data->labels = std::move(labels);
  data->name = std::move(name);
  return FiniteGroup(std::move(data));
}

std::optional<std::string> check_group_axioms(const FiniteGroup& g) {
  try {
    FiniteGroup::from_flat_table(g.order(), g.flat_table());
  } catch (const Error& e) {
    return std::string(e.what());
  }
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.mul(0, static_cast<Element>(x)) != x)
      return std::string("identity is not at index 0");
  return std::nullopt;
}

// -- permutation groups -----------------------------------------------------

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<std::uint32_t>& p) const noexcept {
    std::size_t h = 0;
    for (auto v : p) h = h * 1000003u + v;
    return h;
  }
};

}  // namespace

FiniteGroup from_permutation_generators(const PermGenSet& gens, std::string name) {
  const std::size_t m = gens.degree;
  for (std::size_t i = 0; i < gens.generators.size(); ++i) {
    const auto& p = gens.generators[i];
    std::vector<char> hit(m, 0);
    bool ok = p.size() == m;
    for (std::size_t k = 0; ok && k < m; ++k) ok = p[k] < m && !hit[p[k]]++;
    if (!ok)
      throw not_a_group("generator " + std::to_string(i) +
                        " is not a permutation of 0.." + std::to_string(m) + "-1");
  }

  std::vector<std::uint32_t> id(m);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<std::vector<std::uint32_t>> perms{id};
  std::unordered_map<std::vector<std::uint32_t>, Element, PermHash> index{{id, 0}};
  // parent[x] * gens[via[x]] = x, for table assembly in discovery order.
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<std::vector<Element>> right;  // right[x][k] = x * gen_k

  const std::size_t k = gens.generators.size();
  for (std::size_t x = 0; x < perms.size(); ++x) {
    right.emplace_back(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<std::uint32_t> prod(m);
      const auto& g = gens.generators[j];
      for (std::size_t p = 0; p < m; ++p) prod[p] = g[perms[x][p]];
      auto [it, inserted] =
          index.try_emplace(std::move(prod), static_cast<Element>(perms.size()));
      if (inserted) {
        if (perms.size() + 1 > order_cap())
          throw Error(ErrorKind::OrderCapExceeded,
                      (name.empty() ? std::string("permutation group") : name) +
                          " has more than " + std::to_string(order_cap()) + " elements");
        perms.push_back(it->first);
        parent.push_back(static_cast<Element>(x));
        via.push_back(j);
      }
      right[x][j] = it->second;
    }
  }

  const std::size_t n = perms.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    table[a * n] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b)
      table[a * n + b] = right[table[a * n + parent[b]]][via[b]];
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : perms) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i)
      s += (i ? " " : "") + std::to_string(p[i]);
    labels.push_back(s + "]");
  }
  return FiniteGroup::trusted(n, std::move(table), std::move(name),
                              std::move(labels));
}

// -- constructions ----------------------------------------------------------

namespace {

std::string product_name(const FiniteGroup& g, const FiniteGroup& h,
                         std::string_view op) {
  auto wrap = [](const std::string& s) {
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(g.name().empty() ? "G" : g.name()) + std::string(op) +
         wrap(h.name().empty() ? "H" : h.name());
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t a = g.order();
  const std::size_t b = h.order();
  const std::string name = product_name(g, h, " x ");
  require_within_cap(a * b, name);
  const std::size_t n = a * b;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto gx = static_cast<Element>(x / b);
    const auto hx = static_cast<Element>(x % b);
    for (std::size_t y = 0; y < n; ++y) {
      const auto gy = static_cast<Element>(y / b);
      const auto hy = static_cast<Element>(y % b);
      table[x * n + y] = static_cast<Element>(g.mul(gx, gy) * b + h.mul(hx, hy));
    }
  }
  return FiniteGroup::trusted(n, std::move(table), name);
}

CentralProduct central_product(
    const FiniteGroup& g, const FiniteGroup& h,
    const std::vector<std::pair<Element, Element>>& pairing) {
  std::vector<Element> dom, img;
  for (auto [z, w] : pairing) {
    if (z >= g.order() || w >= h.order())
      throw Error(ErrorKind::NotIsomorphism, "pairing entry out of range");
    dom.push_back(z);
    img.push_back(w);
  }
  if (pairing.empty()) {
    dom.push_back(0);
    img.push_back(0);
  }
  const ElementSet dom_set(g.order(), dom);
  const ElementSet img_set(h.order(), img);
  if (dom_set.size() != dom.size() || img_set.size() != img.size())
    throw Error(ErrorKind::NotIsomorphism, "pairing is not a bijection");

  const Subgroup zg = center(g);
  const Subgroup zh = center(h);
  if (!dom_set.is_subset_of(zg.set()))
    throw Error(ErrorKind::NotCentral, "pairing domain is not central in " + g.name());
  if (!img_set.is_subset_of(zh.set()))
    throw Error(ErrorKind::NotCentral, "pairing image is not central in " + h.name());

  std::vector<Element> phi(g.order(), 0);
  std::vector<char> defined(g.order(), 0);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    phi[dom[i]] = img[i];
    defined[dom[i]] = 1;
  }
  for (Element x : dom)
    for (Element y : dom) {
      const Element xy = g.mul(x, y);
      if (!defined[xy])
        throw Error(ErrorKind::NotIsomorphism, "pairing domain is not a subgroup");
      if (phi[xy] != h.mul(phi[x], phi[y]))
        throw Error(ErrorKind::NotIsomorphism,
                    "pairing is not a homomorphism at (" + std::to_string(x) +
                        ", " + std::to_string(y) + ")");
    }

  const std::size_t a = g.order();
  const std::size_t b = h.order();
  const std::size_t n = a * b / dom.size();
  const std::string name = product_name(g, h, " o ");
  require_within_cap(n, name);

  // Classes of (x, y) ~ (xz, y phi(z)^-1), numbered by first appearance.
  constexpr Element unassigned = ~Element{0};
  std::vector<Element> class_of(a * b, unassigned);
  std::vector<std::size_t> rep;
  rep.reserve(n);
  for (std::size_t p = 0; p < a * b; ++p) {
    if (class_of[p] != unassigned) continue;
    const auto id = static_cast<Element>(rep.size());
    rep.push_back(p);
    const auto x = static_cast<Element>(p / b);
    const auto y = static_cast<Element>(p % b);
    for (Element z : dom)
      class_of[static_cast<std::size_t>(g.mul(x, z)) * b + h.mul(y, h.inv(phi[z]))] = id;
  }
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = static_cast<Element>(rep[i] / b);
    const auto yi = static_cast<Element>(rep[i] % b);
    for (std::size_t j = 0; j < n; ++j) {
      const auto xj = static_cast<Element>(rep[j] / b);
      const auto yj = static_cast<Element>(rep[j] % b);
      table[i * n + j] =
          class_of[static_cast<std::size_t>(g.mul(xi, xj)) * b + h.mul(yi, yj)];
    }
  }
  CentralProduct out{FiniteGroup::trusted(n, std::move(table), name), {}, {}};
  out.embed_first.resize(a);
  out.embed_second.resize(b);
  for (std::size_t x = 0; x < a; ++x) out.embed_first[x] = class_of[x * b];
  for (std::size_t y = 0; y < b; ++y) out.embed_second[y] = class_of[y];
  return out;
}

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (n.parent_order() != g.order() || !is_normal(g, n))
    throw Error(ErrorKind::NotNormal,
                "subgroup of order " + std::to_string(n.order()) +
                    " is not normal in " + g.name());
  constexpr Element unassigned = ~Element{0};
  const auto members = n.elements();
  std::vector<Element> proj(g.order(), unassigned);
  std::vector<Element> rep;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (proj[x] != unassigned) continue;
    const auto id = static_cast<Element>(rep.size());
    rep.push_back(static_cast<Element>(x));
    for (Element m : members) proj[g.mul(static_cast<Element>(x), m)] = id;
  }
  const std::size_t q = rep.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = proj[g.mul(rep[i], rep[j])];
  std::string name = (g.name().empty() ? "G" : g.name()) + "/N" +
                     std::to_string(n.order());
  return {FiniteGroup::trusted(q, std::move(table), std::move(name)), std::move(proj)};
}

Subgroup make_subgroup(const FiniteGroup& g, std::span<const Element> elements) {
  ElementSet set(g.order());
  for (Element x : elements) {
    if (x >= g.order())
      throw Error(ErrorKind::NotClosed, "element " + std::to_string(x) + " out of range");
    set.insert(x);
  }
  if (!set.contains(0)) throw Error(ErrorKind::NotClosed, "identity missing");
  const auto members = set.elements();
  for (Element x : members)
    for (Element y : members)
      if (!set.contains(g.mul(x, y)))
        throw Error(ErrorKind::NotClosed, "product of " + std::to_string(x) +
                                              " and " + std::to_string(y) +
                                              " leaves the set");
  return Subgroup::trusted(std::move(set));
}

EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s) {
  if (s.parent_order() != g.order())
    throw Error(ErrorKind::NotClosed, "subgroup belongs to a different group");
  const auto members = s.elements();
  // Validates closure; the result is discarded.
  make_subgroup(g, members);
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i)
    local[members[i]] = static_cast<Element>(i);
  const std::size_t m = members.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = local[g.mul(members[i], members[j])];
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Element x : members) labels.push_back(g.label(x));
  std::string name = (g.name().empty() ? "G" : g.name()) + "[" + std::to_string(m) + "]";
  return {FiniteGroup::trusted(m, std::move(table), std::move(name), std::move(labels)),
          members};
}

// -- abelian groups ---------------------------------------------------------

AbelianInvariants abelian_invariants(const FiniteGroup& a) {
  require_abelian(a, "abelian_invariants");
  AbelianInvariants out;
  const std::size_t n = a.order();
  for (auto [p, alpha] : factorize(n)) {
    (void)alpha;
    // omega[k] = #{x : x^(p^k) = 1} = p^(sum_i min(a_i, k)).
    std::vector<std::size_t> omega{1};
    std::size_t pk = 1;
    const std::size_t p_part = prime_part(n, p);
    while (omega.back() < p_part) {
      pk *= p;
      std::size_t c = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (pk % a.element_order(static_cast<Element>(x)) == 0) ++c;
      omega.push_back(c);
    }
    // at_least[k] = number of cyclic factors with exponent >= k.
    std::vector<std::size_t> at_least(omega.size() + 1, 0);
    for (std::size_t k = 1; k < omega.size(); ++k)
      at_least[k] = integer_log(omega[k] / omega[k - 1], p);
    std::size_t q = 1;
    for (std::size_t k = 1; k < omega.size(); ++k) {
      q *= p;
      for (std::size_t r = at_least[k] - at_least[k + 1]; r > 0; --r)
        out.primary_orders.push_back(q);
    }
  }
  return out;
}

std::vector<BasisElement> abelian_basis(const FiniteGroup& a) {
  require_abelian(a, "abelian_basis");
  std::vector<BasisElement> out;
  const std::size_t n = a.order();
  for (auto [p, alpha] : factorize(n)) {
    (void)alpha;
    const std::size_t p_part = prime_part(n, p);
    std::vector<Element> sylow;
    for (std::size_t x = 0; x < n; ++x)
      if (p_part % a.element_order(static_cast<Element>(x)) == 0)
        sylow.push_back(static_cast<Element>(x));
    // Elements of maximal order first; ties broken by index.
    std::stable_sort(sylow.begin(), sylow.end(), [&](Element x, Element y) {
      return a.element_order(x) > a.element_order(y);
    });
    ElementSet span(n);
    span.insert(0);
    std::vector<BasisElement> chosen;
    while (span.size() < p_part) {
      bool extended = false;
      for (Element y : sylow) {
        const std::size_t oy = a.element_order(y);
        bool independent = true;
        Element power = y;
        for (std::size_t i = 1; i < oy && independent; ++i, power = a.mul(power, y))
          independent = !span.contains(power);
        if (!independent) continue;
        ElementSet next(n);
        const auto current = span.elements();
        Element py = 0;
        for (std::size_t i = 0; i < oy; ++i, py = a.mul(py, y))
          for (Element s : current) next.insert(a.mul(s, py));
        span = std::move(next);
        chosen.push_back({y, oy});
        extended = true;
        break;
      }
      assert(extended);
      if (!extended) break;
    }
    out.insert(out.end(), chosen.rbegin(), chosen.rend());
  }
  return out;
}

std::vector<std::pair<Element, Element>> abelian_isomorphism(const EmbeddedGroup& a,
                                                             const EmbeddedGroup& b) {
  if (abelian_invariants(a.group) != abelian_invariants(b.group))
    throw Error(ErrorKind::NotIsomorphism,
                a.group.name() + " and " + b.group.name() + " are not isomorphic");
  const auto ba = abelian_basis(a.group);
  const auto bb = abelian_basis(b.group);
  std::vector<std::pair<Element, Element>> out;
  out.reserve(a.group.order());
  std::vector<std::size_t> exps(ba.size(), 0);
  while (true) {
    Element x = 0, y = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      x = a.group.mul(x, a.group.power(ba[i].element, exps[i]));
      y = b.group.mul(y, b.group.power(bb[i].element, exps[i]));
    }
    out.emplace_back(a.back_map[x], b.back_map[y]);
    std::size_t i = 0;
    while (i < exps.size() && ++exps[i] == ba[i].order) exps[i++] = 0;
    if (i == exps.size()) break;
  }
  return out;
}

FiniteGroup frattini_cover_abelian(const FiniteGroup& z) {
  const auto inv = abelian_invariants(z);
  std::size_t total = 1;
  for (std::size_t q : inv.primary_orders) total *= q * smallest_prime_factor(q);
  require_within_cap(total, "Frattini cover");
  FiniteGroup y = trivial_group();
  std::string name;
  for (std::size_t q : inv.primary_orders) {
    const std::size_t cover = q * smallest_prime_factor(q);
    y = y.is_trivial() ? cyclic_group(cover) : direct_product(y, cyclic_group(cover));
    name += (name.empty() ? "" : " x ") + std::string("C") + std::to_string(cover);
  }
  return y.renamed(name.empty() ? "1" : name);
}

}  // namespace largesub
