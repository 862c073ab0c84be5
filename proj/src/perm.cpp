#include "sbd/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "sbd/errors.hpp"

namespace sbd {

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int x : images) {
    if (x < 0 || x >= n)
      throw RangeError("image " + std::to_string(x) + " out of range for degree " +
                       std::to_string(n));
    if (seen[x]) throw RepeatError("image " + std::to_string(x + 1) + " repeated");
    seen[x] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm parse_cycles(std::string_view text, int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError(1, std::string("expected '(' at position ") + std::to_string(i));
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError(1, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(1, std::string("unexpected character '") + text[i] +
                                "' at position " + std::to_string(i));
      long long val = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        val = val * 10 + (text[i] - '0');
        if (val > 1'000'000'000) throw ParseError(1, "point label too large");
        ++i;
      }
      if (val < 1 || val > degree)
        throw RangeError("point " + std::to_string(val) + " out of range 1.." +
                         std::to_string(degree));
      int z = static_cast<int>(val) - 1;
      if (used[z])
        throw RepeatError("point " + std::to_string(val) + " appears twice");
      used[z] = true;
      cycle.push_back(z);
    }
    if (cycle.empty()) throw ParseError(1, "empty cycle");
    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    skip_ws();
  }
  return Perm::from_images(std::move(images));
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (int s = 0; s < p.degree(); ++s) {
    if (seen[s] || p(s) == s) {
      seen[s] = true;
      continue;
    }
    out += "(";
    int x = s;
    bool first = true;
    do {
      if (!first) out += " ";
      out += std::to_string(x + 1);
      seen[x] = true;
      x = p(x);
      first = false;
    } while (x != s);
    out += ")";
  }
  return out;
}

long long perm_order(const Perm& p) {
  long long order = 1;
  std::vector<bool> seen(p.degree(), false);
  for (int s = 0; s < p.degree(); ++s) {
    if (seen[s]) continue;
    long long len = 0;
    int x = s;
    do {
      seen[x] = true;
      x = p(x);
      ++len;
    } while (x != s);
    order = std::lcm(order, len);
  }
  return order;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("compose of degrees " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  std::vector<int> images(a.degree());
  for (int x = 0; x < a.degree(); ++x) images[x] = b(a(x));
  return Perm::from_images(std::move(images));
}

Perm inverse(const Perm& p) {
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[p(x)] = x;
  return Perm::from_images(std::move(images));
}

Perm power(const Perm& p, long long m) {
  if (m < 0) return power(inverse(p), -m);
  Perm acc(p.degree());
  Perm base = p;
  while (m > 0) {
    if (m & 1) acc = compose(acc, base);
    base = compose(base, base);
    m >>= 1;
  }
  return acc;
}

long long count_fixed_points(const Perm& p) {
  long long c = 0;
  for (int i = 0; i < p.degree(); ++i) c += p(i) == i;
  return c;
}

std::vector<std::vector<int>> orbits(const GroupSpec& g, int domain_size) {
  for (const Perm& p : g.generators)
    if (p.degree() != domain_size)
      throw DegreeMismatch("generator degree " + std::to_string(p.degree()) +
                           " does not match domain size " +
                           std::to_string(domain_size));

  std::vector<std::vector<int>> out;
  std::vector<bool> seen(domain_size, false);
  for (int s = 0; s < domain_size; ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit{s};
    seen[s] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (const Perm& p : g.generators) {
        int y = p(orbit[q]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Perm> group_closure(const GroupSpec& g, std::size_t cap) {
  if (cap < 1) throw Error("closure cap must be positive");
  for (const Perm& p : g.generators)
    if (p.degree() != g.degree)
      throw DegreeMismatch("generator degree " + std::to_string(p.degree()) +
                           " does not match group degree " +
                           std::to_string(g.degree));

  std::vector<Perm> elems{Perm(g.degree)};
  std::set<std::vector<int>> known{elems[0].images()};
  for (std::size_t q = 0; q < elems.size(); ++q) {
    for (const Perm& gen : g.generators) {
      Perm n = compose(elems[q], gen);
      if (known.insert(n.images()).second) {
        if (known.size() > cap)
          throw CapExceeded("group closure exceeds cap of " + std::to_string(cap));
        elems.push_back(std::move(n));
      }
    }
  }
  return elems;
}

BurnsideResult burnside(
    const std::vector<Perm>& elements,
    const std::function<std::optional<long long>(const Perm&)>& fix_count,
    bool check_group) {
  if (elements.empty()) throw Error("element list is empty");
  if (check_group) {
    std::set<std::vector<int>> known;
    for (const Perm& e : elements) known.insert(e.images());
    if (known.size() != elements.size())
      throw Error("element list contains duplicates");
    for (const Perm& a : elements)
      for (const Perm& b : elements)
        if (!known.count(compose(a, b).images()))
          throw Error("element list is not closed under composition");
  }

  BurnsideResult r;
  r.group_order = static_cast<long long>(elements.size());
  for (const Perm& e : elements) {
    std::optional<long long> c = fix_count(e);
    if (!c)
      throw MissingFixCount("no fixed count for element " + format_cycles(e));
    r.fixed_sum += *c;
  }
  r.orbit_count = Fraction::of(r.fixed_sum, r.group_order);
  r.is_integral = r.orbit_count.integral();
  return r;
}

}  // namespace sbd
