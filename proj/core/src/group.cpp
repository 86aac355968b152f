#include "fusionring/group.hpp"

#include "fusionring/catalog.hpp"
#include "fusionring/errors.hpp"
#include "fusionring/integrality.hpp"
#include "fusionring/tuples.hpp"

#include <boost/math/constants/constants.hpp>

#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fusionring {

namespace {

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::size_t point(const std::string& token, std::size_t degree) {
  std::size_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid point '" + token + "' in cycle notation");
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > degree) {
      break;
    }
  }
  if (value < 1 || value > degree) {
    throw std::invalid_argument("point " + token + " out of range 1.." + std::to_string(degree));
  }
  return value - 1;
}

Real max_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Real m(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, Real(abs(a[i] - b[i])));
  }
  return m;
}

}  // namespace

Perm parse_cycles(const std::string& text, std::size_t degree) {
  if (degree == 0 || degree > kMaxPermDegree) {
    throw std::invalid_argument("permutation degree must be between 1 and " +
                                std::to_string(kMaxPermDegree));
  }
  Perm p = identity_perm(degree);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
      ++pos;
    }
  };
  skip_space();
  if (pos == text.size()) {
    throw std::invalid_argument("empty cycle notation");
  }
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw std::invalid_argument("expected '(' in cycle notation '" + text + "'");
    }
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) {
      throw std::invalid_argument("unbalanced parenthesis in '" + text + "'");
    }
    const std::string body = text.substr(pos + 1, close - pos - 1);
    std::vector<std::string> tokens;
    if (body.find_first_of(" ,") != std::string::npos) {
      std::string cur;
      for (char c : body + " ") {
        if (c == ' ' || c == ',') {
          if (!cur.empty()) {
            tokens.push_back(cur);
          }
          cur.clear();
        } else {
          cur += c;
        }
      }
    } else {
      for (char c : body) {
        tokens.emplace_back(1, c);
      }
    }
    std::vector<std::size_t> cycle;
    for (const auto& t : tokens) {
      const std::size_t x = point(t, degree);
      if (used[x]) {
        throw std::invalid_argument("point " + t + " repeated in '" + text + "'");
      }
      used[x] = true;
      cycle.push_back(x);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    }
    pos = close + 1;
    skip_space();
  }
  return p;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) {
      continue;
    }
    out += "(";
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      out += (first ? "" : " ") + std::to_string(y + 1);
      first = false;
      y = p[y];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    c[x] = a[b[x]];
  }
  return c;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    q[p[x]] = static_cast<std::uint8_t>(x);
  }
  return q;
}

std::size_t element_order(const Perm& p) {
  std::size_t order = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      ++len;
    }
    if (len > 0) {
      order = std::lcm(order, len);
    }
  }
  return order;
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) {
    throw std::out_of_range("permutation " + cycle_string(p) + " is not in the group");
  }
  return it->second;
}

std::size_t PermGroup::product(std::size_t a, std::size_t b) const {
  return index_of(compose(elements[a], elements[b]));
}

std::size_t PermGroup::inverse_of(std::size_t a) const { return index_of(inverse(elements[a])); }

PermGroup enumerate(std::vector<Perm> generators) {
  if (generators.empty()) {
    throw std::invalid_argument("at least one generator is required");
  }
  PermGroup g;
  g.degree = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != g.degree) {
      throw std::invalid_argument("generators act on different degrees");
    }
  }
  g.generators = std::move(generators);

  std::deque<std::size_t> queue;
  auto add = [&](Perm p) {
    if (g.lookup_.count(p)) {
      return;
    }
    if (g.elements.size() == kMaxGroupOrder) {
      throw DomainError("group order exceeds " + std::to_string(kMaxGroupOrder));
    }
    g.lookup_.emplace(p, g.elements.size());
    queue.push_back(g.elements.size());
    g.elements.push_back(std::move(p));
  };
  add(identity_perm(g.degree));
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators) {
      add(compose(g.elements[x], s));
    }
  }

  const std::size_t none = g.elements.size();
  g.class_of.assign(g.elements.size(), none);
  std::vector<Perm> inverses;
  for (const auto& s : g.generators) {
    inverses.push_back(inverse(s));
  }
  for (std::size_t x = 0; x < g.elements.size(); ++x) {
    if (g.class_of[x] != none) {
      continue;
    }
    const std::size_t c = g.classes.size();
    g.classes.emplace_back();
    std::deque<std::size_t> orbit{x};
    g.class_of[x] = c;
    while (!orbit.empty()) {
      const std::size_t y = orbit.front();
      orbit.pop_front();
      g.classes[c].push_back(y);
      for (std::size_t k = 0; k < g.generators.size(); ++k) {
        const std::size_t z = g.index_of(compose(compose(g.generators[k], g.elements[y]), inverses[k]));
        if (g.class_of[z] == none) {
          g.class_of[z] = c;
          orbit.push_back(z);
        }
      }
    }
    std::sort(g.classes[c].begin(), g.classes[c].end());
    g.centralizer_orders.push_back(g.elements.size() / g.classes[c].size());
  }
  return g;
}

PermGroup symmetric_group_3() { return enumerate({parse_cycles("(12)", 3), parse_cycles("(123)", 3)}); }

PermGroup cyclic_group(std::size_t n) {
  if (n == 0 || n > kMaxPermDegree) {
    throw std::invalid_argument("cyclic group order must be between 1 and " +
                                std::to_string(kMaxPermDegree));
  }
  Perm c(n);
  for (std::size_t x = 0; x < n; ++x) {
    c[x] = static_cast<std::uint8_t>((x + 1) % n);
  }
  return enumerate({c});
}

PermGroup dihedral_group_4() {
  return enumerate({parse_cycles("(1234)", 4), parse_cycles("(13)", 4)});
}

std::uint64_t count_tuples(const PermGroup& group, const std::vector<std::size_t>& classes) {
  if (classes.size() < 2) {
    throw std::invalid_argument("count_tuples needs at least two classes");
  }
  for (std::size_t c : classes) {
    if (c >= group.classes.size()) {
      throw std::out_of_range("class index " + std::to_string(c) + " out of range");
    }
  }
  const std::size_t n = classes.size();
  std::uint64_t count = 0;
  std::vector<std::size_t> pos(n - 1, 0);
  while (true) {
    std::size_t prod = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      prod = group.product(prod, group.classes[classes[k]][pos[k]]);
    }
    if (group.class_of[group.inverse_of(prod)] == classes[n - 1]) {
      ++count;
    }
    std::size_t k = n - 1;
    while (k > 0 && pos[k - 1] + 1 == group.classes[classes[k - 1]].size()) {
      pos[k - 1] = 0;
      --k;
    }
    if (k == 0) {
      return count;
    }
    ++pos[k - 1];
  }
}

OrbitDivisibility orbit_divisibility(const PermGroup& group, const std::vector<std::size_t>& classes) {
  const std::size_t n = classes.size();
  std::set<std::vector<std::size_t>> solutions;
  std::vector<std::size_t> pos(n - 1, 0);
  while (true) {
    std::vector<std::size_t> t(n);
    std::size_t prod = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      t[k] = group.classes[classes[k]][pos[k]];
      prod = group.product(prod, t[k]);
    }
    t[n - 1] = group.inverse_of(prod);
    if (group.class_of[t[n - 1]] == classes[n - 1]) {
      solutions.insert(t);
    }
    std::size_t k = n - 1;
    while (k > 0 && pos[k - 1] + 1 == group.classes[classes[k - 1]].size()) {
      pos[k - 1] = 0;
      --k;
    }
    if (k == 0) {
      break;
    }
    ++pos[k - 1];
  }

  std::vector<std::size_t> gens;
  std::vector<std::size_t> gens_inv;
  for (const auto& s : group.generators) {
    gens.push_back(group.index_of(s));
    gens_inv.push_back(group.index_of(inverse(s)));
  }
  OrbitDivisibility out;
  std::set<std::vector<std::size_t>> seen;
  for (const auto& start : solutions) {
    if (seen.count(start)) {
      continue;
    }
    std::deque<std::vector<std::size_t>> queue{start};
    seen.insert(start);
    std::size_t size = 0;
    while (!queue.empty()) {
      auto t = std::move(queue.front());
      queue.pop_front();
      ++size;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::vector<std::size_t> u(n);
        for (std::size_t i = 0; i < n; ++i) {
          u[i] = group.product(group.product(gens[k], t[i]), gens_inv[k]);
        }
        if (seen.insert(u).second) {
          queue.push_back(std::move(u));
        }
      }
    }
    out.orbit_sizes.push_back(size);
    for (std::size_t c : classes) {
      out.divisible = out.divisible && size % group.classes[c].size() == 0;
    }
  }
  return out;
}

RepGOracle s3_oracle() {
  RepGOracle o{"s3", symmetric_group_3(), catalog("rep_s3"), {}};
  for (const auto& cls : o.group.classes) {
    switch (element_order(o.group.elements[cls.front()])) {
      case 1:
        o.class_characters.push_back({Complex(1), Complex(1), Complex(2)});
        break;
      case 2:
        o.class_characters.push_back({Complex(1), Complex(-1), Complex(0)});
        break;
      default:
        o.class_characters.push_back({Complex(1), Complex(1), Complex(-1)});
        break;
    }
  }
  return o;
}

RepGOracle cyclic_oracle(std::size_t n) {
  RepGOracle o{"cyclic_" + std::to_string(n), cyclic_group(n), catalog("cyclic_" + std::to_string(n)), {}};
  const Perm& gen = o.group.generators.front();
  std::vector<Perm> powers{identity_perm(n)};
  for (std::size_t k = 1; k < n; ++k) {
    powers.push_back(compose(powers.back(), gen));
  }
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  for (const auto& cls : o.group.classes) {
    const Perm& g = o.group.elements[cls.front()];
    const auto k = static_cast<std::size_t>(std::find(powers.begin(), powers.end(), g) - powers.begin());
    std::vector<Complex> row;
    for (std::size_t j = 0; j < n; ++j) {
      const Real angle = two_pi * Real((j * k) % n) / Real(n);
      row.emplace_back(boost::multiprecision::cos(angle), boost::multiprecision::sin(angle));
    }
    o.class_characters.push_back(std::move(row));
  }
  return o;
}

std::vector<std::size_t> match_classes(const RepGOracle& oracle, const Spectrum& spectrum,
                                       const Settings& settings) {
  PrecisionScope scope(settings.precision_bits);
  const Real tol = settings.tolerance() * std::max(Real(1), spectrum.fpdim);
  const std::size_t k = spectrum.size();
  if (k != oracle.group.classes.size()) {
    throw StructuralError("ring has " + std::to_string(k) + " characters but the group has " +
                          std::to_string(oracle.group.classes.size()) + " classes");
  }
  std::vector<std::size_t> match(k, k);
  std::vector<bool> taken(k, false);
  for (Index s = 0; s < k; ++s) {
    for (std::size_t c = 0; c < k; ++c) {
      if (!taken[c] && max_distance(spectrum.chars[s], oracle.class_characters[c]) <= tol) {
        match[s] = c;
        taken[c] = true;
        break;
      }
    }
    if (match[s] == k) {
      throw StructuralError("character " + std::to_string(s) + " matches no conjugacy class");
    }
  }
  return match;
}

std::vector<ResidualReport> crosscheck_repG(const RepGOracle& oracle, const Spectrum& spectrum,
                                            const std::vector<int>& ns, const Settings& settings) {
  PrecisionScope scope(settings.precision_bits);
  const auto match = match_classes(oracle, spectrum, settings);
  const std::size_t k = spectrum.size();
  std::vector<Index> char_of_class(k);
  for (Index s = 0; s < k; ++s) {
    char_of_class[match[s]] = s;
  }
  const CenterDims cd = center_dims(spectrum);
  std::vector<ResidualReport> out;

  ResidualReport dims;
  dims.check = "dimZ-vs-class-size";
  for (Index s = 0; s < k; ++s) {
    ++dims.evaluated;
    const Real res = abs(cd.dimZ[s] - Real(oracle.group.classes[match[s]].size()));
    if (dims.worst.empty() || res > dims.max_residual) {
      dims.max_residual = res;
      dims.worst = {static_cast<long>(s)};
    }
  }
  out.push_back(std::move(dims));

  const Rational zero{0, 1};
  for (int n : ns) {
    ResidualReport counts;
    counts.check = "J/dimC-vs-count(n=" + std::to_string(n) + ")";
    ResidualReport orbits;
    orbits.check = "orbit-divisibility(n=" + std::to_string(n) + ")";
    std::size_t failing = 0;
    for_each_tuple(k, static_cast<std::size_t>(n), [&](const std::vector<Index>& cls) {
      std::vector<Index> chars;
      for (Index c : cls) {
        chars.push_back(char_of_class[c]);
      }
      const Complex j = J_ns(spectrum, cd, zero, chars) / cd.dimC;
      const std::uint64_t count = count_tuples(oracle.group, cls);
      ++counts.evaluated;
      const Real res = abs(j - Complex(Real(count)));
      if (counts.worst.empty() || res > counts.max_residual) {
        counts.max_residual = res;
        counts.worst = to_long(cls);
      }
      ++orbits.evaluated;
      if (!orbit_divisibility(oracle.group, cls).divisible) {
        if (failing++ == 0) {
          orbits.worst = to_long(cls);
        }
      }
    });
    orbits.max_residual = Real(failing);
    out.push_back(std::move(counts));
    out.push_back(std::move(orbits));
  }
  return out;
}

}  // namespace fusionring
