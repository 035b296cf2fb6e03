#pragma once

/*
 * Root data for semisimple groups.
 *
 * Conventions used throughout the library:
 *
 *   - A weight is stored by its coordinates in the fundamental weight basis,
 *     i.e. lambda = (<lambda, a_1^v>, ..., <lambda, a_n^v>).
 *   - cartan(i, j) = <a_i, a_j^v>, so the simple root a_i is row i of the
 *     Cartan matrix when written in fundamental weight coordinates.
 *   - A root additionally carries its coordinates in the simple root basis and
 *     the coordinates of its coroot in the simple coroot basis; the pairing
 *     <lambda, beta^v> is the dot product of the latter with lambda.
 *   - B2 is labelled with a_1 short and a_2 long (the usual convention for
 *     Sp4 in the (a,b) = a w_1 + b w_2 notation). B_n for n >= 3 follows
 *     Bourbaki (a_n short).
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pfilt/error.hpp"

namespace pfilt {

using Int = std::int64_t;

/// Integer vector in the fundamental weight basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank, 0) {}
  Weight(std::initializer_list<Int> coords) : c_(coords) {}
  explicit Weight(std::vector<Int> coords) : c_(std::move(coords)) {}

  std::size_t size() const noexcept { return c_.size(); }
  Int operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }
  auto begin() const noexcept { return c_.begin(); }
  auto end() const noexcept { return c_.end(); }
  const std::vector<Int>& coords() const noexcept { return c_; }

  bool is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](Int x) { return x == 0; });
  }

  Weight& operator+=(const Weight& o) {
    check_size(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_size(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Weight& operator*=(Int k) {
    for (auto& x : c_) x *= k;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Int k, Weight a) { return a *= k; }
  friend Weight operator*(Weight a, Int k) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.c_ <=> b.c_; }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ')';
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

 private:
  void check_size(const Weight& o) const {
    if (o.c_.size() != c_.size()) throw MismatchedSystem("weights of different rank");
  }
  std::vector<Int> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Int x : w) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using WeightSet = std::unordered_set<Weight, WeightHash>;

/// Cartan type such as "A2", "B2" or "A1xA1".
struct CartanType {
  struct Component {
    char family = 'A';
    int rank = 1;
    friend bool operator==(const Component&, const Component&) = default;
  };
  std::vector<Component> components;

  int rank() const {
    int r = 0;
    for (auto& c : components) r += c.rank;
    return r;
  }
  bool irreducible() const { return components.size() == 1; }

  std::string name() const {
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) s += 'x';
      s += components[i].family;
      s += std::to_string(components[i].rank);
    }
    return s;
  }

  static void validate(const Component& c) {
    bool ok = false;
    switch (c.family) {
      case 'A': ok = c.rank >= 1; break;
      case 'B': ok = c.rank >= 2; break;
      case 'C': ok = c.rank >= 2; break;
      case 'D': ok = c.rank >= 3; break;
      case 'E': ok = c.rank >= 6 && c.rank <= 8; break;
      case 'F': ok = c.rank == 4; break;
      case 'G': ok = c.rank == 2; break;
      default: throw InvalidType(std::string("unknown Cartan family '") + c.family + "'");
    }
    if (!ok)
      throw InvalidType(std::string("rank ") + std::to_string(c.rank) + " out of range for type " +
                        c.family);
  }

  static CartanType parse(std::string_view text) {
    CartanType t;
    std::size_t pos = 0;
    auto fail = [&] { throw InvalidType("cannot parse Cartan type '" + std::string(text) + "'"); };
    while (pos < text.size()) {
      char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
      if (!std::isalpha(static_cast<unsigned char>(f))) fail();
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos || pos - start > 3) fail();
      Component c{f, std::stoi(std::string(text.substr(start, pos - start)))};
      validate(c);
      t.components.push_back(c);
      if (pos < text.size()) {
        if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '*') fail();
        ++pos;
        if (pos == text.size()) fail();
      }
    }
    if (t.components.empty()) fail();
    return t;
  }
};

using Matrix = std::vector<std::vector<Int>>;

/// Cartan matrix with entries cartan[i][j] = <a_i, a_j^v>.
inline Matrix cartan_matrix(const CartanType::Component& c) {
  CartanType::validate(c);
  const int n = c.rank;
  Matrix a(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (c.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n == 2) {
        // a_1 short, a_2 long
        a[0][1] = -1;
        a[1][0] = -2;
      } else {
        a[n - 2][n - 1] = -2;
        a[n - 1][n - 2] = -1;
      }
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[1][2] = -2;
      a[2][1] = -1;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

/// Positive root together with its derived data.
struct Root {
  Weight weight;                 // fundamental weight coordinates
  std::vector<Int> simple;       // coordinates in the simple root basis
  std::vector<Int> coroot;       // coordinates of beta^v in the simple coroot basis
  Int coroot_height = 0;         // <rho, beta^v>
  Int half_norm = 0;             // (beta, beta) / 2 with the shortest root of the component at 1
  int component = 0;
};

/// Element of W as a word in simple reflections; w = s_{word[0]} ... s_{word[k-1]}.
struct WeylElement {
  std::vector<int> word;

  std::size_t length() const noexcept { return word.size(); }
  int sign() const noexcept { return word.size() % 2 ? -1 : 1; }
  WeylElement inverse() const { return {std::vector<int>(word.rbegin(), word.rend())}; }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

class RootSystem;
using SystemPtr = std::shared_ptr<const RootSystem>;

/// Immutable root datum.
class RootSystem {
 public:
  struct Component {
    CartanType::Component type;
    std::vector<int> simple;   // indices of the simple roots in this component
    std::size_t highest_short = 0;  // index into positive_roots()
    Int coxeter = 0;
    std::size_t num_positive = 0;
  };

  static SystemPtr build(const CartanType& type) {
    std::vector<Matrix> blocks;
    for (auto& c : type.components) blocks.push_back(cartan_matrix(c));
    const int n = type.rank();
    Matrix a(n, std::vector<Int>(n, 0));
    int off = 0;
    for (auto& b : blocks) {
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) a[off + i][off + j] = b[i][j];
      off += static_cast<int>(b.size());
    }
    return std::shared_ptr<const RootSystem>(new RootSystem(type.name(), type, std::move(a)));
  }
  static SystemPtr build(std::string_view type) { return build(CartanType::parse(type)); }

  /// Root system of an arbitrary (finite type) Cartan matrix, used for the
  /// subsystems R_J spanned by subsets of simple roots. Component types are
  /// left unnamed ('?').
  static SystemPtr from_cartan(Matrix a, std::string name = "sub") {
    CartanType t;
    return std::shared_ptr<const RootSystem>(new RootSystem(std::move(name), t, std::move(a)));
  }

  const std::string& name() const noexcept { return name_; }
  const CartanType& type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return cartan_.size(); }
  const Matrix& cartan() const noexcept { return cartan_; }
  Int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::vector<Root>& positive_roots() const noexcept { return roots_; }
  std::size_t num_positive_roots() const noexcept { return roots_.size(); }
  const Root& simple_root(std::size_t i) const { return roots_[simple_index_[i]]; }
  const std::vector<Component>& components() const noexcept { return components_; }
  int component_of(std::size_t simple_index) const { return comp_of_[simple_index]; }
  bool irreducible() const noexcept { return components_.size() == 1; }
  const Weight& rho() const noexcept { return rho_; }
  Weight zero() const { return Weight(rank()); }

  /// Coxeter number of an irreducible system.
  Int coxeter_number() const {
    if (!irreducible()) throw InvalidType("Coxeter number requested for reducible system " + name_);
    return components_[0].coxeter;
  }
  /// Highest short root of an irreducible system.
  const Root& highest_short_root() const {
    if (!irreducible())
      throw InvalidType("highest short root requested for reducible system " + name_);
    return roots_[components_[0].highest_short];
  }
  const Root& highest_short_root(int component) const {
    return roots_[components_.at(component).highest_short];
  }

  /// <lambda, beta^v>.
  Int pair(const Weight& lambda, const Root& beta) const {
    check(lambda);
    if (beta.coroot.size() != rank()) throw MismatchedSystem("root from another system");
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += beta.coroot[i] * lambda[i];
    return s;
  }

  void check(const Weight& w) const {
    if (w.size() != rank())
      throw MismatchedSystem("weight " + w.str() + " does not belong to " + name_);
  }

  bool is_dominant(const Weight& w) const {
    check(w);
    return std::all_of(w.begin(), w.end(), [](Int x) { return x >= 0; });
  }

  /// Simple reflection s_i(lambda) = lambda - <lambda, a_i^v> a_i.
  Weight reflect(const Weight& w, std::size_t i) const {
    Weight r = w;
    const Int k = w[i];
    if (k != 0)
      for (std::size_t j = 0; j < rank(); ++j) r[j] -= k * cartan_[i][j];
    return r;
  }

  Weight act(const WeylElement& w, Weight lambda) const {
    check(lambda);
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) lambda = reflect(lambda, *it);
    return lambda;
  }

  /// Matrix of w acting on fundamental weight coordinates (column vectors).
  Matrix matrix(const WeylElement& w) const {
    const std::size_t n = rank();
    Matrix m(n, std::vector<Int>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      Weight e(n);
      e[j] = 1;
      Weight img = act(w, e);
      for (std::size_t i = 0; i < n; ++i) m[i][j] = img[i];
    }
    return m;
  }

  /// Dominant weight in the W-orbit of lambda together with w such that
  /// w(lambda) is dominant.
  std::pair<Weight, WeylElement> dominant_representative(Weight lambda) const {
    check(lambda);
    std::vector<int> applied;
    for (;;) {
      std::size_t i = 0;
      while (i < rank() && lambda[i] >= 0) ++i;
      if (i == rank()) break;
      lambda = reflect(lambda, i);
      applied.push_back(static_cast<int>(i));
    }
    return {std::move(lambda), WeylElement{std::vector<int>(applied.rbegin(), applied.rend())}};
  }

  Weight dominant(Weight lambda) const { return dominant_representative(std::move(lambda)).first; }

  WeylElement longest_element() const {
    // w0 is the unique element sending -rho to rho
    return dominant_representative(-rho_).second;
  }

  /// W-orbit of lambda by closure under simple reflections.
  std::vector<Weight> weyl_orbit(const Weight& lambda) const {
    check(lambda);
    WeightSet seen{lambda};
    std::vector<Weight> out{lambda};
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (std::size_t i = 0; i < rank(); ++i) {
        if (out[k][i] == 0) continue;
        Weight r = reflect(out[k], i);
        if (seen.insert(r).second) out.push_back(std::move(r));
      }
    }
    return out;
  }

  /// 2 * height: sum over positive roots of <lambda, beta^v>. Strictly
  /// increasing along the root order on each coset of the root lattice.
  Int order_key(const Weight& w) const {
    check(w);
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += key_coeff_[i] * w[i];
    return s;
  }

  /// Canonical descending order: larger key first, ties broken by
  /// lexicographically larger coordinates first.
  bool canonical_before(const Weight& a, const Weight& b) const {
    const Int ka = order_key(a), kb = order_key(b);
    if (ka != kb) return ka > kb;
    return b < a;
  }

  /// Coordinates of w in the simple root basis, scaled by det(cartan);
  /// returns false if w is not in the root lattice.
  bool root_coordinates(const Weight& w, std::vector<Int>& out) const {
    check(w);
    out.assign(rank(), 0);
    for (std::size_t j = 0; j < rank(); ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < rank(); ++i) s += w[i] * adj_[i][j];
      if (s % det_ != 0) return false;
      out[j] = s / det_;
    }
    return true;
  }

  /// mu <= lambda in the root order: lambda - mu is a nonnegative integer
  /// combination of simple roots.
  bool leq(const Weight& mu, const Weight& lambda) const {
    std::vector<Int> c;
    if (!root_coordinates(lambda - mu, c)) return false;
    return std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
  }

  /// Half squared length of the simple root a_i (shortest root of the
  /// component normalised to 1).
  Int half_norm(std::size_t i) const { return d_[i]; }

  /// (a_i, nu) expressed through the pairing: (a_i, nu) = d_i <nu, a_i^v>.
  /// Bilinear form between a root lattice element given by simple
  /// coordinates and an arbitrary weight.
  Int form(const std::vector<Int>& root_coords, const Weight& nu) const {
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += root_coords[i] * d_[i] * nu[i];
    return s;
  }

  /// Index of the positive root with the given simple coordinates, or -1.
  int find_root(const std::vector<Int>& simple) const {
    auto it = root_index_.find(simple);
    return it == root_index_.end() ? -1 : static_cast<int>(it->second);
  }

  /// Sub-system spanned by the given simple roots.
  SystemPtr subsystem(const std::vector<int>& simple) const {
    Matrix a(simple.size(), std::vector<Int>(simple.size(), 0));
    for (std::size_t i = 0; i < simple.size(); ++i)
      for (std::size_t j = 0; j < simple.size(); ++j) a[i][j] = cartan_[simple[i]][simple[j]];
    return from_cartan(std::move(a), name_ + "_J");
  }

  /// Connected components of a set of simple roots in the Dynkin diagram.
  std::vector<std::vector<int>> connected_components(const std::vector<int>& subset) const {
    std::vector<std::vector<int>> comps;
    std::set<int> rest(subset.begin(), subset.end());
    while (!rest.empty()) {
      std::vector<int> comp{*rest.begin()};
      rest.erase(rest.begin());
      for (std::size_t k = 0; k < comp.size(); ++k)
        for (auto it = rest.begin(); it != rest.end();) {
          if (cartan_[comp[k]][*it] != 0) {
            comp.push_back(*it);
            it = rest.erase(it);
          } else {
            ++it;
          }
        }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    return comps;
  }

 private:
  RootSystem(std::string name, CartanType type, Matrix a)
      : name_(std::move(name)), type_(std::move(type)), cartan_(std::move(a)) {
    const std::size_t n = cartan_.size();
    if (n == 0) throw InvalidType("empty Cartan matrix");
    compute_components();
    compute_lengths();
    compute_roots();
    compute_inverse();
    rho_ = Weight(std::vector<Int>(n, 1));
    key_coeff_.assign(n, 0);
    for (auto& r : roots_)
      for (std::size_t i = 0; i < n; ++i) key_coeff_[i] += r.coroot[i];
    for (auto& c : components_) {
      std::size_t best = roots_.size();
      for (std::size_t k = 0; k < roots_.size(); ++k) {
        if (roots_[k].component != &c - components_.data()) continue;
        if (roots_[k].half_norm != 1) continue;
        if (best == roots_.size() || roots_[k].coroot_height > roots_[best].coroot_height) best = k;
      }
      c.highest_short = best;
      c.coxeter = static_cast<Int>(2 * c.num_positive / c.simple.size());
      if (roots_[best].coroot_height != c.coxeter - 1)
        throw InvalidType("internal: height of highest short coroot is not h-1 for " + name_);
    }
  }

  void compute_components() {
    const std::size_t n = cartan_.size();
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    comp_of_.assign(n, -1);
    auto comps = connected_components(all);
    std::sort(comps.begin(), comps.end());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      Component comp;
      comp.simple = comps[c];
      if (type_.components.size() == comps.size()) comp.type = type_.components[c];
      else comp.type = {'?', static_cast<int>(comps[c].size())};
      for (int i : comps[c]) comp_of_[i] = static_cast<int>(c);
      components_.push_back(comp);
    }
  }

  void compute_lengths() {
    // d_j / d_i = cartan[j][i] / cartan[i][j]; propagate as fractions
    const std::size_t n = cartan_.size();
    std::vector<Int> num(n, 0), den(n, 1);
    for (auto& comp : components_) {
      num[comp.simple[0]] = 1;
      std::deque<int> queue{comp.simple[0]};
      std::vector<bool> done(n, false);
      done[comp.simple[0]] = true;
      while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j : comp.simple) {
          if (done[j] || cartan_[i][j] == 0) continue;
          num[j] = num[i] * cartan_[j][i];
          den[j] = den[i] * cartan_[i][j];
          if (den[j] < 0) {
            num[j] = -num[j];
            den[j] = -den[j];
          }
          Int g = std::gcd(num[j], den[j]);
          num[j] /= g;
          den[j] /= g;
          done[j] = true;
          queue.push_back(j);
        }
      }
      Int l = 1;
      for (int j : comp.simple) l = std::lcm(l, den[j]);
      Int g = 0;
      for (int j : comp.simple) g = std::gcd(g, num[j] * (l / den[j]));
      for (int j : comp.simple) {
        num[j] = num[j] * (l / den[j]) / g;
        den[j] = 1;
      }
      Int mn = num[comp.simple[0]];
      for (int j : comp.simple) mn = std::min(mn, num[j]);
      for (int j : comp.simple) {
        if (num[j] % mn != 0) throw InvalidType("Cartan matrix is not symmetrisable");
        num[j] /= mn;
      }
    }
    d_ = num;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (cartan_[i][j] * d_[j] != cartan_[j][i] * d_[i])
          throw InvalidType("Cartan matrix is not symmetrisable");
  }

  Int pair_simple(const std::vector<Int>& c, std::size_t i) const {
    // <beta, a_i^v> for beta = sum c_j a_j
    Int s = 0;
    for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * cartan_[j][i];
    return s;
  }

  void add_root(std::vector<Int> c) {
    const std::size_t n = cartan_.size();
    Root r;
    r.simple = c;
    r.weight = Weight(n);
    for (std::size_t i = 0; i < n; ++i) r.weight[i] = pair_simple(c, i);
    // (beta, beta) = sum_ij c_i c_j (a_i, a_j), (a_i, a_j) = cartan[i][j] d_j
    Int norm = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += c[i] * c[j] * cartan_[i][j] * d_[j];
    r.half_norm = norm / 2;
    r.coroot.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] * d_[i] % r.half_norm != 0) throw InvalidType("internal: non-integral coroot");
      r.coroot[i] = c[i] * d_[i] / r.half_norm;
      r.coroot_height += r.coroot[i];
    }
    r.component = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (c[i] != 0) r.component = comp_of_[i];
    root_index_[c] = roots_.size();
    roots_.push_back(std::move(r));
  }

  void compute_roots() {
    const std::size_t n = cartan_.size();
    simple_index_.resize(n);
    std::vector<std::size_t> layer;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Int> c(n, 0);
      c[i] = 1;
      simple_index_[i] = roots_.size();
      layer.push_back(roots_.size());
      add_root(std::move(c));
    }
    // extend layer by layer using alpha_i-strings: beta + a_i is a root iff
    // r - <beta, a_i^v> > 0 where r is the largest k with beta - k a_i a root
    while (!layer.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t idx : layer) {
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<Int> c = roots_[idx].simple;
          Int r = 0;
          std::vector<Int> down = c;
          for (;;) {
            down[i] -= 1;
            if (down[i] < 0 || root_index_.find(down) == root_index_.end()) break;
            ++r;
          }
          if (r - pair_simple(c, i) <= 0) continue;
          c[i] += 1;
          if (root_index_.count(c)) continue;
          next.push_back(roots_.size());
          add_root(std::move(c));
        }
      }
      layer = std::move(next);
    }
    for (auto& r : roots_) components_[r.component].num_positive++;
  }

  void compute_inverse() {
    // adjugate and determinant by exact fraction-free elimination
    const std::size_t n = cartan_.size();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
      m[i][n + i] = 1;
    }
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) throw InvalidType("singular Cartan matrix");
      std::swap(m[piv], m[k]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        for (std::size_t j = 0; j < 2 * n; ++j) {
          if (j == k) continue;
          m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        }
        m[i][k] = 0;
      }
      prev = m[k][k];
    }
    // now m = [D | D A^{-1}] with D = det * I (up to row swaps, already applied)
    det_ = prev;
    adj_.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) adj_[i][j] = m[i][n + j] * det_ / m[i][i];
    if (det_ < 0) {
      det_ = -det_;
      for (auto& row : adj_)
        for (auto& x : row) x = -x;
    }
  }

  std::string name_;
  CartanType type_;
  Matrix cartan_;
  std::vector<Int> d_;
  std::vector<Root> roots_;
  std::vector<std::size_t> simple_index_;
  std::map<std::vector<Int>, std::size_t> root_index_;
  std::vector<Component> components_;
  std::vector<int> comp_of_;
  Weight rho_;
  std::vector<Int> key_coeff_;
  Matrix adj_;  // det * A^{-1}
  Int det_ = 1;
};

}  // namespace pfilt
