#pragma once

#include <map>
#include <string>
#include <vector>

#include "superglinf/parity.hpp"
#include "superglinf/rational.hpp"

namespace superglinf::weyl {

// Base of gl(m|n) encoded as a shuffle of m 'E' letters and n 'D' letters.
// Node i (1-based, between letters i and i+1) is grey iff the letters differ;
// an odd reflection at a grey node swaps them.
class ParityWord {
 public:
  ParityWord(Index m, Index n);  // distinguished word E...ED...D
  explicit ParityWord(std::string letters);

  Index size() const { return Index(letters_.size()); }
  Index node_count() const { return size() - 1; }
  Index m() const;
  Index n() const { return size() - m(); }
  char letter(Index i) const { return letters_[i - 1]; }  // 1-based
  const std::string& letters() const { return letters_; }

  bool grey(Index node) const;  // 1-based node index
  ParityWord odd_reflection(Index node) const;

  // "o--x--o" rendering, grey nodes as 'x'.
  std::string ascii_diagram() const;

  friend bool operator==(const ParityWord&, const ParityWord&) = default;
  friend auto operator<=>(const ParityWord& a, const ParityWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::string letters_;
};

struct BaseGraph {
  std::vector<ParityWord> nodes;                    // BFS order from the distinguished word
  std::vector<std::pair<Index, Index>> edges;       // node indices, a < b
  bool connected = true;

  std::string dot() const;
};

// Breadth-first closure of the distinguished word under odd reflections.
// Bounded to m + n <= 12.
BaseGraph enumerate_bases(Index m, Index n);

// Integer vector in the (eps_1..eps_m, delta_1..delta_n) coordinates.
using Root = std::vector<Index>;

// Invariant form: (eps_i, eps_j) = delta_ij, (delta_i, delta_j) = -delta_ij.
Rational bilinear(const ParityWord& w, const Root& a, const Root& b);

Root simple_root(const ParityWord& w, Index node);
std::vector<Root> simple_roots(const ParityWord& w);

// Cartan matrix of a word: rows of even (white) nodes normalized so the
// diagonal entry is 2, isotropic (grey) rows kept raw with a zero diagonal.
struct CartanMatrix {
  std::vector<std::vector<Rational>> a;
  std::vector<bool> grey;  // node parities, 0-based

  static CartanMatrix of(const ParityWord& w);
};

// The five-case linear reflection r_{alpha_i}(alpha_j) expressed over the
// simple roots of A's base: returns the coefficient vector.
std::vector<Rational> linear_reflection(const CartanMatrix& A, Index i, Index j);  // 1-based

struct LinearOrbit {
  std::vector<std::vector<Root>> systems;  // reachable simple-root systems, sorted form
  bool complete = true;                    // false when the depth bound was hit
};

// Orbit of the distinguished base's simple-root system under its own linear
// reflections, recomputed per system; BFS with a depth bound.
LinearOrbit linear_weyl_orbit(Index m, Index n, Index depth_bound);

struct Weight {
  Root coords;
  Parity parity = Parity::even;

  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords <=> b.coords; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
};

// Finite weight multiset; string membership is decided on the underlying set.
class WeightSet {
 public:
  static WeightSet tautological(Index m, Index n);
  static WeightSet dual(Index m, Index n);
  static WeightSet tensor_power(Index m, Index n, Index d);
  static WeightSet adjoint(Index m, Index n);
  static WeightSet user(std::vector<std::pair<Weight, Index>> weights, std::string label);

  const std::map<Root, Index>& multiplicities() const { return mult_; }
  const std::string& label() const { return label_; }
  Index dimension() const { return dim_; }  // coordinate length
  bool contains(const Root& r) const { return mult_.count(r) > 0; }
  std::vector<Root> support() const;

 private:
  std::map<Root, Index> mult_;
  std::string label_;
  Index dim_ = 0;
};

struct AlphaString {
  Index p = 0;  // steps upward inside the set
  Index q = 0;  // steps downward
  Index length() const { return p + q - 1; }  // stored convention; the
                                              // string holds p + q + 1 weights
};

// Maximal run gamma - q*alpha ... gamma + p*alpha inside the set.
// gamma must belong to the set and alpha must be nonzero.
AlphaString alpha_string(const WeightSet& gamma_set, const Root& gamma, const Root& alpha);

// gamma + (p - q) alpha; stays inside the set.
Root reflect_weight(const WeightSet& gamma_set, const Root& gamma, const Root& alpha);

// The permutation of the set's support induced by reflecting in each root of
// `word` in order (leftmost applied first).
std::vector<Index> apply_word(const std::vector<Root>& word, const WeightSet& gamma_set);

// Least k >= 1 with the k-fold composite equal to the identity on the set.
Index order_on(const std::vector<Root>& word, const WeightSet& gamma_set);

struct RelationCheck {
  Index i = 0, j = 0;              // 1-based nodes; j == 0 for generator squares
  std::string kind;                // "square", "braid", "commute", "infinity"
  std::map<Index, Index> orders;   // tensor degree -> observed order
  Index expected = 0;              // 0 means "must exceed the floor"
  bool pass = false;
  std::string detail;
};

struct CoxeterReport {
  Index m = 0, n = 0, d_max = 0, floor = 12;
  std::vector<RelationCheck> relations;
  bool all_pass() const;
};

// Checks the distinguished base's generator relations on the tensor-power
// weight sets up to degree d_max: squares, white-white braids, non-adjacent
// commutations, and the unbounded-order pairs against `floor`.
CoxeterReport check_coxeter(Index m, Index n, Index d_max, Index floor = 12);

}  // namespace superglinf::weyl
