#include "superglinf/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superglinf::weyl {

ParityWord::ParityWord(Index m, Index n)
    : letters_(std::string(size_t(m), 'E') + std::string(size_t(n), 'D')) {
  if (m < 1 || n < 0 || m + n < 2) throw std::invalid_argument("parity word: need m >= 1, m+n >= 2");
}

ParityWord::ParityWord(std::string letters) : letters_(std::move(letters)) {
  if (letters_.size() < 2) throw std::invalid_argument("parity word: too short");
  for (char c : letters_)
    if (c != 'E' && c != 'D') throw std::invalid_argument("parity word: letters are E and D");
}

Index ParityWord::m() const { return std::count(letters_.begin(), letters_.end(), 'E'); }

bool ParityWord::grey(Index node) const {
  if (node < 1 || node > node_count()) throw std::out_of_range("parity word: node index");
  return letters_[node - 1] != letters_[node];
}

ParityWord ParityWord::odd_reflection(Index node) const {
  if (!grey(node))
    throw std::invalid_argument("odd reflection: node " + std::to_string(node) + " is white");
  std::string s = letters_;
  std::swap(s[node - 1], s[node]);
  return ParityWord(std::move(s));
}

std::string ParityWord::ascii_diagram() const {
  std::string out;
  for (Index i = 1; i <= node_count(); ++i) {
    if (i > 1) out += "--";
    out += grey(i) ? 'x' : 'o';
  }
  return out;
}

BaseGraph enumerate_bases(Index m, Index n) {
  if (m + n > 12) throw std::invalid_argument("enumerate_bases: m + n exceeds the desk bound 12");
  BaseGraph g;
  std::map<ParityWord, Index> id;
  std::deque<Index> queue;
  g.nodes.push_back(ParityWord(m, n));
  id.emplace(g.nodes[0], 0);
  queue.push_back(0);
  std::set<std::pair<Index, Index>> edges;
  while (!queue.empty()) {
    Index cur = queue.front();
    queue.pop_front();
    ParityWord w = g.nodes[cur];
    for (Index node = 1; node <= w.node_count(); ++node) {
      if (!w.grey(node)) continue;
      ParityWord next = w.odd_reflection(node);
      auto [it, fresh] = id.emplace(next, Index(g.nodes.size()));
      if (fresh) {
        g.nodes.push_back(next);
        queue.push_back(it->second);
      }
      edges.insert({std::min(cur, it->second), std::max(cur, it->second)});
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  g.connected = true;  // BFS closure is connected by construction
  return g;
}

std::string BaseGraph::dot() const {
  std::ostringstream out;
  out << "graph bases {\n";
  for (size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << nodes[i].letters() << "\"];\n";
  }
  for (auto& [a, b] : edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

Rational bilinear(const ParityWord& w, const Root& a, const Root& b) {
  if (Index(a.size()) != w.size() || Index(b.size()) != w.size())
    throw std::invalid_argument("bilinear: coordinate length mismatch");
  Rational s(0);
  for (Index t = 0; t < w.size(); ++t) {
    Rational term = Rational(long(a[t])) * Rational(long(b[t]));
    if (w.letters()[t] == 'D')
      s -= term;
    else
      s += term;
  }
  return s;
}

Root simple_root(const ParityWord& w, Index node) {
  if (node < 1 || node > w.node_count()) throw std::out_of_range("simple_root: node index");
  Root r(w.size(), 0);
  r[node - 1] = 1;
  r[node] = -1;
  return r;
}

std::vector<Root> simple_roots(const ParityWord& w) {
  std::vector<Root> out;
  for (Index i = 1; i <= w.node_count(); ++i) out.push_back(simple_root(w, i));
  return out;
}

CartanMatrix CartanMatrix::of(const ParityWord& w) {
  CartanMatrix cm;
  Index n = w.node_count();
  auto roots = simple_roots(w);
  cm.a.assign(n, std::vector<Rational>(n, Rational(0)));
  cm.grey.assign(n, false);
  for (Index i = 0; i < n; ++i) {
    Rational d = bilinear(w, roots[i], roots[i]);
    cm.grey[i] = is_zero(d);
    for (Index j = 0; j < n; ++j) {
      Rational v = bilinear(w, roots[i], roots[j]);
      cm.a[i][j] = cm.grey[i] ? v : 2 * v / d;
    }
  }
  return cm;
}

std::vector<Rational> linear_reflection(const CartanMatrix& A, Index i, Index j) {
  Index n = Index(A.a.size());
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("linear_reflection: node index");
  std::vector<Rational> coeff(n, Rational(0));
  Index I = i - 1, J = j - 1;
  if (i == j) {
    coeff[J] = -1;
    return coeff;
  }
  coeff[J] = 1;
  const Rational& aii = A.a[I][I];
  if (aii == 2) {
    coeff[I] = -A.a[I][J];
  } else if (aii == 1) {
    coeff[I] = -2 * A.a[I][J];
  } else if (is_zero(aii) && !is_zero(A.a[J][I])) {
    coeff[I] = 1;
  }
  return coeff;
}

namespace {

// Cartan data of an arbitrary simple-root system, same normalization as for
// words: white rows scaled to diagonal 2, isotropic rows raw.
struct SystemCartan {
  std::vector<std::vector<Rational>> a;
  std::vector<bool> grey;
};

SystemCartan system_cartan(const ParityWord& metric, const std::vector<Root>& roots) {
  SystemCartan sc;
  Index n = Index(roots.size());
  sc.a.assign(n, std::vector<Rational>(n, Rational(0)));
  sc.grey.assign(n, false);
  for (Index i = 0; i < n; ++i) {
    Rational d = bilinear(metric, roots[i], roots[i]);
    sc.grey[i] = is_zero(d);
    for (Index j = 0; j < n; ++j) {
      Rational v = bilinear(metric, roots[i], roots[j]);
      sc.a[i][j] = sc.grey[i] ? v : 2 * v / d;
    }
  }
  return sc;
}

}  // namespace

LinearOrbit linear_weyl_orbit(Index m, Index n, Index depth_bound) {
  if (m + n > 8) throw std::invalid_argument("linear_weyl_orbit: m + n exceeds the desk bound 8");
  ParityWord metric(m, n);
  std::vector<Root> start = simple_roots(metric);

  auto canon = [](std::vector<Root> sys) {
    std::sort(sys.begin(), sys.end());
    return sys;
  };

  LinearOrbit orbit;
  std::set<std::vector<Root>> seen;
  std::deque<std::pair<std::vector<Root>, Index>> queue;
  queue.push_back({start, 0});
  seen.insert(canon(start));
  while (!queue.empty()) {
    auto [sys, depth] = queue.front();
    queue.pop_front();
    if (depth >= depth_bound) {
      orbit.complete = false;
      continue;
    }
    SystemCartan sc = system_cartan(metric, sys);
    Index k = Index(sys.size());
    for (Index i = 1; i <= k; ++i) {
      std::vector<Root> next;
      for (Index j = 1; j <= k; ++j) {
        CartanMatrix view{sc.a, sc.grey};
        auto coeff = linear_reflection(view, i, j);
        Root img(sys[0].size(), 0);
        for (size_t c = 0; c < img.size(); ++c) {
          Rational acc(0);
          for (Index t = 0; t < k; ++t) acc += coeff[t] * Rational(long(sys[t][c]));
          if (acc.get_den() != 1)
            throw std::logic_error("linear_weyl_orbit: non-integral reflected root");
          img[c] = Index(acc.get_num().get_si());
        }
        next.push_back(img);
      }
      if (seen.insert(canon(next)).second) queue.push_back({next, depth + 1});
    }
  }
  orbit.systems.assign(seen.begin(), seen.end());
  return orbit;
}

WeightSet WeightSet::tautological(Index m, Index n) {
  std::vector<std::pair<Weight, Index>> w;
  for (Index t = 0; t < m + n; ++t) {
    Weight wt;
    wt.coords.assign(m + n, 0);
    wt.coords[t] = 1;
    wt.parity = t < m ? Parity::even : Parity::odd;
    w.push_back({wt, 1});
  }
  return user(std::move(w), "V(" + std::to_string(m) + "|" + std::to_string(n) + ")");
}

WeightSet WeightSet::dual(Index m, Index n) {
  std::vector<std::pair<Weight, Index>> w;
  for (Index t = 0; t < m + n; ++t) {
    Weight wt;
    wt.coords.assign(m + n, 0);
    wt.coords[t] = -1;
    wt.parity = t < m ? Parity::even : Parity::odd;
    w.push_back({wt, 1});
  }
  return user(std::move(w), "V*(" + std::to_string(m) + "|" + std::to_string(n) + ")");
}

WeightSet WeightSet::tensor_power(Index m, Index n, Index d) {
  if (d < 1) throw std::invalid_argument("tensor_power: degree must be positive");
  std::map<Root, Index> cur;
  {
    Root zero(m + n, 0);
    cur[zero] = 1;
  }
  for (Index step = 0; step < d; ++step) {
    std::map<Root, Index> next;
    for (const auto& [r, mult] : cur)
      for (Index t = 0; t < m + n; ++t) {
        Root s = r;
        ++s[t];
        next[s] += mult;
      }
    cur = std::move(next);
  }
  std::vector<std::pair<Weight, Index>> w;
  for (const auto& [r, mult] : cur) {
    Weight wt;
    wt.coords = r;
    Index odd = 0;
    for (Index t = m; t < Index(r.size()); ++t) odd += r[t];
    wt.parity = Parity(int(odd & 1));
    w.push_back({wt, mult});
  }
  return user(std::move(w), "V^" + std::to_string(d));
}

WeightSet WeightSet::adjoint(Index m, Index n) {
  std::vector<std::pair<Weight, Index>> w;
  Index size = m + n;
  Weight zero;
  zero.coords.assign(size, 0);
  zero.parity = Parity::even;
  w.push_back({zero, size});
  for (Index a = 0; a < size; ++a)
    for (Index b = 0; b < size; ++b) {
      if (a == b) continue;
      Weight wt;
      wt.coords.assign(size, 0);
      wt.coords[a] = 1;
      wt.coords[b] = -1;
      wt.parity = Parity(int((a < m) != (b < m)));
      w.push_back({wt, 1});
    }
  return user(std::move(w), "adjoint");
}

WeightSet WeightSet::user(std::vector<std::pair<Weight, Index>> weights, std::string label) {
  WeightSet ws;
  ws.label_ = std::move(label);
  for (auto& [wt, mult] : weights) {
    if (mult <= 0) throw std::invalid_argument("weight set: multiplicities must be positive");
    if (ws.dim_ == 0) ws.dim_ = Index(wt.coords.size());
    if (Index(wt.coords.size()) != ws.dim_)
      throw std::invalid_argument("weight set: mixed coordinate lengths");
    ws.mult_[wt.coords] += mult;
  }
  if (ws.mult_.empty()) throw std::invalid_argument("weight set: empty");
  return ws;
}

std::vector<Root> WeightSet::support() const {
  std::vector<Root> s;
  s.reserve(mult_.size());
  for (const auto& [r, mult] : mult_) s.push_back(r);
  return s;
}

namespace {

Root add_scaled(const Root& g, const Root& a, Index k) {
  Root r = g;
  for (size_t t = 0; t < r.size(); ++t) r[t] += k * a[t];
  return r;
}

bool nonzero(const Root& a) {
  return std::any_of(a.begin(), a.end(), [](Index v) { return v != 0; });
}

}  // namespace

AlphaString alpha_string(const WeightSet& gamma_set, const Root& gamma, const Root& alpha) {
  if (!gamma_set.contains(gamma)) throw std::invalid_argument("alpha_string: weight not in the set");
  if (!nonzero(alpha)) throw std::invalid_argument("alpha_string: zero direction");
  AlphaString s;
  while (gamma_set.contains(add_scaled(gamma, alpha, s.p + 1))) ++s.p;
  while (gamma_set.contains(add_scaled(gamma, alpha, -(s.q + 1)))) ++s.q;
  return s;
}

Root reflect_weight(const WeightSet& gamma_set, const Root& gamma, const Root& alpha) {
  AlphaString s = alpha_string(gamma_set, gamma, alpha);
  return add_scaled(gamma, alpha, s.p - s.q);
}

std::vector<Index> apply_word(const std::vector<Root>& word, const WeightSet& gamma_set) {
  std::vector<Root> sup;
  std::map<Root, Index> pos;
  for (const auto& [r, mult] : gamma_set.multiplicities()) {
    pos[r] = Index(sup.size());
    sup.push_back(r);
  }
  std::vector<Index> perm(sup.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (const Root& alpha : word) {
    std::vector<Index> step(sup.size());
    for (size_t t = 0; t < sup.size(); ++t) step[t] = pos.at(reflect_weight(gamma_set, sup[t], alpha));
    std::vector<Index> next(sup.size());
    for (size_t t = 0; t < sup.size(); ++t) next[t] = step[perm[t]];
    perm = std::move(next);
  }
  return perm;
}

Index order_on(const std::vector<Root>& word, const WeightSet& gamma_set) {
  std::vector<Index> perm = apply_word(word, gamma_set);
  // lcm of cycle lengths
  std::vector<bool> seen(perm.size(), false);
  Index order = 1;
  for (size_t t = 0; t < perm.size(); ++t) {
    if (seen[t]) continue;
    Index len = 0;
    for (Index u = Index(t); !seen[u]; u = perm[u]) {
      seen[u] = true;
      ++len;
    }
    order = lcm_checked(order, len);
  }
  return order;
}

bool CoxeterReport::all_pass() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const RelationCheck& r) { return r.pass; });
}

CoxeterReport check_coxeter(Index m, Index n, Index d_max, Index floor) {
  if (m + n > 6 || d_max > 6)
    throw std::invalid_argument("check_coxeter: desk bounds are m + n <= 6, d_max <= 6");
  CoxeterReport rep;
  rep.m = m;
  rep.n = n;
  rep.d_max = d_max;
  rep.floor = floor;

  ParityWord w(m, n);
  auto roots = simple_roots(w);
  Index nodes = w.node_count();

  std::vector<WeightSet> sets;
  for (Index d = 1; d <= d_max; ++d) sets.push_back(WeightSet::tensor_power(m, n, d));

  auto orders_of = [&](const std::vector<Root>& word) {
    std::map<Index, Index> out;
    for (Index d = 1; d <= d_max; ++d) out[d] = order_on(word, sets[d - 1]);
    return out;
  };

  for (Index i = 1; i <= nodes; ++i) {
    RelationCheck rc;
    rc.i = i;
    rc.kind = "square";
    rc.expected = 2;
    rc.orders = orders_of({roots[i - 1]});
    rc.pass = true;
    for (auto& [d, o] : rc.orders) rc.pass = rc.pass && o <= 2;
    rc.detail = "generator squares to the identity";
    rep.relations.push_back(std::move(rc));
  }

  for (Index i = 1; i <= nodes; ++i)
    for (Index j = i + 1; j <= nodes; ++j) {
      RelationCheck rc;
      rc.i = i;
      rc.j = j;
      std::vector<Root> pair_word = {roots[i - 1], roots[j - 1]};
      rc.orders = orders_of(pair_word);
      bool adjacent = j == i + 1;
      bool any_grey = w.grey(i) || w.grey(j);
      if (!adjacent) {
        rc.kind = "commute";
        rc.expected = 2;
        rc.pass = true;
        for (auto& [d, o] : rc.orders) rc.pass = rc.pass && o <= 2;
        rc.detail = "non-adjacent generators commute";
      } else if (!any_grey) {
        rc.kind = "braid";
        rc.expected = 3;
        rc.pass = true;
        for (auto& [d, o] : rc.orders) rc.pass = rc.pass && (o == 1 || o == 3);
        rc.detail = "adjacent white pair satisfies the braid relation";
      } else {
        rc.kind = "infinity";
        rc.expected = 0;
        Index last = rc.orders.rbegin()->second;
        bool nondecreasing = true;
        Index prev = 0;
        for (auto& [d, o] : rc.orders) {
          nondecreasing = nondecreasing && o >= prev;
          prev = o;
        }
        rc.pass = last > floor && nondecreasing;
        rc.detail = "unbounded pair: order must exceed " + std::to_string(floor) +
                    " at the largest degree and be nondecreasing";
      }
      rep.relations.push_back(std::move(rc));
    }
  return rep;
}

}  // namespace superglinf::weyl
