#include "capitulation/finite_group.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>

#include "capitulation/errors.hpp"

namespace capitulation {

FiniteGroup FiniteGroup::from_regular_action(const std::vector<std::vector<Element>>& actions) {
  if (actions.empty() && false) return {};
  const std::size_t n = actions.empty() ? 1 : actions.front().size();
  const std::size_t k = actions.size();
  for (const auto& a : actions)
    if (a.size() != n) throw InvalidArgument("generator actions have different degrees");

  std::vector<std::vector<Element>> inverse(k, std::vector<Element>(n));
  for (std::size_t g = 0; g < k; ++g)
    for (Element x = 0; x < n; ++x) inverse[g][actions[g][x]] = x;

  // Breadth-first renumbering from point 0: g1, g1^-1, g2, g2^-1, ...
  constexpr Element kUnseen = ~Element{0};
  std::vector<Element> new_id(n, kUnseen);
  std::vector<Element> order;  // old ids in BFS order
  std::vector<std::pair<Element, std::uint32_t>> tree;  // (parent new id, column)
  order.reserve(n);
  new_id[0] = 0;
  order.push_back(0);
  tree.emplace_back(0, 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Element x = order[head];
    for (std::uint32_t col = 0; col < 2 * k; ++col) {
      const Element y = (col & 1 ? inverse : actions)[col / 2][x];
      if (new_id[y] != kUnseen) continue;
      new_id[y] = static_cast<Element>(order.size());
      order.push_back(y);
      tree.emplace_back(static_cast<Element>(head), col);
    }
  }
  if (order.size() != n) throw InvalidArgument("generator action is not transitive");

  FiniteGroup G;
  G.order_ = n;
  G.actions_.assign(k, std::vector<Element>(n));
  G.inverse_actions_.assign(k, std::vector<Element>(n));
  for (std::size_t g = 0; g < k; ++g) {
    for (Element x = 0; x < n; ++x) {
      G.actions_[g][new_id[x]] = new_id[actions[g][x]];
      G.inverse_actions_[g][new_id[x]] = new_id[inverse[g][x]];
    }
  }

  G.labels_.resize(n);
  for (Element y = 1; y < n; ++y) {
    const auto [parent, col] = tree[y];
    G.labels_[y] = G.labels_[parent] * Word::generator(static_cast<int>(col / 2), col & 1 ? -1 : 1);
  }

  G.generator_ids_.resize(k);
  for (std::size_t g = 0; g < k; ++g) G.generator_ids_[g] = G.actions_[g][0];

  if (n <= kFullTableLimit) {
    G.mul_.resize(n * n);
    for (Element x = 0; x < n; ++x) {
      std::uint32_t* row = &G.mul_[static_cast<std::size_t>(x) * n];
      row[0] = x;
      for (Element y = 1; y < n; ++y) {
        const auto [parent, col] = tree[y];
        row[y] = (col & 1 ? G.inverse_actions_ : G.actions_)[col / 2][row[parent]];
      }
    }
    // Left multiplication must commute with every generator action; this
    // fails exactly when the action was not regular.
    for (Element x = 0; x < n; ++x)
      for (std::size_t g = 0; g < k; ++g)
        for (Element y = 0; y < n; ++y)
          if (G.mul_[x * n + G.actions_[g][y]] != G.actions_[g][G.mul_[x * n + y]])
            throw InvalidArgument("generator action is not regular");
  }

  G.inv_.resize(n);
  for (Element x = 0; x < n; ++x) G.inv_[x] = eval_word(G, G.labels_[x].inverse());
  return G;
}

Element FiniteGroup::mul(Element x, Element y) const {
  if (!mul_.empty()) return mul_[static_cast<std::size_t>(x) * order_ + y];
  for (const Letter& l : labels_[y].letters())
    for (std::int64_t i = 0; i < std::llabs(l.exponent); ++i)
      x = act(x, static_cast<std::size_t>(l.generator), l.exponent < 0);
  return x;
}

Element FiniteGroup::pow(Element x, std::int64_t k) const {
  Element base = k < 0 ? inv(x) : x;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Element result = 0;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element FiniteGroup::commutator(Element x, Element y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

Element FiniteGroup::conjugate(Element x, Element by) const {
  return mul(mul(inv(by), x), by);
}

Element eval_word(const FiniteGroup& g, const Word& w) {
  Element x = 0;
  for (const Letter& l : w.letters()) {
    if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= g.generator_count())
      throw InvalidArgument("generator index out of range");
    const std::int64_t reps = std::llabs(l.exponent);
    for (std::int64_t i = 0; i < reps; ++i)
      x = g.act(x, static_cast<std::size_t>(l.generator), l.exponent < 0);
  }
  return x;
}

std::size_t element_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != 0; y = g.mul(y, x)) ++k;
  if (g.order() % k != 0) throw ConsistencyError("element order does not divide group order");
  return k;
}

namespace {

// Coset table for enumeration over the trivial subgroup. Column 2g is
// generator g, column 2g+1 its inverse.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& pres, std::size_t max_cosets)
      : cols_(2 * pres.generators.size()), max_live_(max_cosets), starts_(cols_) {
    for (const Word& w : pres.relators) {
      std::vector<int> rel;
      for (const Letter& l : w.letters()) {
        const int col = 2 * l.generator + (l.exponent < 0 ? 1 : 0);
        rel.insert(rel.end(), static_cast<std::size_t>(std::llabs(l.exponent)), col);
      }
      if (rel.empty()) continue;
      const int r = static_cast<int>(rels_.size());
      for (int off = 0; off < static_cast<int>(rel.size()); ++off)
        starts_[static_cast<std::size_t>(rel[static_cast<std::size_t>(off)])].emplace_back(r, off);
      rels_.push_back(std::move(rel));
    }
    new_row();
  }

  std::vector<std::vector<Element>> run() {
    for (std::size_t c = 0; c < rows(); ++c) {
      if (rows() > 4 * live_ + 1024) c = compact(c);
      if (!alive(c)) continue;
      for (std::size_t r = 0; r < rels_.size() && alive(c); ++r) {
        scan(static_cast<int>(c), static_cast<int>(r), 0, true);
        process_deductions();
      }
      for (int x = 0; x < cols_ && alive(c); ++x) {
        if (at(static_cast<int>(c), x) < 0) {
          define(static_cast<int>(c), x);
          process_deductions();
        }
      }
    }
    compact(0);
    const std::size_t n = rows();
    std::vector<std::vector<Element>> actions(cols_ / 2, std::vector<Element>(n));
    for (std::size_t c = 0; c < n; ++c)
      for (int g = 0; g < cols_ / 2; ++g) {
        const int d = at(static_cast<int>(c), 2 * g);
        if (d < 0) throw ConsistencyError("coset table incomplete after enumeration");
        actions[static_cast<std::size_t>(g)][c] = static_cast<Element>(d);
      }
    return actions;
  }

 private:
  std::size_t rows() const { return parent_.size(); }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  static int inv(int x) { return x ^ 1; }

  int new_row() {
    if (live_ >= max_live_) throw CosetLimitExceeded(live_);
    const int c = static_cast<int>(rows());
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), -1);
    parent_.push_back(c);
    ++live_;
    return c;
  }

  void define(int c, int x) {
    const int d = new_row();
    at(c, x) = d;
    at(d, inv(x)) = c;
    deductions_.emplace_back(c, x);
  }

  int rep(int c) {
    int root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(c)] != root) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int phi = rep(k), psi = rep(l);
    if (phi == psi) return;
    const int mu = std::min(phi, psi), nu = std::max(phi, psi);
    parent_[static_cast<std::size_t>(nu)] = mu;
    --live_;
    queue.push_back(nu);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int g = queue[qi];
      for (int x = 0; x < cols_; ++x) {
        const int d = at(g, x);
        if (d < 0) continue;
        if (at(d, inv(x)) == g) at(d, inv(x)) = -1;
        const int mu = rep(g), nu = rep(d);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, inv(x)) >= 0) {
          merge(mu, at(nu, inv(x)), queue);
        } else {
          at(mu, x) = nu;
          at(nu, inv(x)) = mu;
          deductions_.emplace_back(mu, x);
        }
      }
    }
  }

  // Traces relator r (rotated by `off`) at coset c from both ends. With
  // `fill`, undefined gaps are bridged by new cosets; otherwise the scan
  // only records a deduction or coincidence when the gap is closed.
  void scan(int c, int r, int off, bool fill) {
    const std::vector<int>& rel = rels_[static_cast<std::size_t>(r)];
    const int len = static_cast<int>(rel.size());
    auto letter = [&](int i) { return rel[static_cast<std::size_t>((i + off) % len)]; };
    int f = c, b = c, i = 0, j = len - 1;
    for (;;) {
      while (i <= j && at(f, letter(i)) >= 0) f = at(f, letter(i++));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inv(letter(j))) >= 0) b = at(b, inv(letter(j--)));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, letter(i)) = b;
        at(b, inv(letter(i))) = f;
        deductions_.emplace_back(f, letter(i));
        return;
      }
      if (!fill) return;
      define(f, letter(i));
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(static_cast<std::size_t>(c))) continue;
      for (const auto& [r, off] : starts_[static_cast<std::size_t>(x)]) {
        if (!alive(static_cast<std::size_t>(c))) break;
        scan(c, r, off, false);
      }
      if (!alive(static_cast<std::size_t>(c))) continue;
      const int d = at(c, x);
      if (d < 0 || !alive(static_cast<std::size_t>(d))) continue;
      for (const auto& [r, off] : starts_[static_cast<std::size_t>(inv(x))]) {
        if (!alive(static_cast<std::size_t>(d))) break;
        scan(d, r, off, false);
      }
    }
  }

  // Removes dead rows, preserving the order of live ones. Returns the new
  // position of the row `cursor` (or of the first live row after it).
  std::size_t compact(std::size_t cursor) {
    std::vector<int> remap(rows(), -1);
    int next = 0;
    std::size_t new_cursor = 0;
    bool cursor_set = false;
    for (std::size_t c = 0; c < rows(); ++c) {
      if (!cursor_set && c >= cursor) {
        new_cursor = static_cast<std::size_t>(next);
        cursor_set = true;
      }
      if (alive(c)) remap[c] = next++;
    }
    if (!cursor_set) new_cursor = static_cast<std::size_t>(next);
    std::vector<int> table(static_cast<std::size_t>(next) * cols_, -1);
    for (std::size_t c = 0; c < rows(); ++c) {
      if (remap[c] < 0) continue;
      for (int x = 0; x < cols_; ++x) {
        const int d = at(static_cast<int>(c), x);
        table[static_cast<std::size_t>(remap[c]) * cols_ + x] = d < 0 ? -1 : remap[static_cast<std::size_t>(d)];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    std::iota(parent_.begin(), parent_.end(), 0);
    deductions_.clear();
    return new_cursor;
  }

  int cols_;
  std::size_t max_live_;
  std::size_t live_ = 0;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<std::pair<int, int>>> starts_;
  std::vector<std::pair<int, int>> deductions_;
};

}  // namespace

FiniteGroup enumerate(const Presentation& pres, std::size_t max_cosets) {
  pres.validate();
  if (max_cosets == 0) throw InvalidArgument("max_cosets must be positive");
  auto actions = CosetEnumerator(pres, max_cosets).run();
  FiniteGroup G = FiniteGroup::from_regular_action(actions);
  for (const Word& r : pres.relators)
    for (Element x = 0; x < G.order(); ++x)
      if (G.mul(x, eval_word(G, r)) != x)
        throw ConsistencyError("relator does not hold in the enumerated group");
  return G;
}

}  // namespace capitulation
