#include "relmach/oracle.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace relmach {

namespace {

void check_word(const Carrier& alphabet, std::span<const int> word) {
  for (int x : word) {
    if (x < 0 || static_cast<std::size_t>(x) >= alphabet.size()) {
      throw std::invalid_argument("word: unknown symbol index " + std::to_string(x));
    }
  }
}

/// Reachability over an explicit graph. With seed_self the start node
/// counts as reached (reflexive-transitive closure); without it only nodes
/// at the end of at least one edge do (transitive closure).
std::vector<bool> reachable_from(const std::vector<std::vector<int>>& adj, int start,
                                 bool seed_self) {
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> queue;
  auto push = [&](int v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      queue.push(v);
    }
  };
  if (seed_self) {
    push(start);
  } else {
    for (int v : adj[static_cast<std::size_t>(start)]) push(v);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) push(w);
  }
  return seen;
}

/// Two-way configuration graph on a fixed word: node = state + |Q| * pos,
/// pos in [0, n] counting boundaries between cells.
std::vector<std::vector<int>> twoway_graph(const TwoWayAutomaton& m, std::span<const int> word) {
  const int nq = static_cast<int>(m.states.size());
  const int n = static_cast<int>(word.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nq * (n + 1)));
  for (int pos = 0; pos <= n; ++pos) {
    for (int q = 0; q < nq; ++q) {
      auto& edges = adj[static_cast<std::size_t>(q + nq * pos)];
      if (pos < n) {
        const int x = word[static_cast<std::size_t>(pos)];
        for (int c : m.right[static_cast<std::size_t>(x)][static_cast<std::size_t>(q)]) {
          edges.push_back(c + nq * (pos + 1));
        }
      }
      if (pos > 0) {
        const int x = word[static_cast<std::size_t>(pos - 1)];
        for (int b : m.left[static_cast<std::size_t>(x)][static_cast<std::size_t>(q)]) {
          edges.push_back(b + nq * (pos - 1));
        }
      }
    }
  }
  return adj;
}

struct BtmGraph {
  CnCodec codec;
  std::vector<std::vector<int>> adj;
  int n;

  int node(std::size_t word_value, int pos, int state) const {
    const int nq = static_cast<int>(codec.states().size());
    return state + nq * (pos + (n + 1) * static_cast<int>(word_value));
  }
};

/// Full rewrite configuration graph: node = state + |Q|*(pos + (n+1)*word).
BtmGraph btm_graph(const Btm& m, int n) {
  BtmGraph g{CnCodec(m.states, m.alphabet, n), {}, n};
  const int nq = static_cast<int>(m.states.size());
  const std::size_t words = g.codec.word_count();
  const std::size_t ns = m.alphabet.size();
  g.adj.resize(static_cast<std::size_t>(nq * (n + 1)) * words);

  std::vector<std::size_t> pow(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) pow[static_cast<std::size_t>(i)] = pow[static_cast<std::size_t>(i - 1)] * ns;
  // digit i (cell i, 0 = leftmost) of a word value
  auto digit = [&](std::size_t w, int i) {
    return static_cast<int>((w / pow[static_cast<std::size_t>(n - 1 - i)]) % ns);
  };
  auto with_digit = [&](std::size_t w, int i, int y) {
    const std::size_t p = pow[static_cast<std::size_t>(n - 1 - i)];
    const std::size_t old = (w / p) % ns;
    return w - old * p + static_cast<std::size_t>(y) * p;
  };

  for (std::size_t w = 0; w < words; ++w) {
    for (int pos = 0; pos <= n; ++pos) {
      for (int q = 0; q < nq; ++q) {
        auto& edges = g.adj[static_cast<std::size_t>(g.node(w, pos, q))];
        if (pos < n) {
          const auto x = static_cast<std::size_t>(digit(w, pos));
          for (int z : m.right_out[x][static_cast<std::size_t>(q)]) {
            const std::size_t w2 = with_digit(w, pos, z);
            for (int c : m.right_next[x][static_cast<std::size_t>(q)]) {
              edges.push_back(g.node(w2, pos + 1, c));
            }
          }
        }
        if (pos > 0) {
          const auto x = static_cast<std::size_t>(digit(w, pos - 1));
          for (int y : m.left_out[x][static_cast<std::size_t>(q)]) {
            const std::size_t w2 = with_digit(w, pos - 1, y);
            for (int b : m.left_next[x][static_cast<std::size_t>(q)]) {
              edges.push_back(g.node(w2, pos - 1, b));
            }
          }
        }
      }
    }
  }
  return g;
}

}  // namespace

Rel nfa_hom(const Nfa& m, std::span<const int> word) {
  check_word(m.alphabet, word);
  Rel acc = Rel::identity(m.states);
  for (int x : word) acc = compose(acc, m.step[static_cast<std::size_t>(x)]);
  return acc;
}

TransitionMonoid transition_monoid(const Nfa& m, std::size_t max_elements) {
  TransitionMonoid result;
  std::map<std::vector<std::uint64_t>, int> index;

  auto intern = [&](const Rel& r, const std::vector<int>& word) {
    auto [it, fresh] = index.try_emplace(r.bits().words(), static_cast<int>(result.elements.size()));
    if (fresh) {
      result.elements.push_back(r);
      result.words.push_back(word);
    }
    return it->second;
  };

  intern(Rel::identity(m.states), {});
  for (std::size_t i = 0; i < result.elements.size(); ++i) {
    if (result.elements.size() > max_elements) {
      result.complete = false;
      break;
    }
    for (std::size_t x = 0; x < m.alphabet.size(); ++x) {
      Rel next = compose(result.elements[i], m.step[x]);
      auto word = result.words[i];
      word.push_back(static_cast<int>(x));
      intern(next, word);
    }
  }

  if (result.complete) {
    result.table.resize(result.elements.size());
    for (std::size_t i = 0; i < result.elements.size(); ++i) {
      result.table[i].resize(result.elements.size());
      for (std::size_t j = 0; j < result.elements.size(); ++j) {
        Rel prod = compose(result.elements[i], result.elements[j]);
        result.table[i][j] = index.at(prod.bits().words());
      }
    }
  }
  return result;
}

std::set<std::pair<std::vector<int>, int>> mealy_run(const Mealy& m, std::span<const int> input,
                                                     int start) {
  check_word(m.alphabet, input);
  if (start < 0 || static_cast<std::size_t>(start) >= m.states.size()) {
    throw std::invalid_argument("mealy_run: start state out of range");
  }
  const int n = static_cast<int>(input.size());
  // Partial results: (current state, outputs written so far, rightmost first).
  std::set<std::pair<int, std::vector<int>>> frontier{{start, {}}};
  for (int i = n - 1; i >= 0; --i) {
    const auto x = static_cast<std::size_t>(input[static_cast<std::size_t>(i)]);
    std::set<std::pair<int, std::vector<int>>> next_frontier;
    for (const auto& [q, written] : frontier) {
      for (int y : m.out[x][static_cast<std::size_t>(q)]) {
        for (int p : m.next[x][static_cast<std::size_t>(q)]) {
          auto w = written;
          w.push_back(y);
          next_frontier.emplace(p, std::move(w));
        }
      }
    }
    frontier = std::move(next_frontier);
  }
  std::set<std::pair<std::vector<int>, int>> out;
  for (const auto& [q, written] : frontier) {
    std::vector<int> word(written.rbegin(), written.rend());
    out.emplace(std::move(word), q);
  }
  return out;
}

Square twoway_oracle(const TwoWayAutomaton& m, std::span<const int> word) {
  check_word(m.alphabet, word);
  if (word.empty()) {
    throw std::invalid_argument("twoway_oracle: empty word (use the empty-word square)");
  }
  const int nq = static_cast<int>(m.states.size());
  const int n = static_cast<int>(word.size());
  const auto adj = twoway_graph(m, word);
  const auto ql = left_moving_states(m);
  const auto qr = right_moving_states(m);

  std::vector<std::pair<std::size_t, std::size_t>> pl, lt, rt, pr;
  for (int q = 0; q < nq; ++q) {
    const auto uq = static_cast<std::size_t>(q);
    // Starts at the left boundary: passes to the right, turns back left.
    if (qr[uq]) {
      const auto seen = reachable_from(adj, q + nq * 0, /*seed_self=*/false);
      for (int p = 0; p < nq; ++p) {
        const auto up = static_cast<std::size_t>(p);
        if (qr[up] && seen[static_cast<std::size_t>(p + nq * n)]) pr.emplace_back(up, uq);
        if (ql[up] && seen[static_cast<std::size_t>(p + nq * 0)]) lt.emplace_back(up, uq);
      }
    }
    // Starts at the right boundary.
    if (ql[uq]) {
      const auto seen = reachable_from(adj, q + nq * n, /*seed_self=*/false);
      for (int p = 0; p < nq; ++p) {
        const auto up = static_cast<std::size_t>(p);
        if (ql[up] && seen[static_cast<std::size_t>(p + nq * 0)]) pl.emplace_back(up, uq);
        if (qr[up] && seen[static_cast<std::size_t>(p + nq * n)]) rt.emplace_back(up, uq);
      }
    }
  }
  const Carrier& c = m.states;
  return Square(c, Rel::from_pairs(c, c, pl), Rel::from_pairs(c, c, lt),
                Rel::from_pairs(c, c, rt), Rel::from_pairs(c, c, pr));
}

Square btm_oracle(const Btm& m, int n) {
  if (n < 0) throw std::invalid_argument("btm_oracle: negative tape length");
  if (n == 0) return identity_square(CnCodec(m.states, m.alphabet, 0).carrier());

  const auto g = btm_graph(m, n);
  const int nq = static_cast<int>(m.states.size());
  std::vector<std::pair<std::size_t, std::size_t>> pl, lt, rt, pr;
  for (std::size_t w = 0; w < g.codec.word_count(); ++w) {
    for (int q = 0; q < nq; ++q) {
      const std::size_t source = g.codec.encode_value(q, w);
      {
        const auto seen = reachable_from(g.adj, g.node(w, 0, q), /*seed_self=*/true);
        for (std::size_t v = 0; v < g.codec.word_count(); ++v) {
          for (int p = 0; p < nq; ++p) {
            const std::size_t target = g.codec.encode_value(p, v);
            if (seen[static_cast<std::size_t>(g.node(v, n, p))]) pr.emplace_back(target, source);
            if (seen[static_cast<std::size_t>(g.node(v, 0, p))]) lt.emplace_back(target, source);
          }
        }
      }
      {
        const auto seen = reachable_from(g.adj, g.node(w, n, q), /*seed_self=*/true);
        for (std::size_t v = 0; v < g.codec.word_count(); ++v) {
          for (int p = 0; p < nq; ++p) {
            const std::size_t target = g.codec.encode_value(p, v);
            if (seen[static_cast<std::size_t>(g.node(v, 0, p))]) pl.emplace_back(target, source);
            if (seen[static_cast<std::size_t>(g.node(v, n, p))]) rt.emplace_back(target, source);
          }
        }
      }
    }
  }
  const Carrier& c = g.codec.carrier();
  return Square(c, Rel::from_pairs(c, c, pl), Rel::from_pairs(c, c, lt),
                Rel::from_pairs(c, c, rt), Rel::from_pairs(c, c, pr));
}

std::vector<std::string> config_edges(const TwoWayAutomaton& m, std::span<const int> word) {
  check_word(m.alphabet, word);
  const int nq = static_cast<int>(m.states.size());
  const auto adj = twoway_graph(m, word);
  std::string text;
  for (int x : word) text += m.alphabet.label(static_cast<std::size_t>(x));

  auto name = [&](int node) {
    const int q = node % nq;
    const int pos = node / nq;
    return m.states.label(static_cast<std::size_t>(q)) + "@" + std::to_string(pos) + ":" + text;
  };
  std::vector<std::string> out;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (int w : adj[v]) out.push_back(name(static_cast<int>(v)) + " -> " + name(w));
  }
  return out;
}

std::vector<std::string> config_edges(const Btm& m, int n) {
  if (n < 0) throw std::invalid_argument("config_edges: negative tape length");
  const auto g = btm_graph(m, n);
  const int nq = static_cast<int>(m.states.size());

  auto name = [&](int node) {
    const int q = node % nq;
    const int pos = (node / nq) % (n + 1);
    const auto w = static_cast<std::size_t>(node / (nq * (n + 1)));
    std::string text;
    for (int x : g.codec.word_of_value(w)) text += m.alphabet.label(static_cast<std::size_t>(x));
    return m.states.label(static_cast<std::size_t>(q)) + "@" + std::to_string(pos) + ":" + text;
  };
  std::vector<std::string> out;
  for (std::size_t v = 0; v < g.adj.size(); ++v) {
    for (int w : g.adj[v]) out.push_back(name(static_cast<int>(v)) + " -> " + name(w));
  }
  return out;
}

}  // namespace relmach
