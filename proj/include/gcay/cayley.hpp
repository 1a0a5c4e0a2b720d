#pragma once

// Cayley graphs of Gamma(n, alpha): construction from a connection set,
// breadth-first search with implicit neighbor generation (no adjacency is
// materialized), diameter-2 verification by BFS or by certificate, and
// deterministic edge-list / DOT export.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gcay/scheme.hpp"

namespace gcay::cayley {

using groups::GammaElement;
using groups::GroupContext;

struct InvalidGeneratingSet : std::invalid_argument {
  explicit InvalidGeneratingSet(const std::string& what) : std::invalid_argument(what) {}
};

struct Disconnected : std::runtime_error {
  u64 reached;
  explicit Disconnected(u64 r)
      : std::runtime_error("graph is disconnected: reached " + std::to_string(r) + " vertices"),
        reached(r) {}
};

struct MethodUnavailable : std::invalid_argument {
  explicit MethodUnavailable(const std::string& what) : std::invalid_argument(what) {}
};

struct TooLarge : std::length_error {
  explicit TooLarge(const std::string& what) : std::length_error(what) {}
};

struct CayleyGraph {
  GroupContext ctx;
  std::vector<GammaElement> gens;  // sorted by vertex index
  u64 order = 0;
  size_t degree() const { return gens.size(); }
};

inline CayleyGraph build_graph(std::vector<GammaElement> X, const GroupContext& ctx) {
  if (X.empty()) throw InvalidGeneratingSet("connection set is empty");
  std::vector<u64> idx;
  idx.reserve(X.size());
  for (const GammaElement& g : X) {
    if (groups::gamma_is_identity(g)) throw InvalidGeneratingSet("connection set contains the identity");
    idx.push_back(groups::vertex_index(g, ctx));
  }
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw InvalidGeneratingSet("connection set has repeated elements");
  for (const GammaElement& g : X) {
    u64 ti = groups::vertex_index(groups::gamma_inv(g, ctx), ctx);
    if (!std::binary_search(idx.begin(), idx.end(), ti))
      throw InvalidGeneratingSet("connection set is not inverse-closed");
  }
  CayleyGraph gr;
  gr.ctx = ctx;
  gr.order = ctx.order();
  gr.gens.reserve(idx.size());
  for (u64 t : idx) gr.gens.push_back(groups::vertex_unindex(t, ctx));
  return gr;
}

inline CayleyGraph build_graph(const scheme::GeneratorScheme& sch, const GroupContext& ctx) {
  return build_graph(scheme::expand_x(sch, ctx), ctx);
}

namespace detail {

struct Bitset {
  std::vector<u64> words;
  explicit Bitset(u64 bits) : words((bits + 63) / 64, 0) {}
  bool test(u64 i) const { return (words[i >> 6] >> (i & 63)) & 1u; }
  void set(u64 i) { words[i >> 6] |= u64(1) << (i & 63); }
  u64 count() const {
    u64 c = 0;
    for (u64 w : words) c += u64(__builtin_popcountll(w));
    return c;
  }
};

}  // namespace detail

struct BfsReport {
  u64 source = 0;
  std::vector<u64> level_sizes;  // level_sizes[0] = 1
  u32 eccentricity = 0;
  u64 reached = 0;
};

// full BFS from an arbitrary source; throws Disconnected if not everything
// is reached
inline BfsReport bfs_from(const CayleyGraph& gr, u64 source) {
  const GroupContext& ctx = gr.ctx;
  detail::Bitset visited(gr.order), frontier(gr.order);
  visited.set(source);
  frontier.set(source);
  BfsReport rep;
  rep.source = source;
  rep.level_sizes.push_back(1);
  rep.reached = 1;
  while (true) {
    detail::Bitset next(gr.order);
    u64 added = 0;
    for (u64 w = 0; w < frontier.words.size(); ++w) {
      u64 bits = frontier.words[w];
      while (bits) {
        u64 b = bits & (~bits + 1);
        u64 v = (w << 6) + u64(__builtin_ctzll(bits));
        bits ^= b;
        GammaElement gv = groups::vertex_unindex(v, ctx);
        for (const GammaElement& g : gr.gens) {
          u64 t = groups::vertex_index(groups::gamma_mul(gv, g, ctx), ctx);
          if (!visited.test(t)) {
            visited.set(t);
            next.set(t);
            ++added;
          }
        }
      }
    }
    if (added == 0) break;
    rep.level_sizes.push_back(added);
    rep.reached += added;
    ++rep.eccentricity;
    frontier = std::move(next);
  }
  if (rep.reached != gr.order) throw Disconnected(rep.reached);
  return rep;
}

inline BfsReport eccentricity_from_identity(const CayleyGraph& gr) { return bfs_from(gr, 0); }

enum class VerifyMethod { bfs, certificate, both };

inline const char* method_name(VerifyMethod m) {
  switch (m) {
    case VerifyMethod::bfs: return "bfs";
    case VerifyMethod::certificate: return "certificate";
    default: return "both";
  }
}

struct DiameterVerdict {
  u64 order = 0;
  u64 degree = 0;
  bool diameter2 = false;  // diameter is exactly 2
  VerifyMethod method = VerifyMethod::bfs;
  std::vector<u64> levels;            // [1, |X|, rest] when the check passes
  std::optional<u64> witness;         // a vertex at distance > 2, if any
  bool methods_agree = true;
};

namespace detail {

// marks 1, X and X·X; diameter <= 2 iff every vertex is marked
inline void mark_two_balls(const CayleyGraph& gr, Bitset& seen, unsigned threads) {
  const GroupContext& ctx = gr.ctx;
  seen.set(0);
  for (const GammaElement& g : gr.gens) seen.set(groups::vertex_index(g, ctx));
  if (threads <= 1) {
    for (const GammaElement& a : gr.gens)
      for (const GammaElement& b : gr.gens)
        seen.set(groups::vertex_index(gamma_mul(a, b, ctx), ctx));
    return;
  }
  std::vector<std::atomic<u64>> shared(seen.words.size());
  for (size_t w = 0; w < shared.size(); ++w) shared[w].store(seen.words[w], std::memory_order_relaxed);
  std::vector<std::thread> pool;
  std::atomic<size_t> cursor{0};
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      while (true) {
        size_t i = cursor.fetch_add(1);
        if (i >= gr.gens.size()) break;
        const GammaElement& a = gr.gens[i];
        for (const GammaElement& b : gr.gens) {
          u64 v = groups::vertex_index(gamma_mul(a, b, ctx), ctx);
          shared[v >> 6].fetch_or(u64(1) << (v & 63), std::memory_order_relaxed);
        }
      }
    });
  for (auto& th : pool) th.join();
  for (size_t w = 0; w < shared.size(); ++w) seen.words[w] = shared[w].load(std::memory_order_relaxed);
}

}  // namespace detail

// The bfs method checks {1} ∪ X ∪ X·X = Gamma and that some vertex lies at
// distance exactly 2.  The certificate method re-verifies the symbolic
// certificate, instantiates every determinant as a unit mod n, and checks the
// scheme expands into the graph's connection set.
inline DiameterVerdict diameter2_verify(const CayleyGraph& gr, VerifyMethod method,
                                        const scheme::GeneratorScheme* sch = nullptr,
                                        const scheme::DiameterCertificate* cert = nullptr,
                                        unsigned threads = 1) {
  DiameterVerdict v;
  v.order = gr.order;
  v.degree = gr.degree();
  v.method = method;

  auto run_bfs = [&](DiameterVerdict& out) {
    detail::Bitset seen(gr.order);
    detail::mark_two_balls(gr, seen, threads);
    u64 reached = seen.count();
    u64 deg = gr.degree();
    if (reached == gr.order && gr.order > 1 + deg) {
      out.levels = {1, deg, gr.order - 1 - deg};
      return true;
    }
    if (reached == gr.order) return false;  // diameter <= 1
    for (u64 w = 0; w < seen.words.size(); ++w) {
      u64 bits = ~seen.words[w];
      if (w == seen.words.size() - 1 && gr.order % 64 != 0)
        bits &= (u64(1) << (gr.order % 64)) - 1;
      if (bits) {
        out.witness = (w << 6) + u64(__builtin_ctzll(bits));
        break;
      }
    }
    return false;
  };

  auto run_cert = [&]() {
    if (sch == nullptr) throw MethodUnavailable("certificate verification needs a scheme");
    scheme::DiameterCertificate local;
    const scheme::DiameterCertificate* c = cert;
    if (c == nullptr) {
      local = scheme::certificate_build(*sch);
      c = &local;
    }
    if (!scheme::certificate_verify(*c, *sch)) return false;
    if (!scheme::certificate_units_ok(*c, gr.ctx)) return false;
    auto X = scheme::expand_x(*sch, gr.ctx);
    std::vector<u64> have;
    have.reserve(gr.gens.size());
    for (const GammaElement& g : gr.gens) have.push_back(groups::vertex_index(g, gr.ctx));
    for (const GammaElement& g : X)
      if (!std::binary_search(have.begin(), have.end(), groups::vertex_index(g, gr.ctx)))
        return false;
    return gr.order > 1 + u64(gr.degree());
  };

  switch (method) {
    case VerifyMethod::bfs:
      v.diameter2 = run_bfs(v);
      break;
    case VerifyMethod::certificate:
      v.diameter2 = run_cert();
      break;
    case VerifyMethod::both: {
      bool b = run_bfs(v);
      bool c = run_cert();
      v.methods_agree = (b == c);
      v.diameter2 = b && c;
      break;
    }
  }
  return v;
}

namespace detail {

inline constexpr u64 default_edge_cap = u64(1) << 27;

template <class EmitEdge>
inline void for_each_edge(const CayleyGraph& gr, EmitEdge&& emit) {
  const GroupContext& ctx = gr.ctx;
  std::vector<u64> nbr;
  for (u64 v = 0; v < gr.order; ++v) {
    GammaElement gv = groups::vertex_unindex(v, ctx);
    nbr.clear();
    for (const GammaElement& g : gr.gens) {
      u64 w = groups::vertex_index(gamma_mul(gv, g, ctx), ctx);
      if (w > v) nbr.push_back(w);
    }
    std::sort(nbr.begin(), nbr.end());
    for (u64 w : nbr) emit(v, w);
  }
}

inline std::string header_line(const CayleyGraph& gr) {
  return "# gamma-cayley n=" + std::to_string(gr.ctx.n) + " alpha=" + std::to_string(gr.ctx.alpha) +
         " order=" + std::to_string(gr.order) + " degree=" + std::to_string(gr.degree());
}

inline void check_edge_cap(const CayleyGraph& gr, u64 cap) {
  u64 edges = gr.order * u64(gr.degree()) / 2;
  if (edges > cap)
    throw TooLarge("edge list has " + std::to_string(edges) + " edges, cap is " + std::to_string(cap));
}

// write via a temporary then rename, so readers never see a partial file
template <class WriteBody>
inline void atomic_write(const std::string& path, WriteBody&& body) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    body(out);
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace detail

inline void export_edges(const CayleyGraph& gr, std::ostream& out) {
  out << detail::header_line(gr) << "\n";
  detail::for_each_edge(gr, [&](u64 v, u64 w) { out << v << " " << w << "\n"; });
}

inline void export_edges(const CayleyGraph& gr, const std::string& path,
                         u64 edge_cap = detail::default_edge_cap) {
  detail::check_edge_cap(gr, edge_cap);
  detail::atomic_write(path, [&](std::ostream& out) { export_edges(gr, out); });
}

inline void export_dot(const CayleyGraph& gr, std::ostream& out) {
  out << "graph G {\n";
  detail::for_each_edge(gr, [&](u64 v, u64 w) { out << "  " << v << " -- " << w << ";\n"; });
  out << "}\n";
}

inline void export_dot(const CayleyGraph& gr, const std::string& path,
                       u64 edge_cap = detail::default_edge_cap) {
  detail::check_edge_cap(gr, edge_cap);
  detail::atomic_write(path, [&](std::ostream& out) { export_dot(gr, out); });
}

}  // namespace gcay::cayley
