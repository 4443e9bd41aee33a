#include "betti/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace betti {

NonfaceComplex make_nonface_complex(int n, std::vector<Face> nonfaces) {
  if (n < 0 || n > 62) throw std::invalid_argument("vertex count out of range");
  for (const auto& f : nonfaces) {
    if (f.empty()) throw std::invalid_argument("empty nonface (the void complex is not supported)");
    if (f.max() >= n) throw std::invalid_argument("nonface vertex out of range");
  }
  auto subset = [](const Face& a, const Face& b) {
    return std::includes(b.members().begin(), b.members().end(), a.members().begin(),
                         a.members().end());
  };
  for (std::size_t i = 0; i < nonfaces.size(); ++i)
    for (std::size_t j = 0; j < nonfaces.size(); ++j)
      if (i != j && subset(nonfaces[i], nonfaces[j]))
        throw std::invalid_argument("nonface list is not an antichain (not minimal)");
  std::sort(nonfaces.begin(), nonfaces.end());
  return NonfaceComplex{n, std::move(nonfaces)};
}

MonomialIdeal stanley_reisner_ideal(const NonfaceComplex& complex) {
  std::vector<Monomial> gens;
  gens.reserve(complex.nonfaces.size());
  for (const auto& f : complex.nonfaces) {
    Exponents e = Exponents::Zero(complex.n);
    for (int v : f.members()) e[v] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(complex.n, std::move(gens));
}

NonfaceComplex clique_nonfaces(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > 62) throw std::invalid_argument("vertex count out of range");
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge vertex out of range");
    if (u == v) throw std::invalid_argument("self-loop in edge list");
    adj[u][v] = adj[v][u] = true;
  }
  std::vector<Face> nonfaces;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!adj[u][v]) nonfaces.push_back(Face(std::vector<int>{u, v}));
  return make_nonface_complex(n, std::move(nonfaces));
}

std::vector<Face> expand_restricted(const NonfaceComplex& complex, const Face& w) {
  if (complex.n > 20) throw std::invalid_argument("face expansion capped at 20 vertices");
  std::vector<std::uint32_t> bad;
  bad.reserve(complex.nonfaces.size());
  for (const auto& f : complex.nonfaces) {
    std::uint32_t m = 0;
    for (int v : f.members()) m |= 1u << v;
    bad.push_back(m);
  }
  std::uint32_t wmask = 0;
  for (int v : w.members()) {
    if (v >= complex.n) throw std::invalid_argument("restriction vertex out of range");
    wmask |= 1u << v;
  }
  std::vector<Face> out;
  // walk subsets of wmask (standard submask enumeration), low to high
  std::uint32_t sub = 0;
  for (;;) {
    bool ok = true;
    for (std::uint32_t b : bad)
      if ((b & sub) == b) {
        ok = false;
        break;
      }
    if (ok) {
      std::vector<int> mem;
      for (int v = 0; v < complex.n; ++v)
        if (sub & (1u << v)) mem.push_back(v);
      out.emplace_back(std::move(mem));
    }
    if (sub == wmask) break;
    sub = (sub - wmask) & wmask;  // next submask in increasing order
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> expand_face_list(const NonfaceComplex& complex) {
  std::vector<int> all(complex.n);
  for (int v = 0; v < complex.n; ++v) all[v] = v;
  return expand_restricted(complex, Face(std::move(all)));
}

std::vector<std::pair<Face, Monomial>> covering_candidates(const MonomialIdeal& ideal, int size) {
  const int n = ideal.n_vars();
  const int r = ideal.n_generators();
  const std::uint64_t full = n == 0 ? 0 : (~0ull >> (64 - n));
  std::vector<std::uint64_t> supp(r, 0);
  for (int j = 0; j < r; ++j)
    for (int v = 0; v < n; ++v)
      if (ideal.generator(j).exponent(v) > 0) supp[j] |= 1ull << v;
  std::vector<std::uint64_t> suffix(r + 1, 0);
  for (int j = r - 1; j >= 0; --j) suffix[j] = suffix[j + 1] | supp[j];

  std::vector<std::pair<Face, Monomial>> out;
  if (size < 0 || size > r) return out;
  const Monomial label{Exponents::Ones(n)};
  std::vector<int> pick;
  pick.reserve(size);
  std::function<void(int, std::uint64_t)> rec = [&](int next, std::uint64_t mask) {
    if (static_cast<int>(pick.size()) == size) {
      if (mask == full) out.emplace_back(Face(pick), label);
      return;
    }
    const int need = size - static_cast<int>(pick.size());
    for (int v = next; v + need <= r; ++v) {
      if ((mask | suffix[v]) != full) break;  // no later generator can complete the cover
      pick.push_back(v);
      rec(v + 1, mask | supp[v]);
      pick.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace betti
