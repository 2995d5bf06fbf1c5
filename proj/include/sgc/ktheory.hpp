#ifndef SGC_KTHEORY_HPP
#define SGC_KTHEORY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catalog.hpp"
#include "core.hpp"
#include "graphprod.hpp"
#include "ideals.hpp"

namespace sgc {

/// One direct summand K_*(C*_lambda(stabilizer)), indexed by a clique and a tuple of orbit representatives.
struct KSummand {
  std::vector<std::string> clique;
  std::vector<std::string> tuple;
  std::string stabilizer;

  bool operator==(const KSummand&) const = default;

  std::string serialize() const {
    return "clique=[" + join(clique, ",") + "] tuple=[" + join(tuple, ",") + "] stabilizer=" + stabilizer;
  }
};

struct KDescriptor {
  std::vector<KSummand> summands;
  std::vector<std::string> citations;
  std::string note;

  std::string serialize() const {
    std::string out;
    for (const auto& s : summands) out += s.serialize() + "\n";
    return out;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : summands) arr.push_back({{"clique", s.clique}, {"tuple", s.tuple}, {"stabilizer", s.stabilizer}});
    j["summands"] = arr;
    j["citations"] = citations;
    j["note"] = note;
    return j;
  }
};

/// Orbit representatives of J_P^x / G other than the orbit of P, with their stabilizers.
struct VertexKData {
  std::vector<std::string> orbit_reps;
  std::vector<std::string> stabilizers;
};

namespace detail {

/// Throws with the reason when an enumerated nonempty ideal is not known to be
/// principal. Returns the number of ideals left unconfirmed on the sample
/// ball, which a recorded "principal" annotation vouches for.
inline std::size_t require_principal_ideals(const CatalogEntry& e, std::size_t depth) {
  if (!e.principal) throw Error(e.name + ": no evidence that every nonempty constructible ideal is principal");
  EnumerationOptions eo;
  eo.depth = depth;
  eo.sample_length = depth + 2;
  auto en = enumerate_ideals(*e.backend, eo);
  const GraphSpec* g = e.backend->graph();
  std::size_t unconfirmed = 0;
  for (const auto& X : en.ideals) {
    using S = RightIdeal::Shape;
    if (X.ideal.shape == S::Standard) {
      if (!gp_principal_generator(X.ideal.standard, *g))
        throw Error(e.name + ": constructible ideal " + X.id + " is not principal");
      continue;
    }
    bool ok = X.ideal.shape == S::Empty || X.ideal.shape == S::Full || X.ideal.shape == S::Principal ||
              X.principal_up_to_L.has_value();
    if (ok) continue;
    if (!e.find("principal"))
      throw Error(e.name + ": constructible ideal " + X.id + " has no generator in the ball of length " +
                  std::to_string(en.sample_length));
    ++unconfirmed;
  }
  return unconfirmed;
}

}  // namespace detail

/// Single orbit [P] with stabilizer P^*.
inline KDescriptor principal_case_descriptor(const CatalogEntry& e, std::size_t depth = 2) {
  KDescriptor d;
  if (!e.backend) {
    const Annotation* cl = e.find("class-number");
    if (!cl || !e.find("independence")) throw Error(e.name + ": no class group data recorded");
    d.summands.push_back({{}, {"P"}, e.units});
    d.citations = {cl->anchor, "independence:R<->ax+b"};
    d.note = "one summand per ideal class; " + cl->fact;
    return d;
  }
  if (e.ambient.empty() && !e.find("toeplitz")) throw Error(e.name + ": no Toeplitz embedding recorded");
  auto unconfirmed = detail::require_principal_ideals(e, depth);
  d.summands.push_back({{}, {"P"}, e.units});
  d.citations = {"THM:K", e.find("principal") ? e.find("principal")->anchor : "pPCAPqP"};
  if (e.trivial_units) d.note = "K_*(C) -> K_*(C*_lambda(P)) is an isomorphism";
  if (unconfirmed)
    d.note += (d.note.empty() ? "" : "; ") + std::to_string(unconfirmed) +
              " ideals have no generator in the sample ball, principality taken from the catalog";
  return d;
}

/// P^* summand, then one summand per nonempty clique W and tuple in prod_{w in W} X_w.
inline KDescriptor graph_product_k_index(const GraphSpec& g, const std::vector<VertexKData>& data,
                                         const std::string& p_star = "trivial") {
  std::size_t n = g.size();
  if (data.size() != n) throw Error("one vertex datum per vertex required");
  if (n > 20) throw Error("clique enumeration is limited to 20 vertices");
  for (const auto& v : data)
    if (v.orbit_reps.size() != v.stabilizers.size()) throw Error("one stabilizer per orbit representative required");
  KDescriptor d;
  d.summands.push_back({{}, {}, p_star});
  d.citations = {"THM:K", "Toeplitz_GraphProducts"};
  // subsets by size, then lexicographically
  std::vector<std::vector<VertexId>> cliques;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<VertexId> w;
    for (VertexId v = 0; v < n; ++v)
      if (mask >> v & 1) w.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < w.size() && clique; ++i)
      for (std::size_t j = i + 1; j < w.size() && clique; ++j) clique = g.adjacent(w[i], w[j]);
    if (clique) cliques.push_back(std::move(w));
  }
  std::stable_sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& w : cliques) {
    std::vector<std::string> names;
    for (auto v : w) names.push_back(g.name(v));
    std::vector<std::size_t> idx(w.size(), 0);
    bool any = true;
    for (auto v : w) any = any && !data[v].orbit_reps.empty();
    while (any) {
      KSummand s;
      s.clique = names;
      std::vector<std::string> stab;
      for (std::size_t i = 0; i < w.size(); ++i) {
        s.tuple.push_back(names[i] + ":" + data[w[i]].orbit_reps[idx[i]]);
        stab.push_back(data[w[i]].stabilizers[idx[i]]);
      }
      s.stabilizer = join(stab, " x ");
      d.summands.push_back(std::move(s));
      std::size_t i = w.size();
      while (i > 0) {
        --i;
        if (++idx[i] < data[w[i]].orbit_reps.size()) break;
        idx[i] = 0;
        if (i == 0) any = false;
      }
    }
  }
  return d;
}

/// Graph products of copies of N inside Z: every vertex has a single orbit.
inline KDescriptor graph_product_descriptor(const CatalogEntry& e) {
  const GraphSpec* g = e.backend ? e.backend->graph() : nullptr;
  if (!g) throw Error(e.name + " is not a graph product");
  std::vector<VertexKData> data(g->size());
  for (VertexId v = 0; v < g->size(); ++v)
    if (!g->cone(v).is_nat())
      throw Error(e.name + ": orbit data for vertex " + g->name(v) + " must be supplied");
  auto d = graph_product_k_index(*g, data, e.units);
  if (e.trivial_units) d.note = "K_*(C) -> K_*(C*_lambda(P)) is an isomorphism";
  return d;
}

}  // namespace sgc

#endif  // SGC_KTHEORY_HPP
