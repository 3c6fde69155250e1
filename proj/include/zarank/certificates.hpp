#pragma once

#include <optional>
#include <variant>
#include <vector>

namespace zarank {

// Vertices of both sides share one id space: u_i has id i, v_j has id
// u_count + j. Peel orders and certificate steps use these unified ids.
inline int u_id(int u_index) { return u_index; }
inline int v_id(int u_count, int v_index) { return u_count + v_index; }
inline bool id_is_u(int id, int u_count) { return id < u_count; }

struct biclique_witness {
  std::vector<int> u_vertices;
  std::vector<int> v_vertices;
  bool operator==(const biclique_witness&) const = default;
};

struct peel_step {
  int vertex = 0;  // unified id
  int degree = 0;  // degree at removal
  bool operator==(const peel_step&) const = default;
};

struct elimination_certificate {
  std::vector<peel_step> steps;
  int claimed_degeneracy = 0;
  bool operator==(const elimination_certificate&) const = default;
};

// Edge tally attached to containment-counting certificates.
struct chain3_tally {
  long long bulky_edges = 0;
  long long thin_edges = 0;
  bool operator==(const chain3_tally&) const = default;
};

struct within_bound_certificate {
  long long bound_value = 0;
  std::optional<elimination_certificate> elimination;
  std::optional<chain3_tally> tally;
  bool operator==(const within_bound_certificate&) const = default;
};

struct certificate {
  std::variant<within_bound_certificate, biclique_witness> value;
  // Populated by the grid-intersection certifier: which escalation stage of
  // the extraction produced the witness.
  std::optional<int> extraction_stage;

  bool is_within_bound() const {
    return std::holds_alternative<within_bound_certificate>(value);
  }
  const within_bound_certificate& bound() const {
    return std::get<within_bound_certificate>(value);
  }
  const biclique_witness& witness() const { return std::get<biclique_witness>(value); }
};

}  // namespace zarank
