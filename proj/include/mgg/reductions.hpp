#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgg/position_io.hpp"

namespace mgg {

enum class ReductionKind { vgeo_dir, vgeo_undir, egeo_undir, egeo_dir, nimg_rm, nimg_mr };

inline constexpr std::array<ReductionKind, 6> kAllReductions = {
    ReductionKind::vgeo_dir, ReductionKind::vgeo_undir, ReductionKind::egeo_undir,
    ReductionKind::egeo_dir, ReductionKind::nimg_rm,    ReductionKind::nimg_mr};

std::string_view reduction_name(ReductionKind kind);
std::optional<ReductionKind> parse_reduction(std::string_view name);

/// Outcome identity a reduction claims: o_source(G, start) == o_target(G', start').
struct ClaimedIdentity {
  Game source_game;
  Convention source_convention;
  Game target_game;
  Convention target_convention;
};

ClaimedIdentity claimed_identity(ReductionKind kind);

/// Graph kind a reduction's source must have, or nullopt if either works.
std::optional<GraphKind> source_graph_kind(ReductionKind kind);

/// One entry of the source-entity -> target-vertex map. Labels follow the
/// gadget naming: `3_1`, `3_2`, `3'`, `(0,2)_6`, `X_1`, `d_(1,2)`, `c2_0`.
struct NameEntry {
  std::string source_entity;
  Vertex target;
};

struct ReductionOutput {
  PositionRecord target;
  std::vector<NameEntry> name_map;
  ClaimedIdentity claim;
};

/// u -> u_1 = u, plus a fresh out-neighbour u_2 = n + u. Start v_1.
ReductionOutput reduce_vgeo_dir_misere(const Graph& g, Vertex v);

/// Undirected graph: u keeps its id, pendant u' = n + u, and the 8 gadget
/// vertices of the i-th arc (canonical order) are 2n + 8i .. 2n + 8i + 7.
ReductionOutput reduce_vgeo_dir_to_undir_misere(const Graph& g, Vertex u);

/// Pendant edge (u_1, u_2) per vertex; u_1 = u, u_2 = n + u.
ReductionOutput reduce_egeo_undir_misere(const Graph& g, Vertex v);
ReductionOutput reduce_egeo_dir_misere(const Graph& g, Vertex v);

/// X_u = u with one token; the i-th arc gets a, b, c, d = n + 4i .. n + 4i + 3
/// with weights 1, 1, 1, 2.
ReductionOutput reduce_vgeo_dir_to_nimgrm_misere(const Graph& g, Vertex u);

/// Chain x - c1_x - c2_x - c3_x of single-token vertices per vertex x,
/// c_j = n + 3x + (j - 1). Loops of g are kept.
ReductionOutput reduce_nimgmr_normal_to_misere(const Graph& g, const WeightMap& w, Vertex u);

/// Dispatch on a source position; throws std::invalid_argument when the
/// position does not match the reduction's source game or graph kind.
ReductionOutput reduce(ReductionKind kind, const Position& source);

/// Size and degree bookkeeping of a reduction output against its source.
/// Empty when every check holds.
std::vector<std::string> bookkeeping_violations(ReductionKind kind, const Position& source,
                                                const ReductionOutput& out);

/// `src-entity -> tgt-vertex-id` lines.
std::string format_name_map(const std::vector<NameEntry>& names);

}  // namespace mgg
