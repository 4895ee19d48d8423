#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sgt/game.hpp"

namespace sgt {

using EdgeSet = std::set<Edge>;

/// Permissive strategy template (P, L, C) over a game's Even edges:
/// prohibited edges are never used, each live-group whose source recurs
/// must have a recurring edge, co-live edges are used finitely often.
struct StrategyTemplate {
    EdgeSet prohibited;
    std::vector<EdgeSet> live_groups;
    EdgeSet colive;

    bool empty() const { return prohibited.empty() && live_groups.empty() && colive.empty(); }
    /// All edges mentioned anywhere in the template.
    EdgeSet all_edges() const;

    bool operator==(const StrategyTemplate&) const = default;
};

/// Equality up to live-group order.
bool semantically_equal(const StrategyTemplate& a, const StrategyTemplate& b);

/// Throws SemanticError unless every template edge is a game edge with
/// an Even source.
void validate_template(const StochasticGame& g, const StrategyTemplate& t);

/// Edges listed both as prohibited and co-live.  Legal (prohibition
/// dominates) but worth a lint warning.
EdgeSet prohibited_colive_overlap(const StrategyTemplate& t);

struct TemplateSize {
    std::size_t overall;
    std::size_t prohibited;
    std::size_t live;
    std::size_t colive;

    bool operator==(const TemplateSize&) const = default;
};

/// |T| = |P| + sum_L |L| + |C|, plus the element-wise triple.
TemplateSize size(const StrategyTemplate& t);

/// Truth of the template's induced formula on prefix . cycle^omega:
/// no prohibited edge anywhere, no co-live edge among recurring edges
/// (transient use allowed), and every live-group triggered by a
/// recurring source discharged by a recurring edge.
bool lasso_satisfies_template(const StochasticGame& g, const Lasso& l, const StrategyTemplate& t);

/// Why two templates cannot be merged.
struct Conflict {
    std::string reason;
    std::optional<EdgeSet> live_group; // witness: group with no usable edge left
    std::optional<VertexId> vertex;    // witness: Even vertex with no allowed edge left
};

using CombineResult = std::variant<StrategyTemplate, Conflict>;

/// Component-wise union of two templates, unless the merge is
/// unsatisfiable: (a) some live-group's edges all end up prohibited or
/// co-live, or (b) some Even vertex (within `winning`, or anywhere if
/// null) keeps no non-prohibited edge.
CombineResult combine(const StochasticGame& g, const StrategyTemplate& a,
                      const StrategyTemplate& b, const VertexSet* winning = nullptr);

inline bool is_conflict(const CombineResult& r) { return std::holds_alternative<Conflict>(r); }

/// Component-wise superset check: sound syntactic witness that `a` is
/// no more permissive than `b`.
bool superset_implies_less_permissive(const StrategyTemplate& a, const StrategyTemplate& b);

enum class PermOrder {
    Equal,
    LeftLess,     // t1's lasso language strictly inside t2's
    RightLess,    // t2's strictly inside t1's
    Incomparable,
};

const char* to_string(PermOrder o);

inline constexpr std::uint64_t kDefaultLassoBudget = 50'000'000;

/// Compares the sets of lassos (|prefix|+|cycle| <= k, starting in
/// `from`) satisfying each template.  Exact over that universe; a
/// strict-inclusion or incomparability verdict refutes the full
/// language equality as well.  Throws ResourceError past `budget`
/// enumeration steps.
PermOrder compare_permissiveness_bounded(const StochasticGame& g, const StrategyTemplate& t1,
                                         const StrategyTemplate& t2, const VertexSet& from,
                                         std::size_t k,
                                         std::uint64_t budget = kDefaultLassoBudget);

} // namespace sgt
