#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "widthlab/configuration.hpp"
#include "widthlab/structure.hpp"

namespace widthlab {

/// Audit trail of one cubic extraction. The three exposure stages plus the
/// residual matching partition the input matching exactly. Half-edge pairs
/// are stored (low, high); merges store (absorbed cell, surviving cell),
/// with survivor -1 when a contraction annihilates its own cell.
struct ExtractionTrace {
    std::vector<std::array<std::uint32_t, 2>> s1_edges;
    std::vector<std::array<std::uint32_t, 2>> s2_edges;
    std::vector<std::array<std::uint32_t, 2>> s3_edges;
    std::vector<std::array<std::int64_t, 2>> s3_merges;      // aligned with s3_edges
    std::vector<std::vector<std::uint32_t>> cell_history;    // per output cell, survivor first
    std::vector<std::array<std::uint32_t, 3>> output_half_edges;  // original ids, ascending
    std::vector<std::array<std::uint32_t, 2>> residual_edges;
};

inline std::string to_text(const ExtractionTrace& trace) {
    std::ostringstream os;
    for (const auto& e : trace.s1_edges) os << "S1 " << e[0] << ' ' << e[1] << '\n';
    for (const auto& e : trace.s2_edges) os << "S2 " << e[0] << ' ' << e[1] << '\n';
    for (std::size_t i = 0; i < trace.s3_edges.size(); ++i) {
        os << "S3 " << trace.s3_edges[i][0] << ' ' << trace.s3_edges[i][1] << " merge "
           << trace.s3_merges[i][0] << ' ';
        if (trace.s3_merges[i][1] < 0)
            os << '-';
        else
            os << trace.s3_merges[i][1];
        os << '\n';
    }
    return os.str();
}

struct CubicExtraction {
    std::uint32_t m = 0;
    Configuration cubic;  // every cell has size three, half-edges renumbered
    ExtractionTrace trace;
};

/// Refine a minimum-degree-two configuration into a 3-regular one that the
/// input multigraph subdivides. Deterministic given the input: ties for the
/// next leaf and the next size-two cell go to the lowest index.
///
/// Stage 1 consumes every matching edge touching a cell of degree >= 4;
/// stage 2 repeatedly consumes the matching edge of a leaf half-edge (the
/// only unmatched one in its cell) until none remains, leaving cells of size
/// two or three; stage 3 contracts matching edges out of size-two cells,
/// merging the cell into its partner's cell (or annihilating it when the
/// edge closes inside the cell), until every surviving cell has size three.
inline CubicExtraction extract_cubic(const Configuration& config) {
    const std::size_t s = config.cell_count();
    const std::uint32_t h = config.half_edge_count();
    std::uint64_t big_half_edges = 0;  // sum of i*D_i over i >= 4
    std::uint64_t degree3_cells = 0;
    for (std::size_t c = 0; c < s; ++c) {
        const std::uint32_t d = config.cell_degree(c);
        if (d < 2) throw std::domain_error("extract_cubic: cell of degree < 2");
        if (d == 3) ++degree3_cells;
        if (d >= 4) big_half_edges += d;
    }

    CubicExtraction out;
    ExtractionTrace& trace = out.trace;

    std::vector<bool> matched(h, false);
    std::vector<std::uint32_t> unmatched_in(s);
    std::vector<bool> touched(s, false);
    std::uint64_t touched3 = 0;
    std::uint64_t leaf_cells = 0;
    for (std::size_t c = 0; c < s; ++c) unmatched_in[c] = config.cell_degree(c);

    auto consume = [&](std::uint32_t e) {
        matched[e] = true;
        const std::uint32_t c = config.cell_of(e);
        if (!touched[c]) {
            touched[c] = true;
            if (config.cell_degree(c) == 3) ++touched3;
        }
        const std::uint32_t before = unmatched_in[c]--;
        if (before == 2) ++leaf_cells;
        if (before == 1) --leaf_cells;
    };

    // S1: edges incident to high-degree cells.
    for (std::uint32_t e = 0; e < h; ++e) {
        if (matched[e] || config.cell_degree(config.cell_of(e)) < 4) continue;
        const std::uint32_t f = config.partner(e);
        consume(e);
        consume(f);
        trace.s1_edges.push_back({std::min(e, f), std::max(e, f)});
    }
    if (touched3 + leaf_cells > big_half_edges)
        throw std::logic_error("extract_cubic: stage-1 counting invariant violated");

    // S2: close out leaves.
    std::set<std::uint32_t> leaves;
    auto scan_cell_for_leaf = [&](std::uint32_t c) {
        if (unmatched_in[c] != 1) return;
        for (std::uint32_t e = config.cell_begin(c); e < config.cell_end(c); ++e)
            if (!matched[e]) {
                leaves.insert(e);
                return;
            }
    };
    for (std::size_t c = 0; c < s; ++c) scan_cell_for_leaf(static_cast<std::uint32_t>(c));
    while (!leaves.empty()) {
        const std::uint32_t e = *leaves.begin();
        leaves.erase(leaves.begin());
        if (matched[e]) continue;  // matched meanwhile as some earlier leaf's partner
        const std::uint32_t f = config.partner(e);
        consume(e);
        consume(f);
        trace.s2_edges.push_back({std::min(e, f), std::max(e, f)});
        scan_cell_for_leaf(config.cell_of(f));
        if (touched3 + leaf_cells > big_half_edges)
            throw std::logic_error("extract_cubic: stage-2 counting invariant violated");
    }

    // Remaining cells now have size two or three.
    struct LiveCell {
        std::vector<std::uint32_t> half_edges;  // ascending
        std::vector<std::uint32_t> history;     // survivor first
        bool alive = false;
    };
    std::vector<LiveCell> live(s);
    std::vector<std::uint32_t> cell_now(h, 0);  // current live cell per unmatched half-edge
    std::set<std::uint32_t> size_two;
    std::uint64_t size_three = 0;
    for (std::size_t c = 0; c < s; ++c) {
        if (unmatched_in[c] == 0) continue;
        if (unmatched_in[c] != 2 && unmatched_in[c] != 3)
            throw std::logic_error("extract_cubic: residual cell size outside {2,3}");
        LiveCell& cell = live[c];
        cell.alive = true;
        cell.history = {static_cast<std::uint32_t>(c)};
        for (std::uint32_t e = config.cell_begin(c); e < config.cell_end(c); ++e)
            if (!matched[e]) {
                cell.half_edges.push_back(e);
                cell_now[e] = static_cast<std::uint32_t>(c);
            }
        if (cell.half_edges.size() == 2)
            size_two.insert(static_cast<std::uint32_t>(c));
        else
            ++size_three;
    }

    // S3: contract size-two cells.
    while (!size_two.empty()) {
        const std::uint32_t w = *size_two.begin();
        size_two.erase(size_two.begin());
        LiveCell& absorbed = live[w];
        const std::uint32_t e = absorbed.half_edges.front();
        const std::uint32_t f = config.partner(e);
        matched[e] = true;
        matched[f] = true;
        trace.s3_edges.push_back({std::min(e, f), std::max(e, f)});
        const std::uint32_t v = cell_now[f];
        if (v == w) {
            // The matching edge closes inside the cell: an isolated loop
            // vanishes together with its cell.
            trace.s3_merges.push_back({static_cast<std::int64_t>(w), -1});
            absorbed.alive = false;
            absorbed.half_edges.clear();
            continue;
        }
        LiveCell& survivor = live[v];
        const std::uint64_t size_three_before = size_three;
        std::vector<std::uint32_t> merged;
        merged.reserve(survivor.half_edges.size() + absorbed.half_edges.size() - 2);
        for (std::uint32_t x : survivor.half_edges)
            if (x != f) merged.push_back(x);
        for (std::uint32_t x : absorbed.half_edges)
            if (x != e) merged.push_back(x);
        std::sort(merged.begin(), merged.end());
        const bool survivor_was_two = survivor.half_edges.size() == 2;
        survivor.half_edges = std::move(merged);
        for (std::uint32_t x : survivor.half_edges) cell_now[x] = v;
        survivor.history.insert(survivor.history.end(), absorbed.history.begin(), absorbed.history.end());
        absorbed.alive = false;
        absorbed.half_edges.clear();
        trace.s3_merges.push_back({static_cast<std::int64_t>(w), static_cast<std::int64_t>(v)});
        if (survivor_was_two && survivor.half_edges.size() != 2)
            throw std::logic_error("extract_cubic: contraction changed a size-two cell's size");
        if (size_three != size_three_before)
            throw std::logic_error("extract_cubic: contraction changed the size-three count");
    }

    // Collect the surviving cells (all of size three) in ascending id order
    // and renumber their half-edges.
    std::vector<std::uint32_t> new_id(h, 0);
    std::uint32_t m = 0;
    for (std::size_t c = 0; c < s; ++c) {
        if (!live[c].alive) continue;
        const LiveCell& cell = live[c];
        if (cell.half_edges.size() != 3)
            throw std::logic_error("extract_cubic: surviving cell is not cubic");
        std::array<std::uint32_t, 3> orig{};
        for (int i = 0; i < 3; ++i) {
            orig[static_cast<std::size_t>(i)] = cell.half_edges[static_cast<std::size_t>(i)];
            new_id[cell.half_edges[static_cast<std::size_t>(i)]] = 3 * m + static_cast<std::uint32_t>(i);
        }
        trace.output_half_edges.push_back(orig);
        trace.cell_history.push_back(cell.history);
        ++m;
    }
    if (static_cast<std::uint64_t>(m) + big_half_edges < degree3_cells)
        throw std::logic_error("extract_cubic: output cell count below its guaranteed bound");

    std::vector<std::uint32_t> partner(3ULL * m);
    for (const auto& cell : trace.output_half_edges) {
        for (std::uint32_t e : cell) {
            const std::uint32_t f = config.partner(e);
            partner[new_id[e]] = new_id[f];
            trace.residual_edges.push_back({std::min(e, f), std::max(e, f)});
        }
    }
    std::sort(trace.residual_edges.begin(), trace.residual_edges.end());
    trace.residual_edges.erase(std::unique(trace.residual_edges.begin(), trace.residual_edges.end()),
                               trace.residual_edges.end());

    out.m = m;
    out.cubic = Configuration(DegreeSequence(m, 3), std::move(partner));
    return out;
}

struct ExtractionReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Re-derive the structural claims of an extraction from its trace: the
/// exposure stages partition the matching; intermediate cells have size two
/// or three; the size-three count respects its lower bound; the residual
/// graph is an induced subgraph of the input graph; and the input graph
/// restricted to surviving plus contracted cells is a subdivision of the
/// output (checked through degree-two suppression).
inline ExtractionReport validate_extraction(const Configuration& config, const CubicExtraction& result) {
    ExtractionReport report;
    auto fail = [&](const std::string& what) {
        report.ok = false;
        report.violations.push_back(what);
    };

    const std::size_t s = config.cell_count();
    const std::uint32_t h = config.half_edge_count();
    std::uint64_t big_half_edges = 0;
    std::uint64_t degree3_cells = 0;
    for (std::size_t c = 0; c < s; ++c) {
        if (config.cell_degree(c) == 3) ++degree3_cells;
        if (config.cell_degree(c) >= 4) big_half_edges += config.cell_degree(c);
    }

    // Partition of the matching.
    std::vector<std::array<std::uint32_t, 2>> all;
    for (std::uint32_t e = 0; e < h; ++e) {
        const std::uint32_t f = config.partner(e);
        if (e < f) all.push_back({e, f});
    }
    std::vector<std::array<std::uint32_t, 2>> claimed;
    const ExtractionTrace& tr = result.trace;
    claimed.insert(claimed.end(), tr.s1_edges.begin(), tr.s1_edges.end());
    claimed.insert(claimed.end(), tr.s2_edges.begin(), tr.s2_edges.end());
    claimed.insert(claimed.end(), tr.s3_edges.begin(), tr.s3_edges.end());
    claimed.insert(claimed.end(), tr.residual_edges.begin(), tr.residual_edges.end());
    std::sort(claimed.begin(), claimed.end());
    std::sort(all.begin(), all.end());
    if (claimed != all) fail("stages plus residual do not partition the matching");

    // Replay stages 1 and 2 and check the intermediate cell sizes.
    std::vector<std::uint32_t> unmatched_in(s);
    for (std::size_t c = 0; c < s; ++c) unmatched_in[c] = config.cell_degree(c);
    auto spend = [&](const std::array<std::uint32_t, 2>& e) {
        --unmatched_in[config.cell_of(e[0])];
        --unmatched_in[config.cell_of(e[1])];
    };
    for (const auto& e : tr.s1_edges) spend(e);
    for (const auto& e : tr.s2_edges) spend(e);
    std::uint64_t threes = 0;
    std::vector<bool> in_residual_cells(s, false);
    for (std::size_t c = 0; c < s; ++c) {
        if (unmatched_in[c] == 0) continue;
        in_residual_cells[c] = true;
        if (unmatched_in[c] == 3)
            ++threes;
        else if (unmatched_in[c] != 2)
            fail("intermediate cell has size outside {2,3}");
    }
    if (threes + big_half_edges < degree3_cells) fail("size-three cell count below its lower bound");
    if (result.m + big_half_edges < degree3_cells) fail("output cell count below its lower bound");

    // Induced-subgraph property: no consumed stage-1/2 edge joins two
    // residual cells.
    for (const auto& e : tr.s1_edges)
        if (in_residual_cells[config.cell_of(e[0])] && in_residual_cells[config.cell_of(e[1])])
            fail("stage-1 edge joins two residual cells");
    for (const auto& e : tr.s2_edges)
        if (in_residual_cells[config.cell_of(e[0])] && in_residual_cells[config.cell_of(e[1])])
            fail("stage-2 edge joins two residual cells");

    // Output cells must be cubic and m consistent.
    if (result.cubic.cell_count() != result.m) fail("output cell count does not match m");
    for (std::size_t c = 0; c < result.cubic.cell_count(); ++c)
        if (result.cubic.cell_degree(c) != 3) fail("output cell is not of size three");

    // Subdivision relation: the input multigraph induced on every surviving
    // or contracted cell, with its bare paths suppressed, is the output
    // multigraph (cells listed survivor-first give the vertex alignment).
    {
        const MultiGraph whole = multigraph_of(config);
        VertexSet involved(s);
        for (const auto& hist : tr.cell_history)
            for (std::uint32_t c : hist) involved.insert(c);
        InducedSubMultigraph sub = induced_subgraph(whole, involved);
        SuppressResult sup = suppress_degree_two(sub.graph);
        const MultiGraph extracted = multigraph_of(result.cubic);
        // Survivors of the suppression, in ascending original cell id, must
        // be exactly the output cells in their output order.
        bool aligned = sup.map.old_of_new.size() == tr.cell_history.size();
        if (aligned) {
            for (std::size_t i = 0; i < sup.map.old_of_new.size(); ++i)
                if (sub.old_of_new[sup.map.old_of_new[i]] != tr.cell_history[i].front()) aligned = false;
        }
        if (!aligned)
            fail("suppression survivors do not match the output cells");
        else if (!(sup.graph == extracted))
            fail("suppressed induced multigraph differs from the output multigraph");
    }

    return report;
}

}  // namespace widthlab
