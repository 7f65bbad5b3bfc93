#ifndef PPP_ENUMERATE_HPP
#define PPP_ENUMERATE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ppp/tuples.hpp"

namespace ppp {

/// All parallelogram polyominoes with width + rows = n, no duplicates.
std::vector<Pp> all_pps(int n);

struct GenLimits {
    int max_sp = 0;
    int max_thickness = 0;
};

struct GenStats {
    long long marked_shapes = 0;  // admissible marked objects inspected
    long long degenerate = 0;
    long long thickness_zero = 0; // k = 0 trunks, kept out of the population
    long long over_thickness = 0;
    long long trunk_errors = 0;   // SpiralRow / TrunkShapeMismatch
    int height_bound = 0;         // saturated column-height bound
};

/// All non-degenerated PPPs with sp <= max_sp and thickness in
/// [1, max_thickness], sorted by encoding. The column-height bound is grown
/// until two consecutive bounds produce identical output.
std::vector<Ppp> all_ppps(const GenLimits& lim, const Conventions& conv,
                          GenStats* stats = nullptr);

struct CountTable {
    std::map<std::tuple<int, int, int>, long long> cells; // (width, height, k)
    std::map<int, long long> by_sp;
};

CountTable count_table(const GenLimits& lim, const Conventions& conv);
CountTable count_table(const std::vector<Ppp>& pop, const Conventions& conv);

/// (sp, thickness) -> number of strips (distinct-cut orbits).
std::map<std::pair<int, int>, long long> orbit_counts(const GenLimits& lim,
                                                      const Conventions& conv);
std::map<std::pair<int, int>, long long> orbit_counts(const std::vector<Ppp>& pop,
                                                      const Conventions& conv);

/// Ordered trees with the given root color and exactly the given numbers of
/// non-root black/white vertices.
std::vector<OrderedTree> all_trees(Color root, int blacks, int whites);

/// FourTuples of exact weight (blacks, whites), roots included.
std::vector<FourTuple> all_tuples(int blacks, int whites);

/// Nonempty tuple sequences with total weight (blacks + whites) <= max_weight.
std::vector<std::vector<FourTuple>> all_tuple_sequences(int max_weight);

/// Brute-force counts, all independent of the series pipelines.
std::map<std::pair<int, int>, long long> tuple_counts(int max_weight);           // Q
std::map<std::pair<int, int>, long long> marked_tuple_counts(int max_weight);    // M
std::map<std::pair<int, int>, long long> marked_sequence_counts(int max_weight); // P1
std::map<int, long long> necklace_counts(int max_weight);                        // S

struct PropertyResult {
    std::string name;
    bool pass = true;
    long long checked = 0;
    std::string counterexample; // minimal failing encoding, empty when passing
    std::string note;
};

struct CombinationReport {
    Conventions conv;
    GenStats stats;
    std::vector<PropertyResult> properties;
    bool all_pass() const {
        for (const auto& p : properties)
            if (!p.pass) return false;
        return true;
    }
};

struct CalibrationReport {
    int max_sp = 0;
    int max_thickness = 0;
    std::vector<CombinationReport> combos;
    /// Conventions combinations passing every property.
    std::vector<Conventions> fully_passing() const;
};

/// Runs the property battery for every conventions combination.
CalibrationReport calibrate(int max_sp, int max_thickness);

std::string to_json(const CalibrationReport& report);

} // namespace ppp

#endif
