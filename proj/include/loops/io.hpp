#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "loops/algebra.hpp"
#include "loops/loop_table.hpp"
#include "loops/perm.hpp"
#include "loops/search.hpp"

namespace loops {

// Loop table file: first data line is the order n, followed by n lines of
// n space-separated entries (row r lists the products r*c). Blank lines
// and lines starting with '#' are ignored. The identity must be 1 unless
// normalize_identity is set, in which case a foreign two-sided identity
// is relabeled to 1.
LoopTable read_loop_table(std::istream& in, const std::string& label = "",
                          bool normalize_identity = false);
LoopTable read_loop_table_file(const std::string& path, bool normalize_identity = false);
void write_loop_table(std::ostream& out, const LoopTable& t,
                      const std::vector<std::string>& comments = {});
void write_loop_table_file(const std::string& path, const LoopTable& t,
                           const std::vector<std::string>& comments = {});

// Generator file: each data line is one permutation given by its images;
// degree comes from the first line and is enforced on the rest.
std::vector<Perm> read_generators(std::istream& in);
std::vector<Perm> read_generators_file(const std::string& path);
void write_generators(std::ostream& out, const std::vector<Perm>& gens,
                      const std::vector<std::string>& comments = {});

// Algebra file: order line, n addition rows, a '#bracket' separator, and
// n bracket rows. Entries are 1-based with 1 the additive zero.
Algebra read_algebra(std::istream& in, const std::string& label = "");
Algebra read_algebra_file(const std::string& path);
void write_algebra(std::ostream& out, const Algebra& a,
                   const std::vector<std::string>& comments = {});

// Full analysis report as 'key=value' lines with a fixed key order, so
// identical inputs produce identical bytes.
struct ReportOptions {
    std::size_t group_cap = default_group_cap;
};
std::string analysis_report(const LoopTable& t, const ReportOptions& opts = {});

// Census CSV with the fixed header row.
std::string census_csv(const std::vector<CensusRecord>& records);

} // namespace loops
