#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tt/counts.hpp"
#include "tt/types.hpp"

namespace tt {

// Vector files hold one real number per line (17 significant digits on
// output, round-tripping doubles); a ".json" path/name selects a single
// JSON array of numbers instead. Complex vectors interleave re,im — 2N
// numbers for N complex values. Parse errors report line numbers; when
// `expected` is nonzero a count mismatch is an error.

RealVec parse_real_vector(std::istream& in, bool json, std::size_t expected,
                          const std::string& name);
RealVec read_real_vector(const std::string& path, std::size_t expected);
void write_real_vector(std::ostream& out, const RealVec& x, bool json);
void write_real_vector(const std::string& path, const RealVec& x);

ComplexVec read_complex_vector(const std::string& path, std::size_t expected);
void write_complex_vector(std::ostream& out, const ComplexVec& x, bool json);
void write_complex_vector(const std::string& path, const ComplexVec& x);

// Count table: rows sorted by kind name then N ascending. CSV uses '.'
// decimals, ',' separators, '\n' line endings, header row
// "kind,N,adds,mults,flops,predicted,match"; JSON is an array of records
// with integer counts.
struct CountTable {
    std::vector<CountReport> rows;

    void sort_rows();
    std::string to_csv() const;
    std::string to_json() const;
};

}  // namespace tt
